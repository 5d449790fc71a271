use thiserror::Error;

use crate::shape::Shape;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two shapes that had to agree did not.
    #[error("shape mismatch in {op}: expected {expected}, found {found}")]
    ShapeMismatch {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("index {index} out of range for {len} summands")]
    IndexOutOfRange { index: usize, len: usize },

    /// The active semiring lacks an element or operation the request needs.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("morphism {0} is not unitary")]
    NotUnitary(String),

    #[error("not a preparation: <psi|psi> = {0}, expected 1")]
    NotPreparation(String),

    #[error("invalid teleportation base: {0}")]
    InvalidBase(String),

    #[error("correction {index} violates f . beta_i = phi_i(f) . f")]
    CorrectionViolated { index: usize },

    #[error("commutation equation failed: {0}")]
    CommutationFailed(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn mismatch(op: &'static str, expected: &Shape, found: &Shape) -> Self {
        Error::ShapeMismatch {
            op,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
