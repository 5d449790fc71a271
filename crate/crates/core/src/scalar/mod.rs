//! Exact commutative semirings with an involution.
//!
//! A [`Scalar`] is an element of the hom-set of endomorphisms of the tensor
//! unit. Two instances ship: [`Boolean`] (relations) and [`ComplexRootTwo`]
//! (exact arithmetic in Q(i, √2)).

mod boolean;
mod complex;
mod parse;

use std::fmt;
use std::hash::Hash;

pub use boolean::Boolean;
pub use complex::ComplexRootTwo;

use crate::error::Result;

/// An element of a commutative semiring equipped with an involutive
/// automorphism `conj`.
///
/// Implementations are immutable values with exact structural equality.
pub trait Scalar: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Selector used on the command line and in reports.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Additive inverse. Semirings without one report
    /// [`Error::Unsupported`](crate::Error::Unsupported).
    fn neg(&self) -> Result<Self>;

    /// A scalar `s` with `2·conj(s)·s = 1`, if the semiring has one.
    fn teleport_scalar() -> Option<Self>;

    /// Units `u` with `conj(u)·u = 1` used to build random unitaries.
    fn phases() -> Vec<Self>;

    /// Small entry pool for seeded random morphisms.
    fn test_support() -> Vec<Self>;

    fn parse(text: &str) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        Ok(self.add(&other.neg()?))
    }

    fn from_count(n: usize) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc.add(&Self::one()))
    }

    /// `conj(x) = x`.
    fn is_self_adjoint(&self) -> bool {
        self.conj() == *self
    }
}

/// Sums an iterator of scalars.
pub fn sum<'a, S: Scalar>(items: impl IntoIterator<Item = &'a S>) -> S {
    items.into_iter().fold(S::zero(), |acc, x| acc.add(x))
}

/// Runtime selector for the two shipped semirings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiringKind {
    Boolean,
    ComplexRootTwo,
}

impl SemiringKind {
    pub fn name(self) -> &'static str {
        match self {
            SemiringKind::Boolean => Boolean::NAME,
            SemiringKind::ComplexRootTwo => ComplexRootTwo::NAME,
        }
    }
}

impl std::str::FromStr for SemiringKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boolean" | "bool" | "rel" => Ok(SemiringKind::Boolean),
            "complex-root-two" | "complex" => Ok(SemiringKind::ComplexRootTwo),
            other => Err(crate::Error::parse(0, format!("unknown semiring `{other}`"))),
        }
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
