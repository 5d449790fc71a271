use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

/// The two-element semiring of truth values: `+` is OR, `·` is AND and the
/// involution is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Boolean(pub bool);

impl Scalar for Boolean {
    const NAME: &'static str = "boolean";

    fn zero() -> Self {
        Boolean(false)
    }

    fn one() -> Self {
        Boolean(true)
    }

    fn add(&self, other: &Self) -> Self {
        Boolean(self.0 || other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Boolean(self.0 && other.0)
    }

    fn conj(&self) -> Self {
        *self
    }

    fn is_zero(&self) -> bool {
        !self.0
    }

    fn neg(&self) -> Result<Self> {
        if self.0 {
            Err(Error::Unsupported(
                "the boolean semiring has no additive inverse of 1".into(),
            ))
        } else {
            Ok(*self)
        }
    }

    // 1 + 1 = 1, so s = 1 already satisfies 2·s·s = 1.
    fn teleport_scalar() -> Option<Self> {
        Some(Boolean(true))
    }

    fn phases() -> Vec<Self> {
        vec![Boolean(true)]
    }

    fn test_support() -> Vec<Self> {
        vec![Boolean(false), Boolean(true)]
    }

    fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "0" | "false" => Ok(Boolean(false)),
            "1" | "true" => Ok(Boolean(true)),
            other => Err(Error::parse(0, format!("not a boolean scalar: `{other}`"))),
        }
    }
}

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_plus_one_is_one() {
        assert_eq!(Boolean::one().add(&Boolean::one()), Boolean::one());
    }

    #[test]
    fn conj_is_identity() {
        assert_eq!(Boolean::one().conj(), Boolean::one());
        assert_eq!(Boolean::zero().conj(), Boolean::zero());
    }

    #[test]
    fn minus_one_is_unsupported() {
        assert!(matches!(Boolean::one().neg(), Err(Error::Unsupported(_))));
        assert_eq!(Boolean::zero().neg().unwrap(), Boolean::zero());
    }

    #[test]
    fn exactly_two_values() {
        let all = Boolean::test_support();
        assert_eq!(all.len(), 2);
        for x in &all {
            for y in &all {
                assert!(all.contains(&x.add(y)));
                assert!(all.contains(&x.mul(y)));
            }
        }
    }

    #[test]
    fn parses_both_spellings() {
        assert_eq!(Boolean::parse("1").unwrap(), Boolean(true));
        assert_eq!(Boolean::parse(" false ").unwrap(), Boolean(false));
        assert!(Boolean::parse("2").is_err());
    }
}
