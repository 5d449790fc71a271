use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::Result;

/// An element `a + b√2 + c·i + d·i√2` of the field Q(i, √2), stored as four
/// arbitrary-precision rationals.
///
/// `{1, √2, i, i√2}` is a Q-basis, so the 4-tuple is canonical and derived
/// equality is exact field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexRootTwo {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

impl ComplexRootTwo {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        ComplexRootTwo { a, b, c, d }
    }

    /// Integer components.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(rat(a), rat(b), rat(c), rat(d))
    }

    pub fn rational(p: i64, q: i64) -> Self {
        Self::new(
            ratio(p, q),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    pub fn integer(n: i64) -> Self {
        Self::from_ints(n, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    /// `√2/2`, the real solution of `2s² = 1`.
    pub fn half_sqrt2() -> Self {
        Self::new(
            BigRational::zero(),
            ratio(1, 2),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(&self.a * q, &self.b * q, &self.c * q, &self.d * q)
    }

    pub fn components(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn negated(&self) -> Self {
        Self::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Scalar for ComplexRootTwo {
    const NAME: &'static str = "complex-root-two";

    fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        // x = p + i·q with p, q in Q(√2); (u + v√2)(w + z√2) = uw + 2vz + (uz + vw)√2
        let two = rat(2);
        let rmul =
            |u: &BigRational, v: &BigRational, w: &BigRational, z: &BigRational| (u * w + &two * v * z, u * z + v * w);
        let (pp0, pp1) = rmul(&self.a, &self.b, &o.a, &o.b);
        let (qq0, qq1) = rmul(&self.c, &self.d, &o.c, &o.d);
        let (pq0, pq1) = rmul(&self.a, &self.b, &o.c, &o.d);
        let (qp0, qp1) = rmul(&self.c, &self.d, &o.a, &o.b);
        Self::new(pp0 - qq0, pp1 - qq1, pq0 + qp0, pq1 + qp1)
    }

    fn conj(&self) -> Self {
        Self::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn neg(&self) -> Result<Self> {
        Ok(self.negated())
    }

    fn teleport_scalar() -> Option<Self> {
        Some(Self::half_sqrt2())
    }

    fn phases() -> Vec<Self> {
        vec![Self::one(), Self::integer(-1), Self::i(), Self::i().negated()]
    }

    fn test_support() -> Vec<Self> {
        vec![
            Self::zero(),
            Self::one(),
            Self::integer(-1),
            Self::i(),
            Self::half_sqrt2(),
        ]
    }

    fn parse(text: &str) -> Result<Self> {
        super::parse::parse_complex(text)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Renders as `a + b√2 + ci + d√2i`, omitting zero terms and unit
/// coefficients. The output parses back to the same value.
impl fmt::Display for ComplexRootTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, ""), (&self.b, "√2"), (&self.c, "i"), (&self.d, "√2i")];
        let mut first = true;
        for (coef, unit) in terms {
            if coef.is_zero() {
                continue;
            }
            let negative = coef.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let magnitude = coef.abs();
            if unit.is_empty() || !magnitude.is_one() {
                write_rational(f, &magnitude)?;
            }
            f.write_str(unit)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ComplexRootTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> ComplexRootTwo {
        ComplexRootTwo::half_sqrt2()
    }

    #[test]
    fn componentwise_addition() {
        let x = ComplexRootTwo::one().add(&ComplexRootTwo::sqrt2());
        assert_eq!(x, ComplexRootTwo::from_ints(1, 1, 0, 0));
        assert_eq!(s().add(&s()), ComplexRootTwo::sqrt2());
    }

    #[test]
    fn defining_relations() {
        assert_eq!(s().mul(&s()), ComplexRootTwo::rational(1, 2));
        assert_eq!(
            ComplexRootTwo::sqrt2().mul(&ComplexRootTwo::sqrt2()),
            ComplexRootTwo::integer(2)
        );
        assert_eq!(
            ComplexRootTwo::i().mul(&ComplexRootTwo::i()),
            ComplexRootTwo::integer(-1)
        );
        let x = ComplexRootTwo::from_ints(3, -1, 2, 5);
        assert_eq!(x.mul(&ComplexRootTwo::one()), x);
    }

    #[test]
    fn conjugation() {
        assert_eq!(ComplexRootTwo::i().conj(), ComplexRootTwo::i().negated());
        assert_eq!(s().conj(), s());
        let two = ComplexRootTwo::integer(2);
        assert!(two.mul(&s().conj()).mul(&s()).is_one());
    }

    #[test]
    fn i_root_two_product() {
        // (√2)(i) = i√2, (i√2)(i√2) = -2
        let i_r2 = ComplexRootTwo::sqrt2().mul(&ComplexRootTwo::i());
        assert_eq!(i_r2, ComplexRootTwo::from_ints(0, 0, 0, 1));
        assert_eq!(i_r2.mul(&i_r2), ComplexRootTwo::integer(-2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(ComplexRootTwo::zero().to_string(), "0");
        assert_eq!(s().to_string(), "1/2√2");
        assert_eq!(ComplexRootTwo::i().negated().to_string(), "-i");
        assert_eq!(ComplexRootTwo::from_ints(1, 1, 0, 0).to_string(), "1 + √2");
        assert_eq!(
            ComplexRootTwo::new(rat(1), rat(0), rat(0), ratio(-3, 2)).to_string(),
            "1 - 3/2√2i"
        );
    }
}
