//! Parser for the complex scalar grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := INT ['/' INT] | '√2' | 'sqrt2' | 'i' | 's'
//! ```
//!
//! `s` abbreviates `√2/2`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ComplexRootTwo, Scalar};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let n = self.rest()[..len].parse().ok();
        self.pos += len;
        n
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat("+") {
            Some(false)
        } else if self.eat("-") || self.eat("−") {
            Some(true)
        } else {
            None
        }
    }

    fn factor(&mut self) -> Result<Option<ComplexRootTwo>> {
        self.skip_ws();
        if let Some(p) = self.digits() {
            let q = if self.eat("/") {
                let at = self.pos;
                let q = self.digits().ok_or_else(|| Error::parse(at, "expected denominator"))?;
                if q == BigInt::from(0) {
                    return Err(Error::parse(at, "zero denominator"));
                }
                q
            } else {
                BigInt::from(1)
            };
            let r = BigRational::new(p, q);
            let zero = BigRational::from_integer(BigInt::from(0));
            return Ok(Some(ComplexRootTwo::new(r, zero.clone(), zero.clone(), zero)));
        }
        if self.eat("√2") || self.eat("sqrt2") {
            return Ok(Some(ComplexRootTwo::sqrt2()));
        }
        if self.eat("i") {
            return Ok(Some(ComplexRootTwo::i()));
        }
        if self.eat("s") {
            return Ok(Some(ComplexRootTwo::half_sqrt2()));
        }
        Ok(None)
    }

    fn term(&mut self) -> Result<ComplexRootTwo> {
        let start = self.pos;
        let mut value = self
            .factor()?
            .ok_or_else(|| Error::parse(start, "expected a number, √2, i or s"))?;
        loop {
            let save = self.pos;
            self.skip_ws();
            let starred = self.eat("*");
            match self.factor()? {
                Some(f) => value = value.mul(&f),
                None if starred => return Err(Error::parse(self.pos, "expected factor after `*`")),
                None => {
                    self.pos = save;
                    return Ok(value);
                }
            }
        }
    }
}

pub(super) fn parse_complex(text: &str) -> Result<ComplexRootTwo> {
    let mut cur = Cursor { src: text, pos: 0 };
    cur.skip_ws();
    let mut negative = cur.sign().unwrap_or(false);
    let mut total = ComplexRootTwo::zero();
    loop {
        let t = cur.term()?;
        total = total.add(&if negative { t.negated() } else { t });
        cur.skip_ws();
        if cur.pos == text.len() {
            return Ok(total);
        }
        negative = cur.sign().ok_or_else(|| Error::parse(cur.pos, "expected `+` or `-`"))?;
        cur.skip_ws();
    }
}
