//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits ('/' digits)? | identifier | '(' expr ')'
//! ```

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

/// Largest total degree accepted in input; keeps exponents far from `u16` limits.
pub const MAX_DEGREE: u32 = 1000;

/// Parse `text` over `ring`; identifiers must be variables of the ring.
pub fn parse_polynomial<F: Field>(ring: &PolyRing<F>, text: &str) -> Result<Polynomial<F::Elem>> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected character '{}'", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    src: &'a [u8],
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message,
        }
    }

    fn check_degree(&self, degree: u64) -> Result<()> {
        if degree > MAX_DEGREE as u64 {
            return Err(self.error(format!("total degree {degree} exceeds {MAX_DEGREE}")));
        }
        Ok(())
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<F::Elem>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' {
                self.ring.add(&acc, &rhs)
            } else {
                self.ring.sub(&acc, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F::Elem>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.unary()?;
            self.check_degree(acc.degree().unwrap_or(0) as u64 + rhs.degree().unwrap_or(0) as u64)?;
            acc = self.ring.mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<F::Elem>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let inner = self.unary()?;
                Ok(self.ring.neg(&inner))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F::Elem>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'-') => return Err(self.error("negative exponent".into())),
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.error("expected exponent".into())),
            }
            let digits = self.digits();
            let e: u32 = digits
                .parse()
                .map_err(|_| self.error(format!("exponent '{digits}' too large")))?;
            self.check_degree(base.degree().unwrap_or(0) as u64 * e as u64)?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).to_string()
    }

    fn atom(&mut self) -> Result<Polynomial<F::Elem>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut q = BigRational::from_integer(num);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                        return Err(self.error("expected denominator".into()));
                    }
                    let den: BigInt = self.digits().parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.error("zero denominator".into()));
                    }
                    q /= BigRational::from_integer(den);
                }
                let c = self.ring.field().from_rational(&q)?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.variable_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown identifier '{name}'")))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals, DEFAULT_PRIMES};
    use crate::monomial::MonomialOrder;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn qring(names: &[&str]) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, names.iter().copied(), MonomialOrder::Grevlex)
    }

    #[test]
    fn parses_paper_binomial() {
        let r = qring(&["x1", "x2", "x3", "x4"]);
        let p = parse_polynomial(&r, "x1^2*x2 - x3*x4").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn zero_and_identities() {
        let r = qring(&["x"]);
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        assert!(parse_polynomial(&r, "(x+1)^2 - x^2 - 2*x - 1").unwrap().is_zero());
        assert!(parse_polynomial(&r, "x^0 - 1").unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let r = qring(&["x", "y"]);
        assert!(matches!(
            parse_polynomial(&r, "x + w"),
            Err(Error::Parse { column: 5, .. })
        ));
        assert!(matches!(parse_polynomial(&r, "x^-2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x^70000"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x^600*x^600"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x + * y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "(x + y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "1/0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn rational_literals_reduce_mod_p() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let r = PolyRing::new(f, ["x"], MonomialOrder::Grevlex);
        let p = parse_polynomial(&r, "2*(1/2)*x").unwrap();
        assert_eq!(p, r.var(0));
    }

    proptest! {
        #[test]
        fn print_parse_fixed_point(
            terms in proptest::collection::vec((-50i64..50, 1i64..5, 0u16..3, 0u16..3), 0..6)
        ) {
            let r = qring(&["x", "y"]);
            let mut text = String::from("0");
            for (n, d, a, b) in terms {
                text.push_str(&alloc::format!(" + ({n}/{d})*x^{a}*y^{b}"));
            }
            let p = parse_polynomial(&r, &text).unwrap();
            let printed = r.display(&p).to_string();
            let q = parse_polynomial(&r, &printed).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(printed, r.display(&q).to_string());
        }
    }
}
