//! Recursive-descent parser for the polynomial input grammar:
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := primary ('^' nat)*
//! primary  := rational | var | '(' expr ')'
//! rational := int ['/' nat]
//! var      := letter (letter | digit | '_')*
//! ```
//!
//! Whitespace is insignificant. A single leading sign is accepted at the
//! start of an expression so that entries such as `-x1^2` can be written.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::vars::Vars;
use super::Rational;
use crate::error::{Error, Result};

impl Poly {
    /// Parses and expands a polynomial expression over `vars`.
    pub fn parse(text: &str, vars: &Vars) -> Result<Poly> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            vars,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<Poly> {
        let negate_first = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let mut base = self.primary()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.natural()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.natural()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.natural()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Poly::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.vars.index_of(name) {
                    Some(i) => Ok(Poly::var(self.vars, i)),
                    None => Err(Error::UndeclaredVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.err("expected a number, a variable or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn natural(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse::<BigInt>().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    #[test]
    fn examples() {
        let v = VarTable::new(&["x1", "x2", "y"]).unwrap();
        let f = Poly::parse("(x2 - x1)*(x2^2 + x2*x1 + x1^2)", &v).unwrap();
        let expected = &Poly::var(&v, 1).pow(3) - &Poly::var(&v, 0).pow(3);
        assert_eq!(f, expected);
        assert!(Poly::parse("0", &v).unwrap().is_zero());
        let g = Poly::parse("3/2*y - x1^2*x2 + x1^2*x2", &v).unwrap();
        assert_eq!(g, Poly::var(&v, 2).scale(&Rational::new(3.into(), 2.into())));
    }

    #[test]
    fn errors_carry_positions() {
        let v = VarTable::new(&["x"]).unwrap();
        assert_eq!(
            Poly::parse("x + z", &v),
            Err(Error::UndeclaredVariable("z".into()))
        );
        match Poly::parse("x + * 2", &v) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Poly::parse("(x", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse("x^", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse("1/0", &v), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse("x y", &v), Err(Error::Syntax { .. })));
    }

    #[test]
    fn whitespace_and_leading_sign() {
        let v = VarTable::new(&["x"]).unwrap();
        let a = Poly::parse("  - x ^ 2 +1", &v).unwrap();
        let b = Poly::parse("1-x^2", &v).unwrap();
        assert_eq!(a, b);
    }
}
