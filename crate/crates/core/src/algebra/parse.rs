//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!   expr   := ['-'] term (('+' | '-') term)*
//!   term   := factor (('*' | '/') factor)*
//!   factor := base ('^' uint)?
//!   base   := uint | var | '(' expr ')'
//!   var    := [A-Za-z][A-Za-z0-9_]*
//!
//! `/` requires a nonzero constant right operand; over F_p a divisor that
//! reduces to zero mod p is reported as a non-invertible coefficient.

use crate::algebra::poly::{PolyRing, Polynomial};
use crate::error::{AlgebraError, Result};
use num::bigint::BigInt;
use std::sync::Arc;

pub fn parse_polynomial(ring: &Arc<PolyRing>, input: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring: ring.clone(),
        bytes: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: Arc<PolyRing>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> AlgebraError {
        AlgebraError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            let _ = self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    if !f.is_constant() {
                        return Err(AlgebraError::Parse {
                            position: at,
                            message: "division is only defined by constants".to_string(),
                        });
                    }
                    if f.is_zero() {
                        return Err(AlgebraError::Parse {
                            position: at,
                            message: "coefficient is not invertible (divisor reduces to zero)"
                                .to_string(),
                        });
                    }
                    let c = f.leading_coeff().unwrap();
                    let inv = self.ring.field().inv(c).map_err(|_| AlgebraError::Parse {
                        position: at,
                        message: "coefficient is not invertible".to_string(),
                    })?;
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let n = self.uint()?;
            if n > u32::MAX as u128 {
                return Err(AlgebraError::Parse {
                    position: at,
                    message: "exponent too large".to_string(),
                });
            }
            Ok(base.pow(n as u32))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|b| b.is_ascii_digit())
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let n: BigInt = text.parse().unwrap();
                let c = self.ring.field().from_bigint(&n);
                if c.is_zero() {
                    Ok(self.ring.zero())
                } else {
                    let mono = crate::algebra::monomial::Monomial::one(self.ring.nvars());
                    Ok(self.ring.from_terms(vec![(mono, c)]))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|b| b.is_ascii_alphanumeric() || b == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var_poly(i)),
                    None => Err(AlgebraError::UnknownVariable {
                        name: name.to_string(),
                        position: start,
                    }),
                }
            }
            _ => Err(self.err("expected a number, variable, or `(`")),
        }
    }

    fn uint(&mut self) -> Result<u128> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer too large"))
    }
}
