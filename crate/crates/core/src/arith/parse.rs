//! Text grammar for polynomials.
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff | coeff '*' mono | mono
//! mono  := power ('*' power)*
//! power := var ['^' int]
//! coeff := int ['/' int]
//! ```
//!
//! Whitespace is ignored everywhere.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::{MultiPoly, PolyRing};
use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return None,
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

fn parse_power(lx: &mut Lexer, ring: &PolyRing, exps: &mut [u16]) -> Result<()> {
    let at = lx.pos;
    let Some(name) = lx.ident() else {
        return lx.err("expected a variable");
    };
    let Some(i) = ring.var_index(name) else {
        return Err(Error::UnknownVariable(name.to_string()));
    };
    let mut e: u32 = 1;
    if lx.eat(b'^') {
        let k = lx.integer()?;
        e = match u32::try_from(k) {
            Ok(v) if v <= u16::MAX as u32 => v,
            _ => {
                return Err(Error::Parse {
                    offset: at,
                    message: "exponent too large".into(),
                })
            }
        };
    }
    let total = exps[i] as u32 + e;
    if total > u16::MAX as u32 {
        return Err(Error::Parse {
            offset: at,
            message: "exponent too large".into(),
        });
    }
    exps[i] = total as u16;
    Ok(())
}

fn parse_term(lx: &mut Lexer, ring: &Arc<PolyRing>) -> Result<(Monomial, Scalar)> {
    let mut exps = vec![0u16; ring.nvars()];
    let coeff = if matches!(lx.peek(), Some(c) if c.is_ascii_digit()) {
        let num = lx.integer()?;
        let den = if lx.eat(b'/') {
            let d = lx.integer()?;
            if d.is_zero() {
                return lx.err("zero denominator");
            }
            d
        } else {
            BigInt::from(1)
        };
        let q = Rational::from_bigints(num, den);
        let c = ring.field().from_rational(&q).ok_or(Error::Parse {
            offset: lx.pos,
            message: format!("denominator of {q} vanishes in {}", ring.field()),
        })?;
        if !lx.eat(b'*') {
            return Ok((Monomial::from_exponents(&exps), c));
        }
        c
    } else {
        ring.field().one()
    };
    parse_power(lx, ring, &mut exps)?;
    while lx.eat(b'*') {
        parse_power(lx, ring, &mut exps)?;
    }
    Ok((Monomial::from_exponents(&exps), coeff))
}

impl MultiPoly {
    /// Parses a polynomial over `ring`. Variables must belong to the ring.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<MultiPoly> {
        let mut lx = Lexer {
            src: text.as_bytes(),
            pos: 0,
        };
        if lx.peek().is_none() {
            return lx.err("empty polynomial");
        }
        let mut terms = Vec::new();
        let mut negative = if lx.eat(b'-') {
            true
        } else {
            lx.eat(b'+');
            false
        };
        loop {
            let (m, c) = parse_term(&mut lx, ring)?;
            terms.push((m, if negative { c.neg() } else { c }));
            match lx.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return lx.err(format!("unexpected `{}`", c as char)),
            }
            lx.pos += 1;
        }
        Ok(MultiPoly::from_terms(ring, terms))
    }
}
