//! Parser for the canonical text grammar of rational functions.
//!
//! Accepts `+ - * / ^ ( )`, integer literals, and the variable tokens `z`,
//! `w`, `p[i,k]`, `p[i,k|slot]`, `s[i,k]`, plus bare identifiers for symbolic
//! parameters. The printer output of [`RatFunc`] round-trips through this.

use super::ratfunc::RatFunc;
use super::vars::VarId;
use crate::error::{AlgebraError, Result};
use num::BigInt;
use std::str::FromStr;

pub fn parse_ratfunc(input: &str) -> Result<RatFunc> {
    let mut p = Parser::new(input);
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(AlgebraError::Parse(format!(
            "unexpected trailing input at byte {}: `{}`",
            p.pos,
            &p.src[p.pos..]
        )));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(AlgebraError::Parse(format!(
                "expected `{}` at byte {}",
                c as char, self.pos
            )))
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.bump();
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e: i32 = e
                .try_into()
                .map_err(|_| AlgebraError::Parse("exponent too large".into()))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'-') => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::from_rat(num::BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            other => Err(AlgebraError::Parse(format!(
                "unexpected input {:?} at byte {}",
                other.map(|c| c as char),
                self.pos
            ))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(AlgebraError::Parse(format!("expected integer at byte {start}")));
        }
        BigInt::from_str(&self.src[start..self.pos])
            .map_err(|e| AlgebraError::Parse(e.to_string()))
    }

    fn index_u64(&mut self) -> Result<u64> {
        let n = self.integer()?;
        n.try_into()
            .map_err(|_| AlgebraError::Parse("index out of range".into()))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn variable(&mut self) -> Result<RatFunc> {
        let name = self.ident();
        match name.as_str() {
            "z" => Ok(RatFunc::var(VarId::Z)),
            "w" => Ok(RatFunc::var(VarId::W)),
            "p" | "s" => {
                self.expect(b'[')?;
                let node = self.index_u64()? as u8;
                self.expect(b',')?;
                let copy = self.index_u64()? as u16;
                let var = if name == "s" {
                    self.expect(b']')?;
                    VarId::sh(node, copy)
                } else if self.eat(b'|') {
                    let slot = self.index_u64()? as u8;
                    self.expect(b']')?;
                    VarId::P { slot, node, copy }
                } else {
                    self.expect(b']')?;
                    VarId::p(node, copy)
                };
                Ok(RatFunc::var(var))
            }
            _ => {
                let pn = super::vars::ParamName::new(&name).map_err(AlgebraError::Parse)?;
                Ok(RatFunc::var(VarId::Param(pn)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple() {
        let f = parse_ratfunc("(z^2 - 1) / (z - 1)").unwrap();
        assert_eq!(f, parse_ratfunc("z + 1").unwrap());
    }

    #[test]
    fn parse_vars() {
        let f = parse_ratfunc("3*z*p[1,2] - x1/2 + s[2,1]^3").unwrap();
        let text = f.to_string();
        assert_eq!(parse_ratfunc(&text).unwrap(), f);
    }

    #[test]
    fn roundtrip_display() {
        let f = parse_ratfunc("(2*z^2 + 3*z*w - 1) / (4*z - 2*p[1,1] + 1)").unwrap();
        assert_eq!(parse_ratfunc(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn reject_trailing() {
        assert!(parse_ratfunc("z + ").is_err());
        assert!(parse_ratfunc("z z").is_err());
    }
}
