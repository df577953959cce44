//! Text input for rings, polynomials and ideals.
//!
//! ```text
//! ideal    := '(' polylist? ')'
//! polylist := poly (',' poly)*
//! poly     := ('+'|'-')? product (('+'|'-') product)*
//! product  := factor ('*'? factor)*
//! factor   := atom ('^' uint)?
//! atom     := number | var | '(' poly ')'
//! ```
//! Numbers are integers or `a/b`; whitespace is ignored.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::coeff::Field;
use super::monomial::TermOrder;
use super::poly::Polynomial;
use super::ring::{Limits, PolyRing};

/// A parsed ideal: its generators and whether all of them are homogeneous.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub generators: Vec<Polynomial>,
    pub homogeneous: bool,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

fn syntax(offset: usize, message: &str) -> Error {
    Error::Syntax {
        offset,
        message: message.to_string(),
    }
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(syntax(
                self.pos,
                &format!("expected `{}`, found `{}`", c as char, d as char),
            )),
            None => Err(syntax(
                self.pos,
                &format!("expected `{}`, found end of input", c as char),
            )),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(if self.pos >= self.src.len() {
                syntax(self.pos, "expected a number, found end of input")
            } else {
                syntax(self.pos, "expected a number")
            });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn ident(&mut self) -> (usize, String) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        (
            start,
            std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .to_string(),
        )
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(')
    }

    fn number(&mut self) -> Result<BigRational> {
        let num = self.uint()?;
        let mut q = BigRational::from_integer(num);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let pos = self.pos;
            let den = self.uint()?;
            if den.is_zero() {
                return Err(syntax(pos, "zero denominator"));
            }
            q /= BigRational::from_integer(den);
        }
        Ok(q)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(b')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.number()?;
                Ok(Polynomial::constant(
                    self.ring,
                    self.ring.field().from_rational(&q)?,
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let (_, name) = self.ident();
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(Error::UnknownVariable(name.clone()))?;
                Ok(Polynomial::var(self.ring, idx))
            }
            None => Err(syntax(
                at.max(self.pos),
                "expected a term, found end of input",
            )),
            Some(_) => Err(syntax(self.pos, "expected a term")),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.uint()?;
        let e = u32::try_from(&k)
            .ok()
            .filter(|&v| v <= u16::MAX as u32)
            .ok_or_else(|| syntax(start, "exponent too large"))?;
        if base.terms().len() > 1 && e as i64 > self.ring.limits().max_degree as i64 {
            return Err(syntax(start, "exponent too large"));
        }
        Ok(base.pow(e))
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if !self.starts_factor() {
                break;
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let first = self.product()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

/// Parses a single polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut c = Cursor {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let p = c.poly()?;
    if let Some(_) = c.peek() {
        return Err(syntax(c.pos, "unexpected trailing input"));
    }
    Ok(p)
}

/// Parses `( p1, p2, ... )` over `ring`.
pub fn parse_ideal(text: &str, ring: &Arc<PolyRing>) -> Result<ParsedIdeal> {
    let mut c = Cursor {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    c.expect(b'(')?;
    let mut gens = Vec::new();
    if c.peek() == Some(b')') {
        c.pos += 1;
    } else {
        loop {
            gens.push(c.poly()?);
            match c.peek() {
                Some(b',') => c.pos += 1,
                Some(b')') => {
                    c.pos += 1;
                    break;
                }
                Some(_) => return Err(syntax(c.pos, "expected `,` or `)`")),
                None => return Err(syntax(c.pos, "expected `,` or `)`, found end of input")),
            }
        }
    }
    if c.peek().is_some() {
        return Err(syntax(c.pos, "unexpected trailing input"));
    }
    let homogeneous = gens.iter().all(|g| g.is_homogeneous());
    Ok(ParsedIdeal {
        generators: gens,
        homogeneous,
    })
}

/// Parses `ring v1,v2,... / char p / order`; the char and order parts are
/// optional (defaults: char 0, grevlex).
pub fn parse_ring(text: &str) -> Result<Arc<PolyRing>> {
    let t = text.trim();
    let body = t
        .strip_prefix("ring")
        .ok_or_else(|| syntax(0, "expected `ring`"))?;
    let offset = text.len() - body.len();
    let parts: Vec<&str> = body.split('/').collect();
    let names: Vec<String> = parts[0]
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Err(syntax(offset, "no variables declared"));
    }
    let mut field = Field::Rational;
    let mut order = TermOrder::Grevlex;
    for p in &parts[1..] {
        let p = p.trim();
        if let Some(ch) = p.strip_prefix("char") {
            let ch: u64 = ch
                .trim()
                .parse()
                .map_err(|_| syntax(offset, "bad characteristic"))?;
            field = Field::from_characteristic(ch)?;
        } else if p == "grevlex" {
            order = TermOrder::Grevlex;
        } else if p == "lex" {
            order = TermOrder::Lex;
        } else {
            return Err(syntax(offset, &format!("unknown ring option `{}`", p)));
        }
    }
    PolyRing::from_names(names, field, order, Limits::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        parse_ring("ring z0,z1,z2,x,y / char 0 / grevlex").unwrap()
    }

    #[test]
    fn round_trip_display() {
        let r = ring();
        let p = parse_poly("x^2 + z0*y", &r).unwrap();
        assert_eq!(p.to_string(), "x^2 + z0*y");
        let q = parse_poly(" - 1/2 x*y +3z1^2", &r).unwrap();
        assert_eq!(q.to_string(), "3*z1^2 - 1/2*x*y");
    }

    #[test]
    fn empty_ideal() {
        let r = ring();
        let i = parse_ideal("()", &r).unwrap();
        assert!(i.generators.is_empty());
        assert!(i.homogeneous);
    }

    #[test]
    fn truncated_input_reports_offset() {
        let r = ring();
        match parse_ideal("(x^2 +", &r) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn unknown_variable() {
        let r = ring();
        assert_eq!(
            parse_ideal("(x, w)", &r).unwrap_err(),
            Error::UnknownVariable("w".into())
        );
    }

    #[test]
    fn coefficient_mod_p() {
        let r = parse_ring("ring x,y / char 2").unwrap();
        assert!(matches!(
            parse_poly("1/2*x", &r),
            Err(Error::CoefficientNotRepresentable(_, 2))
        ));
        assert_eq!(parse_poly("3x+y", &r).unwrap().to_string(), "x + y");
    }

    #[test]
    fn homogeneity_flag() {
        let r = ring();
        assert!(!parse_ideal("(x^2 + y, y^2)", &r).unwrap().homogeneous);
    }

    #[test]
    fn parentheses_and_powers() {
        let r = ring();
        let p = parse_poly("z1^2*(z0*x + z1*y) - (x - y)^2", &r).unwrap();
        let q = parse_poly("z0*z1^2*x + z1^3*y - x^2 + 2*x*y - y^2", &r).unwrap();
        assert_eq!(p, q);
        assert!(matches!(
            parse_poly("(x + y", &r),
            Err(Error::Syntax { .. })
        ));
    }
}
