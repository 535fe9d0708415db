//! Parser for polynomial strings such as `3/4*x1^2*C1 - (1+2*E(3))*y2`.

use std::str::FromStr;
use std::sync::Arc;

use malachite_q::Rational;

use crate::cyclo::Cyclo;
use crate::error::ExactError;
use crate::mpoly::{MPoly, Ring};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

fn err<T>(msg: impl Into<String>) -> Result<T, ExactError> {
    Err(ExactError::Parse(msg.into()))
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExactError> {
        if self.eat(c) {
            Ok(())
        } else {
            err(format!("expected '{}' at {}", c as char, self.pos))
        }
    }

    fn integer(&mut self) -> Result<String, ExactError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(format!("expected integer at {}", start));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> Result<MPoly, ExactError> {
        let mut acc = MPoly::zero(self.ring);
        let mut first = true;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else if self.eat(b'+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly, ExactError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat(b'/') {
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    return err("division by a non-constant or zero");
                }
                acc = acc.scale(&d.constant_term().inv());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MPoly, ExactError> {
        let b = self.atom()?;
        if self.eat(b'^') {
            let e: u32 = self
                .integer()?
                .parse()
                .map_err(|_| ExactError::Parse("bad exponent".into()))?;
            Ok(b.pow(e))
        } else {
            Ok(b)
        }
    }

    fn atom(&mut self) -> Result<MPoly, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let r = Rational::from_str(&digits).map_err(|_| ExactError::Parse(digits))?;
                Ok(MPoly::constant(self.ring, Cyclo::from(r)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
                if let Some(i) = self.ring.index(&name) {
                    return Ok(MPoly::var(self.ring, i));
                }
                if name == "E" && self.eat(b'(') {
                    let n: u32 = self
                        .integer()?
                        .parse()
                        .map_err(|_| ExactError::Parse("bad conductor".into()))?;
                    self.expect(b')')?;
                    if n == 0 {
                        return err("E(0)");
                    }
                    return Ok(MPoly::constant(self.ring, Cyclo::zeta(n, 1)));
                }
                err(format!("unknown variable '{}'", name))
            }
            other => err(format!(
                "unexpected {:?} at {}",
                other.map(|c| c as char),
                self.pos
            )),
        }
    }
}

/// Parses a polynomial expression over `ring`.
pub fn parse_poly(ring: &Arc<Ring>, s: &str) -> Result<MPoly, ExactError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return err(format!("trailing input at {}", p.pos));
    }
    Ok(e)
}

/// Parses a scalar such as `-3/4` or `(1+E(3))`.
pub fn parse_cyclo(s: &str) -> Result<Cyclo, ExactError> {
    let ring = Ring::new(Vec::<(&str, (u32, u32))>::new())?;
    let p = parse_poly(&ring, s)?;
    Ok(p.constant_term())
}

impl MPoly {
    pub fn parse(ring: &Arc<Ring>, s: &str) -> Result<MPoly, ExactError> {
        parse_poly(ring, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::new(vec![("x1", (1, 0)), ("y1", (0, 1)), ("C1", (1, 1))]).unwrap();
        for s in [
            "3*x1^2*C1 - 1/2*y1 + 7",
            "(1+2*E(3))*x1*y1 - C1^2",
            "-x1",
            "0",
            "(-1-E(3))*x1",
        ] {
            let p = parse_poly(&r, s).unwrap();
            let q = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, q, "{s} -> {p}");
        }
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_cyclo("-3/4").unwrap(), Cyclo::frac(-3, 4));
        assert_eq!(parse_cyclo("E(3)^3").unwrap(), Cyclo::one());
        assert!(parse_cyclo("foo").is_err());
    }
}
