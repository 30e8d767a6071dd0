use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::IntPoly;

const MAX_EXPONENT: u32 = 100_000;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
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

    fn nat(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")))
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPoly> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        match self.peek() {
            Some(b'-') => return err(at, "negative exponent"),
            Some(c) if c.is_ascii_alphabetic() || c == b'(' => {
                return err(at, "exponent must be a nonnegative integer literal")
            }
            _ => {}
        }
        let Some((start, digits)) = self.nat() else {
            return err(at, "expected exponent");
        };
        match digits.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => err(start, "exponent too large"),
        }
    }

    fn base(&mut self) -> Result<IntPoly> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected `)`");
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, digits) = self.nat().expect("digit present");
                let n: BigInt = digits.parse().expect("digits");
                Ok(IntPoly::constant(n))
            }
            Some(c) => err(at, format!("unexpected `{}`", c as char)),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parse an integer polynomial in `q`.
///
/// Grammar: `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := base ('^' nat)?`, `base := nat | 'q' | '(' expr ')' | '-' factor`.
pub fn parse_poly(text: &str) -> Result<IntPoly> {
    if !text.is_ascii() {
        let pos = text.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
        return err(pos, "input must be ASCII");
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return err(p.pos, format!("unexpected `{}`", c as char));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Family;

    #[test]
    fn suzuki_order() {
        assert_eq!(parse_poly("q^2*(q^2+1)*(q-1)").unwrap(), Family::B2Twisted.order_poly());
    }

    #[test]
    fn zero_and_eval() {
        assert!(parse_poly("0").unwrap().is_zero());
        assert_eq!(parse_poly("(q^6-1)").unwrap().eval_i64(2), BigInt::from(63));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_poly("-q^2").unwrap(), IntPoly::from_i64(&[0, 0, -1]));
        assert_eq!(parse_poly("(-q)^3").unwrap(), IntPoly::from_i64(&[0, 0, 0, -1]));
        assert_eq!(parse_poly("2*q^2 - 3*q + 1").unwrap(), IntPoly::from_i64(&[1, -3, 2]));
        assert_eq!(parse_poly("1-2-3").unwrap(), IntPoly::from_i64(&[-4]));
        assert!(parse_poly("2^3^2").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("q^-1"), Err(Error::Parse { pos: 2, msg: "negative exponent".into() }));
        assert!(matches!(parse_poly("q^q"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("q+"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("(q+1"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("q x"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("q²"), Err(Error::Parse { pos: 1, .. })));
    }

    #[test]
    fn display_round_trip() {
        let p = parse_poly("q^24*(q^2-1)*(q^6-1)*(q^8-1)*(q^12-1)").unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        assert_eq!(p, Family::F4.order_poly());
    }
}
