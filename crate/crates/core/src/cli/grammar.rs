//! Text syntax for exponential polynomials in `n`.
//!
//! A sum of signed terms; each term is a product (`*` or juxtaposition) of
//! factors:
//!
//! * a rational `3`, `3/4`, or `(-3/4)`, optionally raised to an integer;
//! * `n` or `n^k`;
//! * an exponential `b^n` or `b^-n`, where `b` is a rational, a
//!   parenthesised rational, or the symbol `q` bound by the caller.
//!
//! `2n + 2`, `1 + 2*(-1)^n`, `q^n`, `(1/2)^n` and `-3/2*n^2*2^n` are all
//! accepted, as is everything [`ExpPoly`]'s `Display` prints.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{powi, ExpPoly, Rational};
use crate::{Error, Result};

pub fn parse_exppoly(text: &str, q: Option<&Rational>) -> Result<ExpPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        q,
        text,
    };
    let value = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    q: Option<&'a Rational>,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn sum(&mut self) -> Result<ExpPoly> {
        let mut acc = ExpPoly::zero();
        let mut negate = self.eat(b'-');
        if !negate {
            self.eat(b'+');
        }
        loop {
            let term = self.product()?;
            acc = if negate { acc - term } else { acc + term };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<ExpPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.factor()?;
                continue;
            }
            match self.peek() {
                Some(c) if c == b'n' || c == b'q' || c == b'(' || c.is_ascii_digit() => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ExpPoly> {
        match self.peek() {
            Some(b'n') => {
                self.pos += 1;
                let degree = if self.eat(b'^') { self.unsigned()? } else { 1 };
                Ok(ExpPoly::monomial(Rational::one(), degree, Rational::one()))
            }
            Some(b'q') => {
                self.pos += 1;
                let q = self
                    .q
                    .cloned()
                    .ok_or_else(|| self.error("symbol q used without a value for q"))?;
                self.power_of(q)
            }
            Some(b'(') => {
                self.pos += 1;
                let negative = self.eat(b'-');
                let mut r = self.rational()?;
                if negative {
                    r = -r;
                }
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.power_of(r)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                self.power_of(r)
            }
            _ => Err(self.error("expected a term")),
        }
    }

    /// `b`, `b^k`, `b^n` or `b^-n`.
    fn power_of(&mut self, base: Rational) -> Result<ExpPoly> {
        if !self.eat(b'^') {
            return Ok(ExpPoly::constant(base));
        }
        let negative = self.eat(b'-');
        if self.eat(b'n') {
            if base.is_zero() {
                return Err(self.error("zero exponential base"));
            }
            let base = if negative { base.recip() } else { base };
            return Ok(ExpPoly::exp(base));
        }
        let k = self.unsigned()? as i64;
        if base.is_zero() && negative && k > 0 {
            return Err(self.error("zero to a negative power"));
        }
        Ok(ExpPoly::constant(powi(&base, if negative { -k } else { k })))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn unsigned(&mut self) -> Result<usize> {
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Parse(format!("exponent {d} too large")))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        let den: BigInt = self.digits()?.parse().expect("digits");
        if den.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}
