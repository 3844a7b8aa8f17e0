//! A small parser for rational-function expressions in one symbol, such as
//! `-g*(8g^2-12g+1)/(1+g)^9` or `6M^2(53M^2-77)/((M^2-1)^2(M^2-4))`.
//!
//! Juxtaposition multiplies and binds like `*`. Integers are exact.

use num_bigint::BigInt;

use crate::algebra::{Polynomial, Rational, RationalFunction, Symbol};
use crate::error::{Error, Result};

pub fn parse_rational_function(src: &str, symbol: Symbol) -> Result<RationalFunction> {
    let mut p = Parser {
        chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        symbol,
        src,
    };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    symbol: Symbol,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::ParseExpr(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn is_symbol(&self, c: char) -> bool {
        match self.symbol {
            Symbol::M => c == 'M',
            Symbol::Gamma => c == 'g' || c == 'γ',
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                Some(c) if c == '(' || c.is_ascii_digit() || self.is_symbol(c) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = self.integer()?;
        let k: i32 = k.try_into().map_err(|_| self.error("exponent too large"))?;
        if neg && base.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(base.pow(if neg { -k } else { k }))
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(self.symbol, Rational::from_integer(n)))
            }
            Some(c) if self.is_symbol(c) => {
                self.pos += 1;
                Ok(Polynomial::var(self.symbol).into())
            }
            _ => Err(self.error("unexpected token")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }
}
