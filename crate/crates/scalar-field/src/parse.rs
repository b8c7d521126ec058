//! Recursive-descent parser for the scalar text grammar.
//!
//! Accepts the same language that [`crate::Scalar`]'s `Display` emits:
//! integer literals, the variable `t`, `+ - * / ^`, and parentheses, with
//! `*` optional between a coefficient and `t` (both `2t` and `2*t` parse).

use crate::{Scalar, ScalarError};
use num::bigint::BigInt;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
}

pub fn parse_scalar(input: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        input,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err(&format!("unexpected trailing input at byte {}", p.pos)));
    }
    Ok(value)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{msg} in {:?}", self.input))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.factor()?)?;
            } else {
                self.skip_ws();
                // Implicit multiplication: a digit run directly followed by
                // `t` or an opening parenthesis.
                match self.peek() {
                    Some('t') | Some('(') => acc = &acc * &self.factor()?,
                    _ => return Ok(acc),
                }
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        self.skip_ws();
        let mut sign = 1i64;
        while let Some(c) = self.peek() {
            match c {
                '-' => {
                    sign = -sign;
                    self.pos += 1;
                    self.skip_ws();
                }
                '+' => {
                    self.pos += 1;
                    self.skip_ws();
                }
                _ => break,
            }
        }
        let mut base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let neg = self.eat('-');
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            base = base
                .pow(if neg { -e } else { e })
                .map_err(|_| self.err("inverse of zero in exponent"))?;
        }
        if sign < 0 {
            base = -base;
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing closing parenthesis"));
                }
                Ok(inner)
            }
            Some('t') => {
                self.pos += 1;
                Ok(Scalar::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::from_poly(crate::Poly::constant(n)))
            }
            _ => Err(self.err(&format!("unexpected input at byte {}", self.pos))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(&format!("expected integer at byte {start}")));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<BigInt>()
            .map_err(|e| self.err(&format!("bad integer literal: {e}")))
    }
}
