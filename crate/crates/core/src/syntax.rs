//! Canonical text syntax for polynomials.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := coeff ('*' mono)? | mono
//! coeff  := '-'? integer ('/' positive-integer)?
//! mono   := factor ('*' factor)* | '1'
//! factor := ('D' index)* '(' var ')'
//! ```
//!
//! Whitespace is ignored between tokens. `D3 D2 D1 (x)` is `D_3 D_2 D_1 (x)`,
//! outermost operator first; `D12` is the single operator with index 12.
//! As a convenience a leading `-` may also precede a bare monomial.
//!
//! The printer lists terms in strictly decreasing monomial order, omits unit
//! coefficients, and folds signs into the separators, e.g.
//! `D2 D1 (x) - D1 D2 (x) + D3 (x)`. Its output always parses back to the
//! same polynomial.

use std::fmt::Write;

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::coeff::Coeff;
use crate::term::{DiffWord, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("unknown operator D{label} at byte {pos}")]
    UnknownOperator { pos: usize, label: String },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    al: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, al: &'a Alphabet) -> Self {
        Parser { src: text.as_bytes(), pos: 0, al }
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut out = Polynomial::zero();
        let (m, c) = self.term(true)?;
        out.add_term(m, c);
        loop {
            let negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                None => break,
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            };
            self.pos += 1;
            let (m, c) = self.term(false)?;
            out.add_term(m, if negate { -c } else { c });
        }
        Ok(out)
    }

    fn term(&mut self, first: bool) -> Result<(Monomial, Coeff), ParseError> {
        let negative = self.eat(b'-');
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                let num = self.digits();
                let mut literal = num.to_string();
                if self.eat(b'/') {
                    let den = self.digits();
                    if den.is_empty() {
                        return self.err("expected denominator");
                    }
                    literal.push('/');
                    literal.push_str(den);
                }
                let mut coeff: Coeff = literal
                    .parse()
                    .map_err(|_| ParseError::Syntax { pos: start, msg: "invalid coefficient".into() })?;
                if negative {
                    coeff = -coeff;
                }
                if self.eat(b'*') {
                    Ok((self.mono()?, coeff))
                } else {
                    Ok((Monomial::one(), coeff))
                }
            }
            Some(b'D') | Some(b'(') if !negative || first => {
                let c = if negative { -Coeff::one() } else { Coeff::one() };
                Ok((self.mono()?, c))
            }
            _ => self.err("expected a coefficient or a monomial"),
        }
    }

    fn mono(&mut self) -> Result<Monomial, ParseError> {
        if self.peek() == Some(b'1') {
            let start = self.pos;
            let d = self.digits();
            if d == "1" {
                return Ok(Monomial::one());
            }
            self.pos = start;
            return self.err("expected a monomial");
        }
        let mut letters = vec![self.factor()?];
        while self.eat(b'*') {
            letters.push(self.factor()?);
        }
        Ok(Monomial::new(letters))
    }

    fn factor(&mut self) -> Result<DiffWord, ParseError> {
        let mut ops = Vec::new();
        while self.peek() == Some(b'D') {
            let at = self.pos;
            self.pos += 1;
            // The index must follow `D` directly.
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let label = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            if label.is_empty() {
                return self.err("expected operator index after `D`");
            }
            let op = label
                .parse::<u32>()
                .ok()
                .and_then(|l| self.al.op(l))
                .ok_or_else(|| ParseError::UnknownOperator { pos: at, label: label.to_string() })?;
            ops.push(op);
        }
        if !self.eat(b'(') {
            return self.err("expected `(`");
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if name.is_empty() {
            return self.err("expected variable name");
        }
        let var =
            self.al.var(name).ok_or_else(|| ParseError::UnknownVariable { pos: start, name: name.to_string() })?;
        if !self.eat(b')') {
            return self.err("expected `)`");
        }
        Ok(DiffWord::new(var, ops))
    }
}

impl Alphabet {
    pub fn parse(&self, text: &str) -> Result<Polynomial, ParseError> {
        let mut p = Parser::new(text, self);
        let poly = p.poly()?;
        debug_assert!(p.at_end());
        Ok(poly)
    }

    pub fn monomial(&self, text: &str) -> Result<Monomial, ParseError> {
        let mut p = Parser::new(text, self);
        let m = p.mono()?;
        if !p.at_end() {
            return p.err("trailing input after monomial");
        }
        Ok(m)
    }

    pub fn word(&self, text: &str) -> Result<DiffWord, ParseError> {
        let mut p = Parser::new(text, self);
        let w = p.factor()?;
        if !p.at_end() {
            return p.err("trailing input after differential word");
        }
        Ok(w)
    }

    pub fn show_word(&self, w: &DiffWord) -> String {
        let mut s = String::new();
        for &op in &w.ops {
            write!(s, "D{} ", self.op_label(op)).unwrap();
        }
        write!(s, "({})", self.var_name(w.var)).unwrap();
        s
    }

    pub fn show_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = m.letters().iter().map(|w| self.show_word(w)).collect();
        parts.join(" * ")
    }

    pub fn show(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in f.terms().rev().enumerate() {
            let shown = if i == 0 {
                c.clone()
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
                c.abs()
            };
            if m.is_one() {
                write!(s, "{shown}").unwrap();
            } else if shown.is_one() {
                s.push_str(&self.show_monomial(m));
            } else {
                write!(s, "{shown} * {}", self.show_monomial(m)).unwrap();
            }
        }
        s
    }
}
