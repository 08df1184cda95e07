//! Parser for the polynomial text grammar.
//!
//! Terms joined by `+`/`-`; a term multiplies factors with `*`; a factor is a
//! rational constant (`3`, `1/2`) or a variable with optional `^exponent`.
//! Variable names match `[A-Za-z][A-Za-z0-9_]*`. Example:
//! `a_2_1*a_1_2 - a_1_1*a_2_2`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingDescriptor;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

type Spanned = (Tok, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> u8 {
        let b = self.src[self.pos];
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        b
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let (line, col) = (self.line, self.col);
            let b = self.src[self.pos];
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'+' => {
                    self.bump();
                    out.push((Tok::Plus, line, col));
                }
                b'-' => {
                    self.bump();
                    out.push((Tok::Minus, line, col));
                }
                b'*' => {
                    self.bump();
                    out.push((Tok::Star, line, col));
                }
                b'^' => {
                    self.bump();
                    out.push((Tok::Caret, line, col));
                }
                b'/' => {
                    self.bump();
                    out.push((Tok::Slash, line, col));
                }
                b'0'..=b'9' => {
                    let mut digits = String::new();
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        digits.push(self.bump() as char);
                    }
                    out.push((Tok::Int(digits.parse().expect("digits")), line, col));
                }
                b'A'..=b'Z' | b'a'..=b'z' => {
                    let mut name = String::new();
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        name.push(self.bump() as char);
                    }
                    out.push((Tok::Ident(name), line, col));
                }
                _ => return Err(self.error(format!("unexpected character `{}`", b as char))),
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a Arc<RingDescriptor>,
    toks: Vec<Spanned>,
    idx: usize,
    last_pos: (usize, usize),
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).cloned();
        self.idx += 1;
        if let Some((_, l, c)) = &t {
            self.last_pos = (*l, *c);
        }
        t.map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.idx)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or(self.end)
    }

    /// Error at the upcoming token.
    fn error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// Error at the token just consumed.
    fn error_here(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.last_pos.0,
            col: self.last_pos.1,
            msg: msg.into(),
        }
    }

    fn parse_u32(&mut self, what: &str) -> Result<u32> {
        match self.next() {
            Some(Tok::Int(n)) => u32::try_from(&n)
                .map_err(|_| self.error(format!("{what} out of range"))),
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    /// factor := int [ '/' int ] | ident [ '^' int ]
    fn factor(&mut self, mon: &mut Vec<u32>, coeff: &mut Coeff) -> Result<()> {
        match self.next() {
            Some(Tok::Int(n)) => {
                let mut c = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    match self.next() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(self.error("zero denominator"));
                            }
                            c /= BigRational::from_integer(d);
                        }
                        _ => return Err(self.error("expected denominator")),
                    }
                }
                *coeff *= c;
            }
            Some(Tok::Ident(name)) => {
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.error_here(format!("unknown variable `{name}`")))?;
                let e = if self.peek() == Some(&Tok::Caret) {
                    self.next();
                    self.parse_u32("exponent")?
                } else {
                    1
                };
                mon[i] = mon[i]
                    .checked_add(e)
                    .ok_or_else(|| self.error("exponent overflow"))?;
            }
            _ => return Err(self.error("expected a constant or a variable")),
        }
        Ok(())
    }

    /// term := factor ('*' factor)*
    fn term(&mut self) -> Result<(Monomial, Coeff)> {
        let mut mon = vec![0u32; self.ring.num_vars()];
        let mut coeff = Coeff::from_integer(BigInt::from(1));
        self.factor(&mut mon, &mut coeff)?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            self.factor(&mut mon, &mut coeff)?;
        }
        Ok((Monomial::from_exponents(mon), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut pairs = Vec::new();
        let mut sign_negative = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                true
            }
            Some(Tok::Plus) => {
                self.next();
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            pairs.push((m, if sign_negative { -c } else { c }));
            match self.next() {
                None => break,
                Some(Tok::Plus) => sign_negative = false,
                Some(Tok::Minus) => sign_negative = true,
                Some(_) => {
                    self.idx -= 1;
                    return Err(self.error("expected `+` or `-`"));
                }
            }
        }
        Ok(Polynomial::from_terms(self.ring, pairs))
    }
}

/// Parse a polynomial in the given ring.
pub fn parse_polynomial(ring: &Arc<RingDescriptor>, src: &str) -> Result<Polynomial> {
    let end = {
        let lines: Vec<&str> = src.split('\n').collect();
        (lines.len(), lines.last().map(|l| l.len() + 1).unwrap_or(1))
    };
    let toks = Lexer::new(src).tokens()?;
    if toks.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks,
        idx: 0,
        last_pos: (1, 1),
        end,
    };
    p.poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    fn ring() -> Arc<RingDescriptor> {
        RingDescriptor::new(vec![("a_1_1", 1), ("a_1_2", 1), ("a_2_1", 2), ("a_2_2", 2)]).unwrap()
    }

    #[test]
    fn parses_grammar_example() {
        let r = ring();
        let p = parse_polynomial(&r, "a_2_1*a_1_2 - a_1_1*a_2_2").unwrap();
        let a11 = Polynomial::var_by_name(&r, "a_1_1").unwrap();
        let a12 = Polynomial::var_by_name(&r, "a_1_2").unwrap();
        let a21 = Polynomial::var_by_name(&r, "a_2_1").unwrap();
        let a22 = Polynomial::var_by_name(&r, "a_2_2").unwrap();
        assert_eq!(p, &(&a21 * &a12) - &(&a11 * &a22));
    }

    #[test]
    fn round_trips_display() {
        let r = ring();
        for src in [
            "a_1_1^3 - 2*a_1_2 + 1/2",
            "-a_2_1 + 5",
            "0",
            "3/4*a_1_1*a_2_2^2",
        ] {
            let p = parse_polynomial(&r, src).unwrap();
            let q = parse_polynomial(&r, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn coefficients_and_signs() {
        let r = ring();
        let p = parse_polynomial(&r, "2*a_1_1 + a_1_1").unwrap();
        assert_eq!(p, Polynomial::var_by_name(&r, "a_1_1").unwrap().scale(&coeff_int(3)));
        let z = parse_polynomial(&r, "a_1_1 - a_1_1").unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn error_positions() {
        let r = ring();
        match parse_polynomial(&r, "a_1_1 + \nbogus") {
            Err(Error::Parse { line, col, msg }) => {
                assert_eq!((line, col), (2, 1));
                assert!(msg.contains("bogus"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_polynomial(&r, "1/0") {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains("denominator")),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial(&r, "a_1_1 a_1_2").is_err());
    }
}
