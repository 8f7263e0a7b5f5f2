//! Text syntax for polynomials.
//!
//! ```text
//! poly    := ['-'] term (('+' | '-') term)*
//! term    := coeff ['*'] varpow (['*'] varpow)* | coeff | varpow (['*'] varpow)*
//! varpow  := 'X' index ['^' exponent]
//! ```
//!
//! Whitespace is insignificant. Printing is canonical: descending order,
//! coefficients in `[1, p)` with `1` elided, `^1` elided, juxtaposed
//! variables, `0` for the zero polynomial.

use std::fmt;

use thiserror::Error;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected a term")]
    ExpectedTerm,
    #[error("expected a variable index after 'X'")]
    MissingIndex,
    #[error("variable index {index} out of range 1..={nvars}")]
    IndexOutOfRange { index: u64, nvars: usize },
    #[error("malformed exponent")]
    BadExponent,
    #[error("non-ASCII character '{0}'")]
    NonAscii(char),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl<'a> Parser<'a> {
    fn error_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = pos - before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1) + 1;
        ParseError { line, column, kind }
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

    fn unexpected(&self) -> ParseError {
        match self.src.get(self.pos) {
            None => self.error_at(self.pos, ParseErrorKind::UnexpectedEnd),
            Some(_) => {
                let rest = std::str::from_utf8(&self.src[self.pos..]).unwrap_or("");
                let c = rest.chars().next().unwrap_or('?');
                self.error_at(self.pos, ParseErrorKind::UnexpectedChar(c))
            }
        }
    }

    /// Decimal digits at the cursor; `None` if there are none. Digits beyond
    /// u64 are reported via the overflow flag.
    fn digits(&mut self) -> Option<(u64, bool, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut value = 0u64;
        let mut overflow = false;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            match value.checked_mul(10).and_then(|v| v.checked_add(u64::from(b - b'0'))) {
                Some(v) => value = v,
                None => overflow = true,
            }
            self.pos += 1;
        }
        (self.pos > start).then_some((value, overflow, start))
    }

    /// Coefficient digits reduced mod p as they are read, so any length works.
    fn coefficient(&mut self) -> Option<i64> {
        self.skip_ws();
        let p = u64::from(self.ring.modulus());
        let start = self.pos;
        let mut value = 0u64;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = (value * 10 + u64::from(b - b'0')) % p;
            self.pos += 1;
        }
        (self.pos > start).then_some(value as i64)
    }

    fn varpow(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        // caller has checked for 'X'
        self.pos += 1;
        let (index, overflow, at) = self
            .digits()
            .ok_or_else(|| self.error_at(self.pos, ParseErrorKind::MissingIndex))?;
        let nvars = self.ring.nvars();
        if overflow || index == 0 || index as usize > nvars {
            return Err(self.error_at(at, ParseErrorKind::IndexOutOfRange { index, nvars }));
        }
        let mut exponent = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let (e, overflow, at) = self
                .digits()
                .ok_or_else(|| self.error_at(self.pos, ParseErrorKind::BadExponent))?;
            if overflow || e > u64::from(u32::MAX) {
                return Err(self.error_at(at, ParseErrorKind::BadExponent));
            }
            exponent = e as u32;
        }
        let slot = &mut exps[index as usize - 1];
        *slot = slot
            .checked_add(exponent)
            .ok_or_else(|| self.error_at(at, ParseErrorKind::BadExponent))?;
        Ok(())
    }

    fn term(&mut self) -> Result<(i64, Monomial), ParseError> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let coeff = self.coefficient();
        let mut need_var = coeff.is_none();
        loop {
            match self.peek() {
                Some(b'X') => {
                    self.varpow(&mut exps)?;
                    need_var = false;
                }
                Some(b'*') if !need_var || coeff.is_some() => {
                    self.pos += 1;
                    if self.peek() != Some(b'X') {
                        return Err(self.unexpected());
                    }
                    need_var = true;
                }
                _ if need_var => {
                    return Err(match self.src.get(self.pos) {
                        None => self.error_at(self.pos, ParseErrorKind::UnexpectedEnd),
                        Some(_) => self.error_at(self.pos, ParseErrorKind::ExpectedTerm),
                    })
                }
                _ => break,
            }
        }
        Ok((coeff.unwrap_or(1), Monomial::new(exps)))
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut raw = Vec::new();
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (c, m) = self.term()?;
            raw.push((sign * c, m));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                None => break,
                Some(_) => return Err(self.unexpected()),
            }
            self.pos += 1;
        }
        Ok(self.ring.polynomial(raw).expect("monomials built with ring length"))
    }
}

/// Parses `text` into a normalized polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring: *ring,
    };
    if let Some((offset, c)) = text.char_indices().find(|(_, c)| !c.is_ascii()) {
        return Err(parser.error_at(offset, ParseErrorKind::NonAscii(c)));
    }
    let poly = parser.poly()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected());
    }
    Ok(poly)
}

/// Convenience form taking the ring pieces separately.
pub fn parse_poly_in(text: &str, nvars: usize, p: u64, order: MonomialOrder) -> Result<Polynomial, String> {
    let ring = Ring::new(p, nvars, order).map_err(|e| e.to_string())?;
    parse_poly(text, &ring).map_err(|e| e.to_string())
}

pub fn print_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("X{}", i + 1)),
            _ => s.push_str(&format!("X{}^{}", i + 1, e)),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

pub fn print_poly(f: &Polynomial) -> String {
    f.to_string()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.mono.is_one() {
                write!(f, "{}", t.coeff)?;
            } else {
                if t.coeff != 1 {
                    write!(f, "{}", t.coeff)?;
                }
                f.write_str(&print_monomial(&t.mono))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_monomial(self))
    }
}
