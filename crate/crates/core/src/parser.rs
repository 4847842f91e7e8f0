//! Textual syntax for multivectors: a flat signed sum of terms.
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := scalar ['*' blade] | blade
//! scalar     := integer | integer '/' positive-integer | decimal (float only)
//! blade      := 'e' digit+ | 'e[' index (',' index)* ']'
//! ```
//!
//! In the compact form every digit is one index (`e134` = {1,3,4}), so it is
//! only available for indices up to 9. Indices must be strictly ascending:
//! `e21` is a parse error, not a sign flip.

use std::fmt;

use thiserror::Error;

use crate::blades::{Blade, Signature};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Parse failure with the byte offset of the offending lexeme.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    fn new(position: usize, expected: impl Into<String>, found: impl fmt::Display) -> Self {
        ParseError {
            position,
            expected: expected.into(),
            found: found.to_string(),
        }
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn found_here(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("'{}'", c as char),
        }
    }

    /// Consume a sign token if present; returns -1, +1, or None.
    fn sign(&mut self) -> Option<i8> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.input[start..self.pos]).unwrap()
    }

    fn number<S: Scalar>(&mut self) -> Result<S, ParseError> {
        let start = self.pos;
        let int = self.digits();
        if int.is_empty() {
            return Err(ParseError::new(start, "a number", self.found_here()));
        }
        let mut literal = int.to_string();
        match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                let den_start = self.pos;
                let den = self.digits();
                if den.is_empty() {
                    return Err(ParseError::new(
                        den_start,
                        "a positive integer denominator",
                        self.found_here(),
                    ));
                }
                literal.push('/');
                literal.push_str(den);
            }
            Some(b'.') => {
                self.pos += 1;
                let frac_start = self.pos;
                let frac = self.digits();
                if frac.is_empty() {
                    return Err(ParseError::new(
                        frac_start,
                        "digits after the decimal point",
                        self.found_here(),
                    ));
                }
                literal.push('.');
                literal.push_str(frac);
            }
            _ => {}
        }
        S::parse_literal(&literal).ok_or_else(|| {
            ParseError::new(
                start,
                "a scalar admissible in this field (decimals need float mode, denominators must be nonzero)",
                format!("'{literal}'"),
            )
        })
    }

    fn index_in_range(&self, position: usize, i: u32) -> Result<u32, ParseError> {
        if i < 1 || i > self.sig.n() {
            return Err(ParseError::new(
                position,
                format!("a generator index in 1..={}", self.sig.n()),
                i,
            ));
        }
        Ok(i)
    }

    /// Blade token, after the leading 'e' has been consumed.
    fn blade_body(&mut self, e_pos: usize) -> Result<Blade, ParseError> {
        let mut indices = Vec::new();
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                loop {
                    self.skip_ws();
                    let start = self.pos;
                    let digits = self.digits();
                    if digits.is_empty() {
                        return Err(ParseError::new(start, "a generator index", self.found_here()));
                    }
                    let i: u32 = digits.parse().map_err(|_| {
                        ParseError::new(start, "a generator index", format!("'{digits}'"))
                    })?;
                    indices.push((start, self.index_in_range(start, i)?));
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => {
                            return Err(ParseError::new(
                                self.pos,
                                "',' or ']'",
                                self.found_here(),
                            ))
                        }
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                while let Some(c) = self.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    let i = (c - b'0') as u32;
                    indices.push((self.pos, self.index_in_range(self.pos, i)?));
                    self.pos += 1;
                }
            }
            _ => {
                return Err(ParseError::new(
                    e_pos + 1,
                    "generator indices after 'e'",
                    self.found_here(),
                ))
            }
        }
        for pair in indices.windows(2) {
            let ((_, a), (pos_b, b)) = (pair[0], pair[1]);
            if b <= a {
                return Err(ParseError::new(
                    pos_b,
                    format!("an index greater than {a} (ascending order, no duplicates)"),
                    b,
                ));
            }
        }
        let idx: Vec<u32> = indices.iter().map(|&(_, i)| i).collect();
        Blade::from_indices(&idx)
            .map_err(|e| ParseError::new(e_pos, "a valid blade", e))
    }

    fn term<S: Scalar>(&mut self) -> Result<(Blade, S), ParseError> {
        match self.peek() {
            Some(b'e') => {
                let e_pos = self.pos;
                self.pos += 1;
                let blade = self.blade_body(e_pos)?;
                Ok((blade, S::one()))
            }
            Some(c) if c.is_ascii_digit() => {
                let coeff: S = self.number()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    let e_pos = self.pos;
                    if self.peek() != Some(b'e') {
                        return Err(ParseError::new(e_pos, "a blade", self.found_here()));
                    }
                    self.pos += 1;
                    let blade = self.blade_body(e_pos)?;
                    Ok((blade, coeff))
                } else {
                    Ok((Blade::SCALAR, coeff))
                }
            }
            _ => Err(ParseError::new(
                self.pos,
                "a term (scalar or blade)",
                self.found_here(),
            )),
        }
    }
}

/// Parse the canonical textual form into a multivector. The scalar field is
/// chosen by the type parameter; decimal literals are rejected by the exact
/// rational realization.
pub fn parse<S: Scalar>(input: &str, sig: Signature) -> Result<Multivector<S>, ParseError> {
    let mut p = Parser {
        input: input.as_bytes(),
        pos: 0,
        sig,
    };
    let mut out = Multivector::zero(sig);
    p.skip_ws();
    if p.peek().is_none() {
        return Err(ParseError::new(0, "an expression", "end of input"));
    }
    let mut first = true;
    loop {
        p.skip_ws();
        let sign = p.sign();
        if sign.is_none() && !first {
            break;
        }
        p.skip_ws();
        let (blade, coeff) = p.term::<S>()?;
        let coeff = if sign == Some(-1) { -coeff } else { coeff };
        let term = Multivector::from_terms(sig, [(blade, coeff)])
            .expect("parsed blade ranges were validated");
        out = out.add(&term);
        first = false;
        p.skip_ws();
        if p.peek().is_none() {
            return Ok(out);
        }
    }
    Err(ParseError::new(p.pos, "'+', '-', or end of input", p.found_here()))
}

/// Canonical textual form; inverse of [`parse`] on normalized multivectors.
pub fn format<S: Scalar>(a: &Multivector<S>) -> String {
    a.to_string()
}
