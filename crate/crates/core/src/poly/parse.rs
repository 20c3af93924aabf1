//! Polynomial text syntax.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are ring variables or the field's generator symbol. Division is
//! only by nonzero constants, so `3/2*x` and `(1/2)*i*y^3` both work.

use std::sync::Arc;

use num_bigint::BigInt;

use super::order::TermOrder;
use super::polynomial::{Polynomial, Ring};
use super::PolyError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(PolyError::Parse {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    order: &'a TermOrder,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let divisor = self.unary()?;
                    if divisor.is_zero() || !divisor.is_constant() {
                        return Err(PolyError::Parse {
                            offset: at,
                            message: "division only by nonzero constants".into(),
                        });
                    }
                    let field = self.ring.field();
                    let inv = field
                        .inv(divisor.leading_coeff().expect("nonzero"))
                        .map_err(|_| PolyError::Parse {
                            offset: at,
                            message: "division by zero".into(),
                        })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = acc.mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Some(Tok::Num(n)) => match u32::try_from(&n) {
                Ok(e) => base.pow(e),
                Err(_) => {
                    self.pos -= 1;
                    self.err("exponent too large")
                }
            },
            _ => {
                self.pos -= 1;
                self.err("expected a nonnegative integer exponent")
            }
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let field = self.ring.field();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.bump();
                Ok(Polynomial::constant(
                    self.ring,
                    self.order,
                    field.from_int(&n),
                ))
            }
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.ring.var_index(&name) {
                    self.bump();
                    Ok(Polynomial::var(self.ring, self.order, i))
                } else if field.symbol() == Some(name.as_str()) {
                    self.bump();
                    let g = field
                        .generator()
                        .expect("field with symbol has a generator");
                    Ok(Polynomial::constant(self.ring, self.order, g))
                } else {
                    self.err(format!("unknown variable `{name}`"))
                }
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable, or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `ring`, sorted under `order`.
pub fn parse_polynomial(
    ring: &Arc<Ring>,
    order: &TermOrder,
    text: &str,
) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        ring,
        order,
        toks,
        pos: 0,
        end: text.len(),
    };
    if parser.peek().is_none() {
        return parser.err("empty polynomial");
    }
    let p = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("unexpected trailing input");
    }
    Ok(p)
}
