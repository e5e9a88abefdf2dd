//! ASCII polynomial reader.
//!
//! ```text
//! poly    := [sign] term (sign term)*
//! term    := factor ('*' factor)*
//! factor  := integer ['/' integer] | name ['^' integer]
//! name    := [A-Za-z][A-Za-z0-9_]*
//! ```
//! Whitespace is ignored between tokens.

use std::sync::Arc;

use super::monomial::Monomial;
use super::polynomial::{Polynomial, VarContext};
use super::ParseError;
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '/' => out.push((start, Token::Slash)),
            '^' => out.push((start, Token::Caret)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Number(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Name(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
    ctx: &'a Arc<VarContext>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.to_string(),
        })
    }

    fn integer(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Token::Number(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.syntax("expected an integer"),
        }
    }

    fn factor(&mut self, coeff: &mut Scalar, mono: &mut [u32]) -> Result<(), ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Number(num)) => {
                self.pos += 1;
                let literal = if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    format!("{num}/{}", self.integer()?)
                } else {
                    num
                };
                let value = self
                    .ctx
                    .field()
                    .parse_scalar(&literal)
                    .map_err(|source| ParseError::Coefficient {
                        position: at,
                        source,
                    })?;
                *coeff = &*coeff * &value;
                Ok(())
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                let index = self.ctx.index_of(&name).ok_or(ParseError::UnknownVariable {
                    position: at,
                    name: name.clone(),
                })?;
                let exponent = if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    let at = self.offset();
                    self.integer()?.parse::<u32>().map_err(|_| ParseError::Syntax {
                        position: at,
                        message: "exponent out of range".into(),
                    })?
                } else {
                    1
                };
                mono[index] += exponent;
                Ok(())
            }
            _ => self.syntax("expected a coefficient or a variable"),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Scalar), ParseError> {
        let mut coeff = self.ctx.field().one();
        let mut mono = vec![0u32; self.ctx.nvars()];
        self.factor(&mut coeff, &mut mono)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((Monomial::new(mono), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero(self.ctx);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => return self.syntax("expected `+` or `-`"),
            };
            let (m, c) = self.term()?;
            acc.add_term(m, if negative { -&c } else { c });
            first = false;
        }
        Ok(acc)
    }
}

pub fn parse_polynomial(text: &str, ctx: &Arc<VarContext>) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::Syntax {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        len: text.len(),
        ctx,
    };
    parser.polynomial()
}
