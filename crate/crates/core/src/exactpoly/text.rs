//! Canonical text form: terms in descending graded-lex order written as
//! `coeff*var^exp`, e.g. `2*x1^3 - 9*x1*x2 + 27*x3`.
//!
//! The parser accepts that form plus parentheses, unary minus and integer
//! powers of subexpressions, so relations can be written unexpanded.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::context::{is_identifier, Ctx};
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::CoefficientRing;
use super::PolyError;

pub(crate) fn write_polynomial(f: &mut fmt::Formatter<'_>, p: &Polynomial) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let mono = monomial_text(p.ctx(), m);
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    Ok(())
}

pub fn monomial_text(ctx: &Ctx, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in ctx.names().iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |position: usize, message: String| PolyError::Parse { position, message };
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '^' => out.push((start, Token::Caret)),
            '(' => out.push((start, Token::LParen)),
            ')' => out.push((start, Token::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = text[start..i].parse().expect("digits");
                let mut value = BigRational::from_integer(numer);
                if i < bytes.len() && bytes[i] == b'/' {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == dstart {
                        return Err(err(i, "expected denominator after `/`".into()));
                    }
                    let denom: BigInt = text[dstart..j].parse().expect("digits");
                    if denom == BigInt::from(0) {
                        return Err(err(dstart, "zero denominator".into()));
                    }
                    value /= BigRational::from_integer(denom);
                    i = j;
                }
                out.push((start, Token::Num(value)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &text[start..i];
                debug_assert!(is_identifier(name));
                out.push((start, Token::Ident(name.to_string())));
                continue;
            }
            other => return Err(err(start, format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    ctx: &'a Ctx,
    ring: &'a CoefficientRing,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_add(&t)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(n)) if n.is_integer() => {
                    self.pos += 1;
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| self.error("exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.error("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let c = self.ring.normalize(n)?;
                Ok(Polynomial::monomial(
                    self.ctx,
                    self.ring,
                    Monomial::one(self.ctx),
                    c,
                ))
            }
            Some(Token::Ident(name)) => {
                let i = self
                    .ctx
                    .index_of(&name)
                    .ok_or_else(|| self.error(format!("unknown variable `{name}`")))?;
                self.pos += 1;
                Ok(Polynomial::var_at(self.ctx, self.ring, i))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error("expected `)`")),
                }
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses `text` as a polynomial in `ctx` over `ring`.
pub fn parse_polynomial(
    ctx: &Ctx,
    ring: &CoefficientRing,
    text: &str,
) -> Result<Polynomial, PolyError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        ctx,
        ring,
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(p)
}

impl Polynomial {
    pub fn parse(ctx: &Ctx, ring: &CoefficientRing, text: &str) -> Result<Polynomial, PolyError> {
        parse_polynomial(ctx, ring, text)
    }
}
