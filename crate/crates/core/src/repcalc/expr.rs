//! Text syntax for representations:
//!
//! ```text
//! expr   := term (("+" | "-") term)*        direct sum / sub-multiset removal
//! term   := factor ("*" factor)*            tensor product
//! factor := NAME | INT | "(" expr ")"
//!         | "dual(" expr ")" | "sym(" expr "," INT ")" | "ext(" expr "," INT ")"
//!         | "twist(" expr ",[" INT ("," INT)* "])"
//! ```
//!
//! An integer `n` is `n` copies of the trivial representation.

use super::{LatticeRef, RepError, VirtualRep};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    lattice: &'a LatticeRef,
    lookup: &'a dyn Fn(&str) -> Option<VirtualRep>,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> RepError {
        RepError::Parse {
            position: self.pos,
            message: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), RepError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .take_while(|(i, c)| {
                c.is_ascii_alphabetic() || *c == '_' || (*i > 0 && c.is_ascii_digit())
            })
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(rest[..len].to_string())
    }

    fn int(&mut self) -> Result<i64, RepError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let neg = rest.starts_with('-') as usize;
        let len = rest[neg..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if len == 0 {
            return Err(self.err("expected an integer"));
        }
        let v = rest[..neg + len]
            .parse()
            .map_err(|_| self.err("integer out of range"))?;
        self.pos += neg + len;
        Ok(v)
    }

    fn expr(&mut self) -> Result<VirtualRep, RepError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.direct_sum(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.subtract(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<VirtualRep, RepError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.tensor(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<VirtualRep, RepError> {
        self.skip_ws();
        if self.eat('(') {
            let r = self.expr()?;
            self.expect(')')?;
            return Ok(r);
        }
        if self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            let n = self.int()?;
            return Ok(VirtualRep::trivial(self.lattice, n));
        }
        let start = self.pos;
        let name = self
            .ident()
            .ok_or_else(|| self.err("expected a representation"))?;
        if self.eat('(') {
            let inner = self.expr()?;
            let out = match name.as_str() {
                "dual" => inner.dual(),
                "sym" | "ext" => {
                    self.expect(',')?;
                    let k = self.int()?;
                    let k =
                        usize::try_from(k).map_err(|_| self.err("power must be non-negative"))?;
                    if name == "sym" {
                        inner.sym_power(k)?
                    } else {
                        inner.exterior_power(k)?
                    }
                }
                "twist" => {
                    self.expect(',')?;
                    self.expect('[')?;
                    let mut w = vec![self.int()?];
                    while self.eat(',') {
                        w.push(self.int()?);
                    }
                    self.expect(']')?;
                    inner.twist(&w)?
                }
                _ => {
                    self.pos = start;
                    return Err(self.err(format!("unknown constructor `{name}`")));
                }
            };
            self.expect(')')?;
            return Ok(out);
        }
        (self.lookup)(&name).ok_or_else(|| {
            self.pos = start;
            self.err(format!("unknown representation `{name}`"))
        })
    }
}

/// Parses a representation expression; bare integers are trivial
/// representations in `lattice`, and names are resolved by `lookup`.
pub fn parse_rep(
    text: &str,
    lattice: &LatticeRef,
    lookup: &dyn Fn(&str) -> Option<VirtualRep>,
) -> Result<VirtualRep, RepError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        lattice,
        lookup,
    };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}
