//! Recursive-descent parser for the polynomial string form.
//!
//! Accepts sums and differences of products of rationals, `sqrt2`, variables
//! `z<i>`, powers `^k` and parenthesised subexpressions. Division is allowed
//! only by nonzero constants.

use super::{Field, MultiPoly, QuadElement};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(usize),
    Sqrt2,
    Op(char),
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        msg: msg.into(),
    }
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(
                text.parse()
                    .map_err(|_| err(format!("number too large: {text}")))?,
            ));
        } else if c == 'z' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err("expected variable index after 'z'"));
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Var(
                text.parse().map_err(|_| err("bad variable index"))?,
            ));
        } else if chars[i..].starts_with(&['s', 'q', 'r', 't', '2']) {
            out.push(Tok::Sqrt2);
            i += 5;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut neg = false;
        if self.eat('-') {
            neg = true;
        } else {
            self.eat('+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                let c = match d.homogeneous_degree() {
                    Some(0) => d.coefficient(&vec![0; self.nvars]),
                    _ => return Err(err("division by a non-constant")),
                };
                let inv = c.inverse().ok_or_else(|| err("division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) if e >= 0 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| err("unexpected end of input"))?;
        self.pos += 1;
        match t {
            Tok::Num(v) => Ok(MultiPoly::constant(self.nvars, QuadElement::int(v))),
            Tok::Sqrt2 => Ok(MultiPoly::constant(self.nvars, QuadElement::sqrt2())),
            Tok::Var(i) if i < self.nvars => Ok(MultiPoly::var(self.nvars, i)),
            Tok::Var(i) => Err(err(format!(
                "variable z{i} out of range for {} variables",
                self.nvars
            ))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(err("expected ')'"));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(err(format!("unexpected '{c}'"))),
        }
    }
}

pub(crate) fn parse_poly(s: &str, nvars: Option<usize>) -> Result<MultiPoly> {
    let toks = lex(s)?;
    let max_var = toks
        .iter()
        .filter_map(|t| if let Tok::Var(i) = t { Some(*i) } else { None })
        .max();
    let nvars = nvars.unwrap_or_else(|| max_var.map_or(1, |m| m + 1));
    let mut p = Parser {
        toks,
        pos: 0,
        nvars,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("z0 +", Some(3)).is_err());
        assert!(parse_poly("z0 / z1", Some(3)).is_err());
        assert!(parse_poly("z5", Some(3)).is_err());
        assert!(parse_poly("x0", None).is_err());
        assert!(parse_poly("(z0", None).is_err());
    }

    #[test]
    fn infers_variable_count() {
        assert_eq!(parse_poly("z2", None).unwrap().nvars(), 3);
        assert_eq!(parse_poly("7", None).unwrap().nvars(), 1);
    }
}
