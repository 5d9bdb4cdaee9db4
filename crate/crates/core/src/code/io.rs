//! Plain-text code files: a `q n s` header, then one generator row of `n·s`
//! integers per line. No rows means the zero code.

use super::code::NrtCode;
use crate::algebra::PrimeField;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_code(text: &str) -> Result<NrtCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `q n s` header"))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(hline, format!("bad header value '{t}'")))
        })
        .collect::<Result<_>>()?;
    let [q, n, s] = nums[..] else {
        return Err(parse_err(hline, "header must be `q n s`"));
    };
    let q = u32::try_from(q).map_err(|_| parse_err(hline, "q too large"))?;
    let field = PrimeField::new(q).map_err(|e| parse_err(hline, e.to_string()))?;
    if n == 0 || s == 0 {
        return Err(parse_err(hline, "n and s must be positive"));
    }
    let mut rows = Vec::new();
    for (ln, l) in lines {
        let row: Vec<u32> = l
            .split_whitespace()
            .map(|t| match t.parse::<u32>() {
                Ok(v) if v < q => Ok(v),
                _ => Err(parse_err(ln, format!("'{t}' is not an integer in [0,{q})"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != n * s {
            return Err(parse_err(
                ln,
                format!("expected {} entries, found {}", n * s, row.len()),
            ));
        }
        rows.push(row);
    }
    NrtCode::from_flat_rows(field, n, s, &rows)
}

/// Canonical text form (RREF rows).
pub fn write_code(c: &NrtCode) -> String {
    let mut out = format!("{} {} {}\n", c.q(), c.n(), c.s());
    for r in 0..c.k() {
        let row: Vec<String> = c.generator().row(r).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
