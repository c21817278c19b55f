//! Cochain literal syntax.
//!
//! ```text
//! arity 2 degree 0
//! 1 | dx1, dx2
//! -1 | dx2, dx1
//! ```
//!
//! One term per line (or `;`-separated): a coefficient in `F`, `|`, and a
//! comma-separated slot list where each slot is `1` or a dot-separated
//! product of partials `dx1.dx1.dt`. The header is required only when
//! there are no terms.

use std::fmt;

use super::cochain::PolyDiffCochain;
use super::slot::SlotOp;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tower::{parse_felem, Var};

impl<S: Scalar> fmt::Display for PolyDiffCochain<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arity {} degree {}", self.arity(), self.degree())?;
        for (slots, c) in self.terms() {
            let s: Vec<String> = slots.iter().map(|o| o.fmt_with(self.n())).collect();
            writeln!(f, "{} | {}", c, s.join(", "))?;
        }
        Ok(())
    }
}

fn parse_slot(src: &str, n: u32, pos: usize) -> Result<SlotOp> {
    let src = src.trim();
    if src == "1" {
        return Ok(SlotOp::identity(n));
    }
    let mut vars = Vec::new();
    for part in src.split('.') {
        let part = part.trim();
        let var = match part {
            "dt" => Var::T,
            _ => {
                let idx = part
                    .strip_prefix("dx")
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= n as usize + 1)
                    .ok_or_else(|| Error::Parse { pos, msg: format!("bad slot operator {part:?}") })?;
                Var::X(idx - 1)
            }
        };
        vars.push(var);
    }
    Ok(SlotOp::from_vars(&vars, n))
}

fn parse_header(line: &str, pos: usize) -> Result<(usize, i64)> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse { pos, msg: "expected `arity <p> degree <s>`".into() };
    match words.as_slice() {
        ["arity", p, "degree", s] => Ok((p.parse().map_err(|_| bad())?, s.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

pub fn parse_cochain<S: Scalar>(src: &str, n: u32) -> Result<PolyDiffCochain<S>> {
    let mut header = None;
    let mut terms = Vec::new();
    let mut offset = 0;
    for line in src.split(['\n', ';']) {
        let pos = offset;
        offset += line.len() + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("arity") {
            header = Some(parse_header(line, pos)?);
            continue;
        }
        let (coeff, slots) = line
            .split_once('|')
            .ok_or_else(|| Error::Parse { pos, msg: "expected `coeff | slots`".into() })?;
        let c = parse_felem::<S>(coeff, n)?;
        let slots = if slots.trim().is_empty() {
            Vec::new()
        } else {
            slots.split(',').map(|s| parse_slot(s, n, pos)).collect::<Result<Vec<_>>>()?
        };
        terms.push((c, slots));
    }
    let (arity, degree) = match header {
        Some(h) => h,
        None => {
            let (c, slots) = terms
                .iter()
                .find(|(c, _)| !c.is_zero())
                .ok_or_else(|| Error::Parse { pos: 0, msg: "empty cochain needs an arity/degree header".into() })?;
            let j = c.t_exponent().ok_or(Error::NotHomogeneous)?;
            let t: i64 = slots.iter().map(|s| s.t_order() as i64).sum();
            (slots.len(), (j - t) * n as i64)
        }
    };
    PolyDiffCochain::from_terms(n, arity, degree, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn literal_roundtrip() {
        let src = "x1*t | dx1.dx1, dt, 1\n-2*t^2 | dx2.dt, dt, dx3";
        let c = parse_cochain::<Q>(src, 2).unwrap();
        assert_eq!(c.arity(), 3);
        assert_eq!(c.degree(), 0);
        assert_eq!(c.num_terms(), 2);
        let again = parse_cochain::<Q>(&c.to_string(), 2).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn empty_needs_header() {
        assert!(parse_cochain::<Q>("", 2).is_err());
        let z = parse_cochain::<Q>("arity 3 degree -2", 2).unwrap();
        assert!(z.is_zero());
        assert!(parse_cochain::<Q>("1 | dx9", 2).is_err());
        // mixed degrees are rejected
        assert!(parse_cochain::<Q>("1 | dx1; 1 | dt", 2).is_err());
    }
}
