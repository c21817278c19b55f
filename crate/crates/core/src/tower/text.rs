//! Text syntax for polynomials, rational functions and Laurent elements,
//! e.g. `(x1^2 - x2)/(x3 + 1) * t^-2`.
//!
//! The printer is canonical and `parse(print(a)) == a` holds exactly.

use std::fmt;

use super::felem::FElem;
use super::mpoly::{MPoly, Monomial};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn monomial_str(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

/// `(negative, body)` for one term of a polynomial.
fn term_str<S: Scalar>(m: &Monomial, c: &S) -> (bool, String) {
    let neg = c.is_negative();
    let abs = c.abs();
    let body = if m.is_one() {
        abs.to_string()
    } else if abs.is_one() {
        monomial_str(m)
    } else {
        format!("{}*{}", abs, monomial_str(m))
    };
    (neg, body)
}

fn join_signed(parts: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

impl<S: Scalar> fmt::Display for MPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&join_signed(self.terms().rev().map(|(m, c)| term_str(m, c))))
    }
}

impl<S: Scalar> fmt::Display for RatFunc<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

fn t_str(j: i64) -> String {
    match j {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{j}"),
    }
}

impl<S: Scalar> fmt::Display for FElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let single = self.coeffs().len() == 1;
        let parts = self.coeffs().iter().rev().map(|(&j, r)| {
            let simple = r.is_polynomial() && r.num().num_terms() == 1;
            if simple {
                let (m, c) = r.num().terms().next().unwrap();
                let (neg, body) = if j != 0 && m.is_one() && c.abs().is_one() {
                    (c.is_negative(), String::new())
                } else {
                    term_str(m, c)
                };
                let t = t_str(j);
                let s = match (body.is_empty(), t.is_empty()) {
                    (true, _) => t,
                    (false, true) => body,
                    (false, false) => format!("{body}*{t}"),
                };
                (neg, s)
            } else if single && j == 0 {
                (false, r.to_string())
            } else if j == 0 {
                (false, format!("({r})"))
            } else {
                (false, format!("({r})*{}", t_str(j)))
            }
        });
        f.write_str(&join_signed(parts))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    X(usize),
    T,
    Op(char),
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].to_string())));
            }
            'x' => {
                let start = i;
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = src[ds..i].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "expected variable index after 'x'".into(),
                })?;
                if idx == 0 {
                    return Err(Error::Parse { pos: start, msg: "variables are numbered from x1".into() });
                }
                out.push((start, Tok::X(idx - 1)));
            }
            't' => {
                out.push((i, Tok::T));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push((i, Tok::Op(c)));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            _ => return Err(Error::Parse { pos: i, msg: format!("unexpected character {c:?}") }),
        }
    }
    Ok(out)
}

struct Parser<'a, S> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    n: u32,
    _s: std::marker::PhantomData<S>,
}

impl<S: Scalar> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<FElem<S>> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FElem<S>> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' {
                &acc * &rhs
            } else {
                if rhs.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FElem<S>> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        if let Some(Tok::Op('+')) = self.peek() {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<FElem<S>> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = match self.peek() {
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    true
                }
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    false
                }
                _ => false,
            };
            let e: i64 = match self.peek().cloned() {
                Some(Tok::Num(s)) => {
                    self.pos += 1;
                    match s.parse() {
                        Ok(v) => v,
                        Err(_) => return self.err("exponent out of range"),
                    }
                }
                _ => return self.err("expected integer exponent"),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FElem<S>> {
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                match S::parse_literal(&s) {
                    Some(v) => Ok(FElem::constant(v, self.n)),
                    None => self.err(format!("bad number {s}")),
                }
            }
            Some(Tok::X(i)) => {
                if i > self.n as usize {
                    return self.err(format!("variable x{} out of range (n = {})", i + 1, self.n));
                }
                self.pos += 1;
                Ok(FElem::x(i, self.n))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(FElem::t_pow(1, self.n))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

/// Parses an element of `F` for the given grading parameter `n`
/// (variables `x1..x_{n+1}` and `t`).
pub fn parse_felem<S: Scalar>(src: &str, n: u32) -> Result<FElem<S>> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks: &toks, pos: 0, end: src.len(), n, _s: std::marker::PhantomData };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses an element of `K`; `t` may appear only if it cancels.
pub fn parse_ratfunc<S: Scalar>(src: &str, n: u32) -> Result<RatFunc<S>> {
    let v = parse_felem::<S>(src, n)?;
    match v.coeffs().len() {
        0 => Ok(RatFunc::zero(n as usize + 1)),
        1 if v.t_exponent() == Some(0) => Ok(v.coeff(0)),
        _ => Err(Error::Parse { pos: 0, msg: "expected an element of K (no t)".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn rt(s: &str) -> String {
        parse_felem::<Q>(s, 2).unwrap().to_string()
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(rt("(x1^2 - x2)/(x3 + 1) * t^-2"), "((x1^2 - x2)/(x3 + 1))*t^-2");
        assert_eq!(rt("t^-1 + t"), "t + t^-1");
        assert_eq!(rt("x2*x1*3/2"), "3/2*x1*x2");
        assert_eq!(rt("-t^2 + 1 - x1"), "-t^2 + (-x1 + 1)");
        assert_eq!(rt("1 - x1"), "-x1 + 1");
        assert_eq!(rt("0*x1"), "0");
        assert_eq!(rt("x1/x2"), "(x1)/(x2)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_felem::<Q>("x4", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_felem::<Q>("x1 +", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_felem::<Q>("(x1", 2), Err(Error::Parse { .. })));
        assert_eq!(parse_felem::<Q>("x1/0", 2), Err(Error::DivisionByZero));
        assert_eq!(parse_felem::<Q>("x1/(t+1)", 2), Err(Error::NotHomogeneous));
        assert!(parse_ratfunc::<Q>("x1*t", 2).is_err());
        assert_eq!(parse_ratfunc::<Q>("x1*t/t", 2).unwrap(), RatFunc::var(0, 3));
    }
}
