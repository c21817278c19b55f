//! Exact arithmetic in the tower `k ⊂ K = k(x1, ..., x_{n+1}) ⊂ F = K[t, t^-1]`.

mod felem;
mod gcd;
mod mpoly;
mod ratfunc;
mod text;

pub use felem::{FElem, Var};
pub use gcd::{content_primitive, gcd};
pub use mpoly::{MPoly, Monomial};
pub use ratfunc::{eval_poly, RatFunc};
pub use text::{parse_felem, parse_ratfunc};
