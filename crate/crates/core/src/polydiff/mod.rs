//! Hochschild cochains on `F` as polydifferential operators: evaluation,
//! the Hochschild differential, Gerstenhaber operations, the HKR symbol,
//! and a bounded search for primitives.

mod cochain;
mod differential;
mod gerstenhaber;
mod hkr;
mod slot;
mod solve;
mod text;

pub use cochain::PolyDiffCochain;
pub use differential::{differential_pattern, hochschild_differential};
pub use gerstenhaber::{bracket, circle, insert};
pub use hkr::{alternating_eval, hkr_symbol, permutations, sort_with_sign, PolyVector};
pub use slot::SlotOp;
pub use solve::{candidate_slots, solve_coboundary, SolverConfig};
pub use text::parse_cochain;
