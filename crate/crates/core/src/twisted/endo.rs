use std::collections::BTreeMap;

use serde::Serialize;

use crate::ainf::AInfStructure;
use crate::polydiff::{hkr_symbol, PolyDiffCochain};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EndoVerdict {
    /// Every `m_d` with `d >= 3` vanishes.
    NoHigherOperations,
    /// `m_{n+2}` has a nonzero HKR symbol, so its class is nonzero.
    NonzeroTopClass,
    /// Higher operations exist but their symbol vanishes.
    Undetermined,
}

/// The endomorphism A∞-algebra of the rank-one complex `Σ^u F` with zero
/// differential. Its underlying space is `F` and its operations are the
/// structure's `m_d` conjugated by the shift sign `(-1)^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoInvariant<S> {
    pub u: i64,
    pub ops: BTreeMap<usize, PolyDiffCochain<S>>,
    pub higher_arities: Vec<usize>,
    pub top_symbol_nonzero: bool,
    pub verdict: EndoVerdict,
}

pub fn endo_invariant<S: Scalar>(u: i64, s: &AInfStructure<S>) -> EndoInvariant<S> {
    let sign = if u.rem_euclid(2) == 0 { S::one() } else { -S::one() };
    let ops: BTreeMap<usize, PolyDiffCochain<S>> = s.ops().iter().map(|(&d, m)| (d, m.scale(&sign))).collect();
    let top = s.n() as usize + 2;
    let top_symbol_nonzero = ops.get(&top).is_some_and(|m| !hkr_symbol(m).is_zero());
    let higher_arities = s.higher_arities();
    let verdict = if top_symbol_nonzero {
        EndoVerdict::NonzeroTopClass
    } else if higher_arities.is_empty() {
        EndoVerdict::NoHigherOperations
    } else {
        EndoVerdict::Undetermined
    };
    EndoInvariant { u, ops, higher_arities, top_symbol_nonzero, verdict }
}
