use std::collections::{BTreeMap, HashMap};

use super::cochain::PolyDiffCochain;
use super::differential::{differential_pattern, hochschild_differential};
use super::slot::{sub_indices, SlotOp};
use crate::error::{Error, Result};
use crate::linalg::{SparseEchelon, SparseVec};
use crate::scalar::Scalar;
use crate::tower::{FElem, RatFunc};

/// Search space for [`solve_coboundary`]: slot orders up to `order_bound`,
/// coefficients `c · t^j` with `c` in the ground field and `j` in
/// `t_min..=t_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub order_bound: u32,
    pub t_min: i64,
    pub t_max: i64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { order_bound: 3, t_min: -2, t_max: 2 }
    }
}

/// All slot tuples of the given length whose multi-indices sum to `total`,
/// with every slot order in `min..=max`.
pub fn candidate_slots(total: &[u32], len: usize, min: u32, max: u32) -> Vec<Vec<SlotOp>> {
    fn rec(rem: &[u32], left: usize, min: u32, max: u32, cur: &mut Vec<SlotOp>, out: &mut Vec<Vec<SlotOp>>) {
        let rem_order: u32 = rem.iter().sum();
        if left == 0 {
            if rem_order == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for alpha in sub_indices(rem) {
            let o: u32 = alpha.iter().sum();
            if o < min || o > max {
                continue;
            }
            let rest = rem_order - o;
            let slots_after = (left - 1) as u32;
            if rest < slots_after * min || rest > slots_after * max {
                continue;
            }
            let next: Vec<u32> = rem.iter().zip(&alpha).map(|(r, a)| r - a).collect();
            cur.push(SlotOp(alpha));
            rec(&next, left - 1, min, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, len, min, max, &mut Vec::new(), &mut out);
    out
}

fn total_index(slots: &[SlotOp]) -> Vec<u32> {
    let mut acc = vec![0; slots[0].0.len()];
    for s in slots {
        for (a, b) in acc.iter_mut().zip(&s.0) {
            *a += b;
        }
    }
    acc
}

/// Finds `ψ` with `δψ = ρ` inside the bounded search space, or `None` if
/// the space holds no primitive. `None` is not a proof that `ρ` is not a
/// coboundary.
///
/// `δ` never differentiates coefficients and preserves the summed
/// multi-index of a term, so the linear system splits into independent
/// blocks, one per summed multi-index of `ρ`; blocks that `ρ` does not
/// touch can be taken zero. When `ρ` is normalized, the search is further
/// restricted to normalized cochains: identity-slot terms form a
/// subcomplex complementary to the normalized one, so this loses nothing.
pub fn solve_coboundary<S: Scalar>(
    rho: &PolyDiffCochain<S>,
    cfg: &SolverConfig,
) -> Result<Option<PolyDiffCochain<S>>> {
    let n = rho.n();
    if rho.arity() == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    if !hochschild_differential(rho).is_zero() {
        return Err(Error::NotClosed);
    }
    let p = rho.arity() - 1;
    let mut psi = PolyDiffCochain::zero(n, p, rho.degree());
    if rho.is_zero() {
        return Ok(Some(psi));
    }

    if p == 0 {
        // 0-cochains are elements of F and their differential vanishes
        return Ok(None);
    }

    let mut blocks: BTreeMap<Vec<u32>, Vec<(&Vec<SlotOp>, S, i64)>> = BTreeMap::new();
    for (slots, c) in rho.terms() {
        let Some((v, j)) = c.as_constant_monomial() else {
            return Ok(None);
        };
        if j < cfg.t_min || j > cfg.t_max {
            return Ok(None);
        }
        blocks.entry(total_index(slots)).or_default().push((slots, v, j));
    }

    let nvars = n as usize + 1;
    for (total, terms) in blocks {
        let j = terms[0].2;
        let min = if terms.iter().all(|(s, _, _)| s.iter().all(|o| !o.is_identity())) { 1 } else { 0 };
        let cands = candidate_slots(&total, p, min, cfg.order_bound);
        let mut rows: HashMap<Vec<SlotOp>, usize> = HashMap::new();
        let mut echelon = SparseEchelon::<S>::new();
        let mut cols: Vec<(usize, SparseVec<S>)> = Vec::with_capacity(cands.len());
        for (ci, cand) in cands.iter().enumerate() {
            let mut col: HashMap<usize, S> = HashMap::new();
            for (s, w) in differential_pattern::<S>(cand, n) {
                let next = rows.len();
                let r = *rows.entry(s).or_insert(next);
                let e = col.entry(r).or_insert_with(S::zero);
                *e = e.clone() + w;
            }
            let col: SparseVec<S> = col.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            if !col.is_empty() {
                cols.push((ci, col));
            }
        }
        // sparse columns first keeps pivots sparse
        cols.sort_by_key(|(ci, c)| (c.len(), *ci));
        for (ci, col) in cols {
            echelon.insert(ci, col);
        }
        let mut rhs = SparseVec::new();
        for (slots, v, _) in &terms {
            match rows.get(*slots) {
                Some(&r) => {
                    rhs.insert(r, v.clone());
                }
                None => return Ok(None),
            }
        }
        let Some(x) = echelon.solve(&rhs) else {
            return Ok(None);
        };
        for (ci, v) in x {
            let c = FElem::from_ratfunc(RatFunc::constant(v, nvars), j);
            psi.push(cands[ci].clone(), c);
        }
    }
    assert_eq!(&hochschild_differential(&psi), rho, "solver produced a wrong primitive");
    Ok(Some(psi))
}
