use serde::Serialize;

use crate::error::{Error, Result};
use crate::polydiff::{hochschild_differential, insert, solve_coboundary, PolyDiffCochain, SolverConfig};
use crate::scalar::Scalar;

use super::structure::{stasheff_sign, AInfStructure};

/// What happened at one step of [`extend_minimal`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionRecord {
    /// Arity of the operation being chosen.
    pub arity: usize,
    /// Number of terms of the obstruction cochain `o` (zero means the step
    /// was free).
    pub terms: usize,
    /// `δo = 0`; a step that fails this aborts the run, so recorded steps
    /// are always closed.
    pub closed: bool,
    /// Number of terms of the chosen `m_arity`.
    pub solution_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub seed_arity: usize,
    pub max_arity: usize,
    pub steps: Vec<ObstructionRecord>,
    /// Arities that received a nonzero operation beyond the seed.
    pub corrected: Vec<usize>,
    /// `Some(true)` when the self-insertion `m_k ∘ m_k` of the seed vanished
    /// on the nose, `None` if that arity was never reached.
    pub seed_square_vanishes: Option<bool>,
}

/// The part of the arity-`d+1` Stasheff identity not involving `m_2`.
fn obstruction<S: Scalar>(ops: &std::collections::BTreeMap<usize, PolyDiffCochain<S>>, n: u32, d: usize) -> PolyDiffCochain<S> {
    let arity = d + 1;
    let mut acc = PolyDiffCochain::zero(n, arity, 3 - arity as i64);
    for b in 3..d {
        let a = arity + 1 - b;
        if a < 3 {
            continue;
        }
        let (Some(ma), Some(mb)) = (ops.get(&a), ops.get(&b)) else { continue };
        for r in 0..a {
            let t = a - 1 - r;
            acc = &acc + &insert(ma, r, mb).scale(&stasheff_sign::<S>(r, b, t));
        }
    }
    acc
}

/// Extends `(0, m_2, 0, ..., 0, m_k)` to a minimal A∞-structure whose
/// Stasheff identities hold through arity `max(max_arity, k + 1)`.
///
/// For `d = k+1, ..., max_arity - 1` the arity-`d+1` identity reads
/// `δ m_d = o_{d+1}`, where `o_{d+1}` collects the insertions of the
/// operations already chosen. Each `o` is checked closed and a primitive is
/// found with [`solve_coboundary`].
pub fn extend_minimal<S: Scalar>(
    m2: &PolyDiffCochain<S>,
    seed: &PolyDiffCochain<S>,
    max_arity: usize,
    cfg: &SolverConfig,
) -> Result<(AInfStructure<S>, ExtensionReport)> {
    let n = m2.n();
    if *m2 != PolyDiffCochain::multiplication(n) {
        return Err(Error::GradingMismatch("m_2 must be the multiplication of F".into()));
    }
    if seed.n() != n {
        return Err(Error::GradingMismatch("seed lives over a different tower".into()));
    }
    let k = seed.arity();
    if k < 3 {
        return Err(Error::ArityMismatch { expected: n as usize + 2, got: k });
    }
    if seed.degree() != 2 - k as i64 {
        return Err(Error::GradingMismatch(format!("seed of arity {k} has degree {}, expected {}", seed.degree(), 2 - k as i64)));
    }
    if !hochschild_differential(seed).is_zero() {
        return Err(Error::NotClosed);
    }

    let mut ops = std::collections::BTreeMap::new();
    ops.insert(2, m2.clone());
    if !seed.is_zero() {
        ops.insert(k, seed.clone());
    }
    let mut report = ExtensionReport {
        seed_arity: k,
        max_arity,
        steps: Vec::new(),
        corrected: Vec::new(),
        seed_square_vanishes: None,
    };

    for d in (k + 1)..max_arity {
        let o = obstruction(&ops, n, d);
        if d + 1 == 2 * k - 1 {
            report.seed_square_vanishes = Some(o.is_zero());
        }
        log::debug!("arity {d}: obstruction with {} terms", o.num_terms());
        let mut record = ObstructionRecord { arity: d, terms: o.num_terms(), closed: true, solution_terms: 0 };
        if !o.is_zero() {
            // the solver rejects open input, which doubles as the closedness check
            let m = match solve_coboundary(&o, cfg) {
                Err(Error::NotClosed) => return Err(Error::ObstructionNotClosed(d + 1)),
                other => other?,
            }
            .ok_or(Error::ObstructionUnresolved { arity: d, order_bound: cfg.order_bound })?;
            debug_assert_eq!(m.degree(), 2 - d as i64);
            if !m.is_zero() {
                record.solution_terms = m.num_terms();
                report.corrected.push(d);
                ops.insert(d, m);
            }
        }
        report.steps.push(record);
    }

    let determined = max_arity.saturating_sub(1).max(k);
    let s = AInfStructure::from_ops(n, ops, determined)?;
    Ok((s, report))
}
