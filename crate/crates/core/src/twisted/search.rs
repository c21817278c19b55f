use serde::Serialize;

use super::complex::TwistedComplex;
use super::ops::mu_tw;
use crate::ainf::AInfStructure;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::tower::FElem;

/// Outcome of the exhaustive rank-5 search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdiagonalSearch {
    pub candidates: usize,
    /// Candidates satisfying Maurer–Cartan.
    pub passing: usize,
    /// Candidates whose curvature is nonzero at a two-step position, where
    /// only `m_2` contributes.
    pub m2_obstructed: usize,
    /// Candidates whose four-step corner entry, where only `m_{n+2}` can
    /// contribute when `n = 2`, is nonzero.
    pub corner_nonzero: usize,
}

/// Entries `±c·t` with `c ∈ {1, x_1, ..., x_{n+1}}`.
pub fn small_monomials<S: Scalar>(n: u32) -> Vec<FElem<S>> {
    let t = FElem::t_pow(1, n);
    let mut base = vec![t.clone()];
    base.extend((0..=n as usize).map(|i| &FElem::x(i, n) * &t));
    base.iter().flat_map(|m| [m.clone(), -m]).collect()
}

/// The rank-5 complex with shifts `0, n-1, ..., 4(n-1)` and the given four
/// sub-diagonal entries.
pub fn subdiagonal_complex<S: Scalar>(n: u32, entries: [FElem<S>; 4]) -> Result<TwistedComplex<S>> {
    let step = n as i64 - 1;
    let shifts = (0..5).map(|i| i * step).collect();
    TwistedComplex::new(n, shifts, entries.into_iter().enumerate().map(|(i, v)| (i + 1, i, v)))
}

/// Tries every sub-diagonal complex with entries from [`small_monomials`].
pub fn subdiagonal_search<S: Scalar>(s: &AInfStructure<S>) -> Result<SubdiagonalSearch> {
    let n = s.n();
    let mons = small_monomials::<S>(n);
    let k = mons.len();
    let mut out = SubdiagonalSearch { candidates: 0, passing: 0, m2_obstructed: 0, corner_nonzero: 0 };
    for code in 0..k.pow(4) {
        let pick = |p: u32| mons[(code / k.pow(p)) % k].clone();
        let x = subdiagonal_complex(n, [pick(0), pick(1), pick(2), pick(3)])?;
        let curv = mu_tw(s, &[&x], &[])?;
        out.candidates += 1;
        if curv.is_zero() {
            out.passing += 1;
        }
        if (0..3).any(|i| curv.get(i + 2, i).is_some()) {
            out.m2_obstructed += 1;
        }
        if curv.get(4, 0).is_some() {
            out.corner_nonzero += 1;
        }
    }
    Ok(out)
}
