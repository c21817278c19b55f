use crate::error::{Error, Result};
use crate::polydiff::{permutations, PolyDiffCochain, SlotOp};
use crate::scalar::Scalar;
use crate::tower::{FElem, Var};

/// The antisymmetrized polyvector `Σ_π sgn(π) ∂_{x_π(1)} ⊗ ... ⊗ ∂_{x_π(n+1)}`
/// as an `(n+1)`-cochain of internal degree 0 (unit weights).
pub fn build_eta<S: Scalar>(n: u32) -> PolyDiffCochain<S> {
    let p = n as usize + 1;
    let mut eta = PolyDiffCochain::zero(n, p, 0);
    for (perm, sign) in permutations(p) {
        let slots = perm.iter().map(|&i| SlotOp::partial(Var::X(i), n)).collect();
        eta.push(slots, FElem::constant(S::from_int(sign as i64), n));
    }
    eta
}

/// `η ∧ ∂_t`: the shuffle product of an `(n+1)`-cochain with `∂/∂t`,
/// giving an `(n+2)`-cochain of internal degree `-n`. On
/// `η = build_eta(n)` this is the full antisymmetrization over
/// `x_1, ..., x_{n+1}, t` with unit coefficients.
pub fn build_eta_tilde<S: Scalar>(eta: &PolyDiffCochain<S>) -> Result<PolyDiffCochain<S>> {
    let n = eta.n();
    let p = eta.arity();
    if p != n as usize + 1 {
        return Err(Error::ArityMismatch { expected: n as usize + 1, got: p });
    }
    if eta.degree() != 0 {
        return Err(Error::GradingMismatch(format!("η must have internal degree 0, got {}", eta.degree())));
    }
    let dt = SlotOp::partial(Var::T, n);
    let mut out = PolyDiffCochain::zero(n, p + 1, -(n as i64));
    for (slots, c) in eta.terms() {
        for k in 0..=p {
            let mut s = slots.clone();
            s.insert(k, dt.clone());
            let c = if (p - k) % 2 == 0 { c.clone() } else { -c };
            out.add_term(s, c)?;
        }
    }
    Ok(out)
}
