use super::cochain::PolyDiffCochain;
use super::slot::SlotOp;
use crate::scalar::Scalar;

fn parity_sign<S: Scalar>(e: i64) -> S {
    if e.rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    }
}

/// Partial composition `φ ∘_i ψ`: `ψ` fills slot `i` (zero-based) of `φ`,
/// `(a_1, ..) ↦ φ(a_1, .., a_{i}, ψ(a_{i+1}, .., a_{i+q}), ..)`, unsigned.
///
/// The outer slot operator is distributed over `ψ`'s coefficient and its
/// `q` arguments by the multinomial Leibniz rule.
pub fn insert<S: Scalar>(phi: &PolyDiffCochain<S>, i: usize, psi: &PolyDiffCochain<S>) -> PolyDiffCochain<S> {
    assert!(i < phi.arity(), "insertion slot out of range");
    let n = phi.n();
    let q = psi.arity();
    let mut out = PolyDiffCochain::zero(n, phi.arity() + q - 1, phi.degree() + psi.degree());
    for (a_slots, c) in phi.terms() {
        let alpha = &a_slots[i];
        let dists = alpha.distributions::<S>(q + 1);
        for (b_slots, c2) in psi.terms() {
            for (parts, w) in &dists {
                let dc = parts[0].apply(c2);
                if dc.is_zero() {
                    continue;
                }
                let coeff = (c * &dc).scale(w);
                let mut slots: Vec<SlotOp> = Vec::with_capacity(out.arity());
                slots.extend(a_slots[..i].iter().cloned());
                slots.extend(b_slots.iter().zip(&parts[1..]).map(|(b, g)| b.add(g)));
                slots.extend(a_slots[i + 1..].iter().cloned());
                out.push(slots, coeff);
            }
        }
    }
    out
}

/// Gerstenhaber composition `φ ∘ ψ = Σ_i (-1)^{i(|ψ|-1)} φ ∘_i ψ`, with
/// `|ψ| = arity + internal degree` and zero-based `i`.
pub fn circle<S: Scalar>(phi: &PolyDiffCochain<S>, psi: &PolyDiffCochain<S>) -> PolyDiffCochain<S> {
    let n = phi.n();
    let mut out = PolyDiffCochain::zero(n, phi.arity() + psi.arity() - 1, phi.degree() + psi.degree());
    let shifted = psi.total_degree() - 1;
    for i in 0..phi.arity() {
        let part = insert(phi, i, psi);
        let sign: S = parity_sign(i as i64 * shifted);
        out = &out + &part.scale(&sign);
    }
    out
}

/// `[φ, ψ] = φ ∘ ψ - (-1)^{(|φ|-1)(|ψ|-1)} ψ ∘ φ`.
pub fn bracket<S: Scalar>(phi: &PolyDiffCochain<S>, psi: &PolyDiffCochain<S>) -> PolyDiffCochain<S> {
    let sign: S = parity_sign((phi.total_degree() - 1) * (psi.total_degree() - 1));
    &circle(phi, psi) - &circle(psi, phi).scale(&sign)
}
