use serde::Serialize;

use crate::polydiff::{hochschild_differential, PolyDiffCochain};
use crate::random::{self, SeededRng};
use crate::scalar::Scalar;
use crate::tower::{FElem, MPoly, Monomial, Var};

use rand::Rng;

/// `Λ^e = k[s^±, u^±]` with `s = t ⊗ 1`, `u = 1 ⊗ t`; an element is
/// `s^a u^b · P(s, u)`.
#[derive(Clone, Debug, PartialEq)]
struct Envelope<S> {
    shift: (i64, i64),
    poly: MPoly<S>,
}

impl<S: Scalar> Envelope<S> {
    fn random(rng: &mut SeededRng) -> Self {
        Envelope { shift: (rng.gen_range(-2..=0), rng.gen_range(-2..=0)), poly: random::poly(rng, 2, 4, 3) }
    }

    /// Multiplication map `Λ^e → Λ`, `s, u ↦ t`, as Laurent coefficients.
    fn mu(&self) -> std::collections::BTreeMap<i64, S> {
        let mut out = std::collections::BTreeMap::new();
        for (m, c) in self.poly.terms() {
            let e = self.shift.0 + self.shift.1 + (m.0[0] + m.0[1]) as i64;
            let v: &mut S = out.entry(e).or_insert_with(S::zero);
            *v = v.clone() + c.clone();
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `s^a u^b (P(s, u) - P(u, u))`, which lies in the kernel of `μ`.
    fn minus_diagonal(&self) -> Self {
        let mut diag = Vec::new();
        for (m, c) in self.poly.terms() {
            diag.push((Monomial(vec![0, m.0[0] + m.0[1]]), c.clone()));
        }
        let d = MPoly::from_terms(2, diag);
        Envelope { shift: self.shift, poly: &self.poly - &d }
    }
}

/// `t ⊗ 1 - 1 ⊗ t`.
fn koszul_generator<S: Scalar>() -> Envelope<S> {
    Envelope { shift: (0, 0), poly: &MPoly::var(0, 2) - &MPoly::var(1, 2) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaurentReport {
    /// Rank of `HH^i(k[t, t^-1])` as a `k[t, t^-1]`-module, `i = 0..=imax`.
    pub ranks: Vec<usize>,
    /// Random kernel elements of `μ` checked to be multiples of the
    /// generator.
    pub exactness_samples: usize,
    pub exact: bool,
    /// `δ(d/dt) = 0`.
    pub derivation_closed: bool,
    /// `d/dt` is inner (it is not: inner derivations of a commutative
    /// algebra vanish while `d/dt(t) = 1`).
    pub derivation_inner: bool,
}

/// HH of `Λ = k[t, t^-1]` from `0 → Λ^e → Λ^e → Λ → 0`, the first map
/// being multiplication by `t ⊗ 1 - 1 ⊗ t`.
///
/// Applying `Hom_{Λ^e}(-, Λ)` gives `Λ → Λ`, multiplication by
/// `μ(t ⊗ 1 - 1 ⊗ t)`. Exactness of the resolution is sampled on seeded
/// random kernel elements.
pub fn hh_laurent<S: Scalar>(imax: usize, seed: u64) -> LaurentReport {
    let g = koszul_generator::<S>();
    let mut rng = random::rng(seed);
    let samples = 20;
    let mut exact = true;
    for _ in 0..samples {
        let f = Envelope::<S>::random(&mut rng).minus_diagonal();
        exact &= f.mu().is_empty() && f.poly.div_exact(&g.poly).is_some();
        let h = Envelope::<S>::random(&mut rng);
        if !h.poly.is_zero() {
            // the generator is a non-zero-divisor
            exact &= !(&h.poly * &g.poly).is_zero();
        }
    }

    // d^0 = multiplication by μ(g) on Λ
    let d0 = g.mu();
    let (h0, h1) = if d0.is_empty() {
        (1, 1)
    } else {
        // a domain: injective, with torsion cokernel
        (0, 0)
    };
    let mut ranks = vec![0; imax + 1];
    ranks[0] = h0;
    if imax >= 1 {
        ranks[1] = h1;
    }

    let n = 2;
    let dt = PolyDiffCochain::<S>::derivation(Var::T, n);
    let mut derivation_closed = hochschild_differential(&dt).is_zero();
    let mut inner_vanish = true;
    for _ in 0..samples {
        let a = laurent_sample::<S>(&mut rng, n);
        let b = laurent_sample::<S>(&mut rng, n);
        let lhs = (&a * &b).partial(Var::T);
        let rhs = &(&a * &b.partial(Var::T)) + &(&a.partial(Var::T) * &b);
        derivation_closed &= lhs == rhs;
        inner_vanish &= (&(&a * &b) - &(&b * &a)).is_zero();
    }
    let dt_of_t = FElem::<S>::t_pow(1, n).partial(Var::T);
    let derivation_inner = inner_vanish && dt_of_t.is_zero();

    LaurentReport { ranks, exactness_samples: samples, exact, derivation_closed, derivation_inner }
}

fn laurent_sample<S: Scalar>(rng: &mut SeededRng, n: u32) -> FElem<S> {
    let mut acc = FElem::zero(n);
    for _ in 0..3 {
        let c = S::from_int(rng.gen_range(-3..=3));
        acc = &acc + &FElem::t_pow(rng.gen_range(-3..=3), n).scale(&c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn laurent_ranks() {
        let r = hh_laurent::<Q>(4, 1);
        assert_eq!(r.ranks, vec![1, 1, 0, 0, 0]);
        assert!(r.exact);
        assert!(r.derivation_closed);
        assert!(!r.derivation_inner);
    }

    #[test]
    fn diagonal_subtraction_lands_in_kernel() {
        let mut rng = random::rng(4);
        let f = Envelope::<Q>::random(&mut rng);
        assert!(f.minus_diagonal().mu().is_empty());
    }
}
