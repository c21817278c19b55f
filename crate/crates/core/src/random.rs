//! Seeded pseudo-random sampling of tower elements, used by the sampled
//! verification modes and by property tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::polydiff::{PolyDiffCochain, SlotOp};
use crate::scalar::Scalar;
use crate::tower::{FElem, MPoly, Monomial, RatFunc};
use crate::twisted::TwMorphism;

pub use rand::SeedableRng;
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Polynomial with up to `terms` terms, total degree `<= max_deg`,
/// coefficients in `-3..=3`.
pub fn poly<S: Scalar>(rng: &mut SeededRng, nvars: usize, terms: usize, max_deg: u32) -> MPoly<S> {
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut e = vec![0u32; nvars];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            e[rng.gen_range(0..nvars)] += 1;
        }
        out.push((Monomial(e), S::from_int(rng.gen_range(-3..=3))));
    }
    MPoly::from_terms(nvars, out)
}

pub fn nonzero_poly<S: Scalar>(rng: &mut SeededRng, nvars: usize, terms: usize, max_deg: u32) -> MPoly<S> {
    loop {
        let p = poly(rng, nvars, terms, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn ratfunc<S: Scalar>(rng: &mut SeededRng, nvars: usize) -> RatFunc<S> {
    let num = poly(rng, nvars, 3, 2);
    let den = if rng.gen_bool(0.5) { MPoly::one(nvars) } else { nonzero_poly(rng, nvars, 2, 1) };
    RatFunc::new(num, den).expect("nonzero denominator")
}

pub fn nonzero_ratfunc<S: Scalar>(rng: &mut SeededRng, nvars: usize) -> RatFunc<S> {
    loop {
        let r = ratfunc(rng, nvars);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Laurent element with polynomial coefficients and t-exponents in `-2..=2`.
pub fn felem<S: Scalar>(rng: &mut SeededRng, n: u32) -> FElem<S> {
    let mut acc = FElem::zero(n);
    for _ in 0..rng.gen_range(1..=2) {
        let j = rng.gen_range(-2..=2);
        let c = RatFunc::from_poly(poly(rng, n as usize + 1, 3, 2));
        acc = &acc + &FElem::from_ratfunc(c, j);
    }
    acc
}

/// Homogeneous element `c * t^j` with polynomial `c`.
pub fn homogeneous<S: Scalar>(rng: &mut SeededRng, n: u32, j: i64) -> FElem<S> {
    FElem::from_ratfunc(RatFunc::from_poly(poly(rng, n as usize + 1, 3, 2)), j)
}

/// Cochain with up to three terms, slot orders `<= max_order` and internal
/// degree `degree` (a multiple of `n`).
pub fn cochain<S: Scalar>(rng: &mut SeededRng, n: u32, arity: usize, max_order: u32, degree: i64) -> PolyDiffCochain<S> {
    let nv = n as usize + 2;
    let mut out = PolyDiffCochain::zero(n, arity, degree);
    for _ in 0..rng.gen_range(1..=3) {
        let slots: Vec<SlotOp> = (0..arity)
            .map(|_| {
                let mut e = vec![0u32; nv];
                for _ in 0..rng.gen_range(0..=max_order) {
                    e[rng.gen_range(0..nv)] += 1;
                }
                SlotOp(e)
            })
            .collect();
        let t_orders: i64 = slots.iter().map(|s| s.t_order() as i64).sum();
        let c = homogeneous(rng, n, degree / n as i64 + t_orders);
        out.add_term(slots, c).expect("homogeneous by construction");
    }
    out
}

/// Morphism between sums with the given shifts. Entries whose forced
/// internal degree is not a multiple of `n` stay zero.
pub fn tw_morphism<S: Scalar>(rng: &mut SeededRng, n: u32, source: &[i64], target: &[i64], degree: i64) -> TwMorphism<S> {
    let mut m = TwMorphism::zero(n, source, target, degree);
    for i in 0..target.len() {
        for j in 0..source.len() {
            let e = m.entry_degree(i, j);
            if e % n as i64 == 0 && rng.gen_bool(0.8) {
                m.set(i, j, homogeneous(rng, n, e / n as i64)).expect("degree matches by construction");
            }
        }
    }
    m
}
