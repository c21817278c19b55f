use std::collections::BTreeMap;
use std::fmt;

use super::cochain::PolyDiffCochain;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::tower::{FElem, Var};

/// An antisymmetric polyvector `Σ c_I ∂_{i_1} ∧ ... ∧ ∂_{i_p}` over the
/// directions `x1, .., x_{n+1}, t`, stored on strictly increasing index
/// tuples. Values on other orderings follow by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector<S> {
    n: u32,
    arity: usize,
    coeffs: BTreeMap<Vec<usize>, FElem<S>>,
}

/// Sorts `v` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub fn sort_with_sign(v: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl<S: Scalar> PolyVector<S> {
    pub fn zero(n: u32, arity: usize) -> Self {
        PolyVector { n, arity, coeffs: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, FElem<S>> {
        &self.coeffs
    }

    /// Coefficient on an arbitrary ordering of directions.
    pub fn value(&self, dirs: &[usize]) -> FElem<S> {
        let mut v = dirs.to_vec();
        match sort_with_sign(&mut v) {
            None => FElem::zero(self.n),
            Some(sign) => {
                let c = self.coeffs.get(&v).cloned().unwrap_or_else(|| FElem::zero(self.n));
                if sign < 0 {
                    -&c
                } else {
                    c
                }
            }
        }
    }

    fn accumulate(&mut self, dirs: Vec<usize>, c: FElem<S>) {
        let entry = self.coeffs.entry(dirs.clone()).or_insert_with(|| FElem::zero(self.n));
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&dirs);
        }
    }
}

impl<S: Scalar> fmt::Display for PolyVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(dirs, c)| {
                let wedge: Vec<String> = dirs.iter().map(|&i| format!("d{}", Var::from_index(i, self.n).name())).collect();
                format!("({c}) {}", wedge.join("^"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The HKR symbol: the multi-order `(1, .., 1)` part of `φ`, antisymmetrized
/// over slots without the `1/p!` factor.
///
/// The antisymmetrization of `c ∂_{v_1} ⊗ .. ⊗ ∂_{v_p}` with distinct
/// directions is `sgn(σ) c` times the basis polyvector on the sorted tuple;
/// repeated directions cancel. An already antisymmetric cochain with `p!`
/// terms therefore gets weight `p!`.
pub fn hkr_symbol<S: Scalar>(phi: &PolyDiffCochain<S>) -> PolyVector<S> {
    let n = phi.n();
    let p = phi.arity();
    let mut out = PolyVector::zero(n, p);
    for (slots, c) in phi.terms() {
        let dirs: Option<Vec<usize>> = slots.iter().map(|s| s.direction()).collect();
        let Some(mut dirs) = dirs else { continue };
        if let Some(sign) = sort_with_sign(&mut dirs) {
            out.accumulate(dirs, if sign < 0 { -c } else { c.clone() });
        }
    }
    out
}

/// Heap's algorithm: all permutations of `0..p` with their signs.
pub fn permutations(p: usize) -> Vec<(Vec<usize>, i8)> {
    let mut a: Vec<usize> = (0..p).collect();
    let mut out = vec![(a.clone(), 1i8)];
    let mut c = vec![0usize; p];
    let mut sign = 1i8;
    let mut i = 0;
    while i < p {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// `Σ_π sgn(π) φ(a_{π(1)}, .., a_{π(p)})`.
pub fn alternating_eval<S: Scalar>(phi: &PolyDiffCochain<S>, args: &[FElem<S>]) -> Result<FElem<S>> {
    let mut acc = FElem::zero(phi.n());
    for (perm, sign) in permutations(args.len()) {
        let permuted: Vec<FElem<S>> = perm.iter().map(|&i| args[i].clone()).collect();
        let v = phi.evaluate(&permuted)?;
        acc = if sign > 0 { &acc + &v } else { &acc - &v };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polydiff::SlotOp;
    use crate::Q;

    #[test]
    fn symmetric_tensor_has_no_symbol() {
        let n = 2;
        let p = SlotOp::partial(Var::X(0), n);
        let phi = PolyDiffCochain::<Q>::from_terms(n, 2, 0, [(FElem::one(n), vec![p.clone(), p])]).unwrap();
        assert!(hkr_symbol(&phi).is_zero());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        for (p, s) in &perms {
            let mut v = p.clone();
            assert_eq!(sort_with_sign(&mut v), Some(*s));
        }
        assert_eq!(sort_with_sign(&mut [1, 0, 1]), None);
    }
}
