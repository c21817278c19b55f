use std::fmt;

use crate::scalar::{binomial, Scalar};
use crate::tower::{FElem, Var};

/// A constant-coefficient differential operator `∂^α` acting on one slot:
/// a multi-index over `x1, ..., x_{n+1}, t` (partials commute).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotOp(pub Vec<u32>);

impl SlotOp {
    pub fn identity(n: u32) -> Self {
        SlotOp(vec![0; n as usize + 2])
    }

    pub fn partial(var: Var, n: u32) -> Self {
        let mut v = vec![0; n as usize + 2];
        v[var.index(n)] = 1;
        SlotOp(v)
    }

    pub fn from_vars(vars: &[Var], n: u32) -> Self {
        let mut v = vec![0; n as usize + 2];
        for var in vars {
            v[var.index(n)] += 1;
        }
        SlotOp(v)
    }

    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of `∂t` factors.
    pub fn t_order(&self) -> u32 {
        *self.0.last().unwrap()
    }

    /// Internal degree of the operator: each `∂t` lowers degree by `n`.
    pub fn degree(&self, n: u32) -> i64 {
        -(n as i64) * self.t_order() as i64
    }

    /// The single direction of a first-order operator.
    pub fn direction(&self) -> Option<usize> {
        if self.order() == 1 {
            self.0.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    pub fn apply<S: Scalar>(&self, a: &FElem<S>) -> FElem<S> {
        a.partial_multi(&self.0)
    }

    pub fn add(&self, other: &SlotOp) -> SlotOp {
        SlotOp(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &SlotOp) -> SlotOp {
        SlotOp(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// All `β ≤ α` with the Leibniz weight `C(α, β) = Π C(α_v, β_v)`:
    /// `∂^α(ab) = Σ_β C(α,β) ∂^β a ∂^{α-β} b`.
    pub fn splits<S: Scalar>(&self) -> Vec<(SlotOp, SlotOp, S)> {
        let mut out = Vec::new();
        for beta in sub_indices(&self.0) {
            let mut w = S::one();
            for (a, b) in self.0.iter().zip(&beta) {
                w = w * binomial::<S>(*a, *b);
            }
            let beta = SlotOp(beta);
            let rest = self.sub(&beta);
            out.push((beta, rest, w));
        }
        out
    }

    /// All ways to write `α = γ_0 + ... + γ_{k-1}` with multinomial weights:
    /// `∂^α(f_0 ... f_{k-1}) = Σ w Π ∂^{γ_i} f_i`.
    pub fn distributions<S: Scalar>(&self, k: usize) -> Vec<(Vec<SlotOp>, S)> {
        let len = self.0.len();
        let mut out: Vec<(Vec<Vec<u32>>, S)> = vec![(vec![vec![0; len]; k], S::one())];
        for (v, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let comps = compositions(a, k);
            let mut next = Vec::with_capacity(out.len() * comps.len());
            for (parts, w) in &out {
                for comp in &comps {
                    let mut parts = parts.clone();
                    let mut rem = a;
                    let mut cw = S::one();
                    for (i, &c) in comp.iter().enumerate() {
                        parts[i][v] = c;
                        cw = cw * binomial::<S>(rem, c);
                        rem -= c;
                    }
                    next.push((parts, w.clone() * cw));
                }
            }
            out = next;
        }
        out.into_iter().map(|(p, w)| (p.into_iter().map(SlotOp).collect(), w)).collect()
    }

    pub fn fmt_with(&self, n: u32) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                parts.push(format!("d{}", Var::from_index(i, n).name()));
            }
        }
        parts.join(".")
    }
}

impl fmt::Display for SlotOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(self.0.len() as u32 - 2))
    }
}

/// All multi-indices `β` with `0 ≤ β ≤ α` componentwise.
pub fn sub_indices(alpha: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &a in alpha {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for prefix in &out {
            for b in 0..=a {
                let mut p = prefix.clone();
                p.push(b);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Ordered compositions of `a` into `k` nonnegative parts.
fn compositions(a: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![a]];
    }
    let mut out = Vec::new();
    for first in 0..=a {
        for mut rest in compositions(a - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn leibniz_weights() {
        let op = SlotOp(vec![2, 0, 0, 0]);
        let s = op.splits::<Q>();
        let weights: Vec<Q> = s.iter().map(|(_, _, w)| w.clone()).collect();
        assert_eq!(weights, vec![Q::from_int(1), Q::from_int(2), Q::from_int(1)]);
        let d = SlotOp(vec![1, 1, 0, 0]).distributions::<Q>(3);
        assert_eq!(d.len(), 9);
        let d2 = SlotOp(vec![2, 0, 0, 0]).distributions::<Q>(2);
        let total: Q = d2.iter().map(|(_, w)| w.clone()).fold(Q::from_int(0), |a, b| a + b);
        assert_eq!(total, Q::from_int(4));
    }

    #[test]
    fn degrees_and_display() {
        let op = SlotOp::from_vars(&[Var::X(0), Var::T, Var::T], 2);
        assert_eq!(op.degree(2), -4);
        assert_eq!(op.to_string(), "dx1.dt.dt");
        assert_eq!(SlotOp::identity(2).to_string(), "1");
        assert_eq!(SlotOp::partial(Var::T, 2).direction(), Some(3));
    }
}
