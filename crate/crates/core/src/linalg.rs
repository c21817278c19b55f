//! Exact linear algebra: fraction-free (Bareiss) elimination for dense
//! ranks and an incremental sparse echelon basis for solving linear systems.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::Scalar;

/// Rank of a dense matrix given as rows, by fraction-free elimination.
///
/// Every division performed is exact, so integer input stays integral.
pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let cols = rows[0].len();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in (r + 1)..m {
            let f = rows[i][c].clone();
            for j in (c + 1)..cols {
                let v = (pivot.clone() * rows[i][j].clone() - f.clone() * rows[r][j].clone()) / prev.clone();
                rows[i][j] = v;
            }
            rows[i][c] = S::zero();
        }
        prev = pivot;
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

pub type SparseVec<S> = BTreeMap<usize, S>;

fn axpy<S: Scalar>(y: &mut SparseVec<S>, a: &S, x: &SparseVec<S>) {
    for (k, v) in x {
        let add = a.clone() * v.clone();
        match y.get_mut(k) {
            Some(cur) => {
                let s = cur.clone() + add;
                if s.is_zero() {
                    y.remove(k);
                } else {
                    *cur = s;
                }
            }
            None => {
                if !add.is_zero() {
                    y.insert(*k, add);
                }
            }
        }
    }
}

struct BasisVec<S> {
    vec: SparseVec<S>,
    /// Input column this vector was reduced from.
    origin: usize,
    /// Insertion order, used to unwind the multipliers.
    seq: usize,
    /// `vec = col[origin] + Σ f · basis[pivot]` over these `(pivot, f)`.
    mults: Vec<(usize, S)>,
}

/// Echelon basis of the span of a growing set of sparse columns.
///
/// Each basis vector is keyed by its smallest row index (its pivot); a
/// vector lies in the span iff reduction against the pivots leaves zero.
/// Reduction multipliers are kept (an LU-style factorization) so solutions
/// can be expressed in the input columns.
pub struct SparseEchelon<S> {
    basis: HashMap<usize, BasisVec<S>>,
}

impl<S: Scalar> Default for SparseEchelon<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> SparseEchelon<S> {
    pub fn new() -> Self {
        SparseEchelon { basis: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &mut SparseVec<S>) -> Vec<(usize, S)> {
        let mut mults = Vec::new();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(k, _)| self.basis.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let b = &self.basis[&k];
            let f = -(c / b.vec[&k].clone());
            axpy(v, &f, &b.vec);
            mults.push((k, f));
            cursor = k + 1;
        }
        mults
    }

    /// Adds column `id`; returns false if it was already in the span.
    pub fn insert(&mut self, id: usize, col: SparseVec<S>) -> bool {
        let mut v = col;
        let mults = self.reduce(&mut v);
        match v.keys().next().copied() {
            None => false,
            Some(p) => {
                let seq = self.basis.len();
                self.basis.insert(p, BasisVec { vec: v, origin: id, seq, mults });
                true
            }
        }
    }

    /// Coefficients `x` with `sum_id x[id] * col[id] = rhs`, or `None` if
    /// `rhs` is outside the span.
    pub fn solve(&self, rhs: &SparseVec<S>) -> Option<SparseVec<S>> {
        let mut v = rhs.clone();
        let mults = self.reduce(&mut v);
        if !v.is_empty() {
            return None;
        }
        // rhs = -Σ f · basis[k]; unwind each basis vector into input columns,
        // latest first so every contribution is pushed before it is read
        let mut y: HashMap<usize, S> = HashMap::new();
        for (k, f) in mults {
            let e = y.entry(k).or_insert_with(S::zero);
            *e = e.clone() - f;
        }
        let mut order: Vec<usize> = y.keys().copied().collect();
        let mut seen: std::collections::HashSet<usize> = order.iter().copied().collect();
        let mut i = 0;
        while i < order.len() {
            for (l, _) in &self.basis[&order[i]].mults {
                if seen.insert(*l) {
                    order.push(*l);
                }
            }
            i += 1;
        }
        order.sort_by_key(|k| std::cmp::Reverse(self.basis[k].seq));
        let mut x = SparseVec::new();
        for k in order {
            let Some(yk) = y.remove(&k) else { continue };
            if yk.is_zero() {
                continue;
            }
            let b = &self.basis[&k];
            for (l, f) in &b.mults {
                let e = y.entry(*l).or_insert_with(S::zero);
                *e = e.clone() + yk.clone() * f.clone();
            }
            x.insert(b.origin, yk);
        }
        Some(x)
    }
}

pub fn sparse_rank<S: Scalar>(cols: impl IntoIterator<Item = SparseVec<S>>) -> usize {
    let mut e = SparseEchelon::new();
    for (i, c) in cols.into_iter().enumerate() {
        e.insert(i, c);
    }
    e.rank()
}
