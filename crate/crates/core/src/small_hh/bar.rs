use std::collections::BTreeMap;

use serde::Serialize;

use super::algebra::{tensor_algebra, SmallAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{sparse_rank, SparseVec};
use crate::scalar::Scalar;

/// Default bound on the number of coordinates of the largest cochain space
/// `Hom(A^{⊗(imax+1)}, A)` that [`hh_bruteforce`] will materialize.
pub const DEFAULT_SIZE_LIMIT: usize = 1 << 18;

/// `dim HH^i` for `i = 0..=imax`, also split by internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HHTable {
    pub dims: Vec<usize>,
    /// Internal degree `s` to `dim HH^{i,s}` for `i = 0..=imax`.
    pub bigraded: BTreeMap<i64, Vec<usize>>,
}

/// The normalized-free (full) Hochschild cochain complex
/// `Hom_k(A^{⊗i}, A)` of a small graded algebra, in block form by internal
/// degree.
///
/// A basis cochain `(J, k)` sends `e_{J_1} ⊗ ... ⊗ e_{J_i}` to `e_k` and
/// everything else to 0; its internal degree is `|e_k| - Σ |e_{J_r}|`. The
/// differential is
/// `δf(a_1..a_{i+1}) = (-1)^{|a_1||f|} a_1 f(a_2..) + Σ_r (-1)^r f(.., a_r a_{r+1}, ..) + (-1)^{i+1} f(..) a_{i+1}`.
pub struct BarComplex<'a, S> {
    alg: &'a SmallAlgebra<S>,
    /// For each basis index `z`, the `(x, y, c)` with `c = c_{xy}^z ≠ 0`.
    factorizations: Vec<Vec<(usize, usize, S)>>,
}

fn parity<S: Scalar>(e: i64) -> S {
    if e.rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    }
}

impl<'a, S: Scalar> BarComplex<'a, S> {
    pub fn new(alg: &'a SmallAlgebra<S>) -> Self {
        let d = alg.dim();
        let mut factorizations = vec![Vec::new(); d];
        for x in 0..d {
            for y in 0..d {
                for (z, c) in alg.product(x, y) {
                    factorizations[z].push((x, y, c.clone()));
                }
            }
        }
        BarComplex { alg, factorizations }
    }

    fn decode(&self, mut code: usize, len: usize) -> Vec<usize> {
        let d = self.alg.dim();
        let mut j = vec![0; len];
        for r in (0..len).rev() {
            j[r] = code % d;
            code /= d;
        }
        j
    }

    fn encode(&self, j: &[usize]) -> usize {
        let d = self.alg.dim();
        j.iter().fold(0, |acc, &x| acc * d + x)
    }

    fn degree_of(&self, j: &[usize], k: usize) -> i64 {
        let deg = self.alg.degrees();
        deg[k] - j.iter().map(|&x| deg[x]).sum::<i64>()
    }

    /// Number of coordinates of `C^i`.
    pub fn size(&self, i: usize) -> usize {
        self.alg.dim().pow(i as u32 + 1)
    }

    /// Per internal degree, the position of every basis cochain of `C^i`
    /// inside its block, and the block sizes.
    fn layout(&self, i: usize) -> (Vec<(i64, usize)>, BTreeMap<i64, usize>) {
        let d = self.alg.dim();
        let mut sizes: BTreeMap<i64, usize> = BTreeMap::new();
        let mut pos = Vec::with_capacity(self.size(i));
        for code in 0..d.pow(i as u32) {
            let j = self.decode(code, i);
            for k in 0..d {
                let s = self.degree_of(&j, k);
                let e = sizes.entry(s).or_insert(0);
                pos.push((s, *e));
                *e += 1;
            }
        }
        (pos, sizes)
    }

    /// Block sizes `dim C^{i,s}`.
    pub fn cochain_dims(&self, i: usize) -> BTreeMap<i64, usize> {
        self.layout(i).1
    }

    /// `δ: C^i → C^{i+1}` as sparse columns, one matrix per internal degree.
    pub fn differential(&self, i: usize) -> BTreeMap<i64, Vec<SparseVec<S>>> {
        let d = self.alg.dim();
        let deg = self.alg.degrees();
        let (src, sizes) = self.layout(i);
        let (dst, _) = self.layout(i + 1);
        let mut blocks: BTreeMap<i64, Vec<SparseVec<S>>> =
            sizes.iter().map(|(&s, &n)| (s, vec![SparseVec::new(); n])).collect();
        let row = |j: &[usize], m: usize| dst[self.encode(j) * d + m].1;
        let add = |col: &mut SparseVec<S>, r: usize, v: S| {
            let e = col.entry(r).or_insert_with(S::zero);
            *e = e.clone() + v;
        };
        for code in 0..d.pow(i as u32) {
            let j = self.decode(code, i);
            for k in 0..d {
                let (s, c_idx) = src[code * d + k];
                let mut col = SparseVec::new();
                let mut buf = Vec::with_capacity(i + 1);
                for a in 0..d {
                    let sign: S = parity(deg[a] * s);
                    buf.clear();
                    buf.push(a);
                    buf.extend_from_slice(&j);
                    for (m, c) in self.alg.product(a, k) {
                        add(&mut col, row(&buf, m), sign.clone() * c.clone());
                    }
                }
                for p in 0..i {
                    let sign: S = parity(p as i64 + 1);
                    for (x, y, c) in &self.factorizations[j[p]] {
                        buf.clear();
                        buf.extend_from_slice(&j[..p]);
                        buf.push(*x);
                        buf.push(*y);
                        buf.extend_from_slice(&j[p + 1..]);
                        add(&mut col, row(&buf, k), sign.clone() * c.clone());
                    }
                }
                let sign: S = parity(i as i64 + 1);
                for a in 0..d {
                    buf.clear();
                    buf.extend_from_slice(&j);
                    buf.push(a);
                    for (m, c) in self.alg.product(k, a) {
                        add(&mut col, row(&buf, m), sign.clone() * c.clone());
                    }
                }
                col.retain(|_, v| !v.is_zero());
                blocks.get_mut(&s).expect("block exists")[c_idx] = col;
            }
        }
        blocks
    }
}

/// `dim HH^i(A)` for `i <= imax` from the bar complex, with exact ranks.
pub fn hh_bruteforce<S: Scalar>(alg: &SmallAlgebra<S>, imax: usize, size_limit: usize) -> Result<HHTable> {
    let bar = BarComplex::new(alg);
    let top = bar.size(imax + 1);
    if top > size_limit {
        return Err(Error::SizeLimitExceeded { size: top, limit: size_limit });
    }
    let mut bigraded: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    // rank of δ^{i-1} per block, starting from δ^{-1} = 0
    let mut prev_rank: BTreeMap<i64, usize> = BTreeMap::new();
    for i in 0..=imax {
        let dims = bar.cochain_dims(i);
        let ranks: BTreeMap<i64, usize> =
            bar.differential(i).into_iter().map(|(s, cols)| (s, sparse_rank(cols))).collect();
        for (&s, &dim) in &dims {
            let h = dim - ranks.get(&s).copied().unwrap_or(0) - prev_rank.get(&s).copied().unwrap_or(0);
            bigraded.entry(s).or_insert_with(|| vec![0; imax + 1])[i] = h;
        }
        prev_rank = ranks;
    }
    bigraded.retain(|_, v| v.iter().any(|&x| x > 0));
    let dims = (0..=imax).map(|i| bigraded.values().map(|v| v[i]).sum()).collect();
    Ok(HHTable { dims, bigraded })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    /// `dim HH^i(A ⊗ B)`.
    pub lhs: Vec<usize>,
    /// `Σ_{p+q=i} dim HH^p(A) dim HH^q(B)`.
    pub rhs: Vec<usize>,
    /// Whether the identity also holds in every internal degree.
    pub bigraded_holds: bool,
    pub holds: bool,
}

/// Compares `HH(A ⊗ B)` with `HH(A) ⊗ HH(B)` degreewise for `i <= imax`.
pub fn kunneth_check<S: Scalar>(a: &SmallAlgebra<S>, b: &SmallAlgebra<S>, imax: usize, size_limit: usize) -> Result<KunnethReport> {
    let ab = tensor_algebra(a, b);
    let left = hh_bruteforce(&ab, imax, size_limit)?;
    let ha = hh_bruteforce(a, imax, size_limit)?;
    let hb = hh_bruteforce(b, imax, size_limit)?;
    let rhs: Vec<usize> = (0..=imax).map(|i| (0..=i).map(|p| ha.dims[p] * hb.dims[i - p]).sum()).collect();
    let mut conv: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (s1, va) in &ha.bigraded {
        for (s2, vb) in &hb.bigraded {
            let e = conv.entry(s1 + s2).or_insert_with(|| vec![0; imax + 1]);
            for i in 0..=imax {
                e[i] += (0..=i).map(|p| va[p] * vb[i - p]).sum::<usize>();
            }
        }
    }
    conv.retain(|_, v| v.iter().any(|&x| x > 0));
    let bigraded_holds = conv == left.bigraded;
    let holds = left.dims == rhs && bigraded_holds;
    Ok(KunnethReport { lhs: left.dims, rhs, bigraded_holds, holds })
}
