use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite-dimensional graded algebra given by structure constants
/// `e_i e_j = Σ_k c[i][j][k] e_k` on a homogeneous basis containing the
/// unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallAlgebra<S> {
    degrees: Vec<i64>,
    unit: usize,
    /// Dense `d × d × d` table, index `(i * d + j) * d + k`.
    table: Vec<S>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    degrees: Vec<i64>,
    unit: usize,
    table: Vec<(usize, usize, usize, String)>,
}

impl<S: Scalar> SmallAlgebra<S> {
    /// Builds and validates an algebra from sparse structure constants.
    pub fn new(degrees: Vec<i64>, unit: usize, entries: impl IntoIterator<Item = (usize, usize, usize, S)>) -> Result<Self> {
        let d = degrees.len();
        if d == 0 || unit >= d {
            return Err(Error::InvalidAlgebra(format!("unit index {unit} out of range for dimension {d}")));
        }
        let mut table = vec![S::zero(); d * d * d];
        for (i, j, k, c) in entries {
            if i >= d || j >= d || k >= d {
                return Err(Error::InvalidAlgebra(format!("index ({i}, {j}, {k}) out of range")));
            }
            let slot = &mut table[(i * d + j) * d + k];
            *slot = slot.clone() + c;
        }
        let a = SmallAlgebra { degrees, unit, table };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !self.c(i, j, k).is_zero() && self.degrees[k] != self.degrees[i] + self.degrees[j] {
                        return Err(Error::InvalidAlgebra(format!("e{i}·e{j} has a component on e{k} of the wrong degree")));
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vec(i);
            if self.mul_basis(self.unit, i) != e || self.mul_basis(i, self.unit) != e {
                return Err(Error::InvalidAlgebra(format!("e{} is not a two-sided unit on e{i}", self.unit)));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul_vec_basis(&ij, k);
                    let jk = self.mul_basis(j, k);
                    let right = self.mul_basis_vec(i, &jk);
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!("(e{i}e{j})e{k} != e{i}(e{j}e{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// Structure constant `c_{ij}^k`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &S {
        let d = self.dim();
        &self.table[(i * d + j) * d + k]
    }

    /// Nonzero `(k, c_{ij}^k)`.
    pub fn product(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, &S)> {
        let d = self.dim();
        self.table[(i * d + j) * d..(i * d + j + 1) * d].iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn basis_vec(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim()];
        v[i] = S::one();
        v
    }

    fn mul_basis(&self, i: usize, j: usize) -> Vec<S> {
        let d = self.dim();
        self.table[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    fn mul_vec_basis(&self, v: &[S], j: usize) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim()];
        for (i, a) in v.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in self.product(i, j) {
                out[k] = out[k].clone() + a.clone() * c.clone();
            }
        }
        out
    }

    fn mul_basis_vec(&self, i: usize, v: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim()];
        for (j, a) in v.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in self.product(i, j) {
                out[k] = out[k].clone() + a.clone() * c.clone();
            }
        }
        out
    }

    /// The same algebra on the basis reordered so that new basis vector `i`
    /// is old basis vector `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let d = self.dim();
        let mut inv = vec![usize::MAX; d];
        for (new, &old) in perm.iter().enumerate() {
            if old >= d || inv[old] != usize::MAX {
                return Err(Error::InvalidAlgebra("not a permutation".into()));
            }
            inv[old] = new;
        }
        if perm.len() != d {
            return Err(Error::InvalidAlgebra("not a permutation".into()));
        }
        let degrees = perm.iter().map(|&o| self.degrees[o]).collect();
        let mut entries = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product(perm[i], perm[j]) {
                    entries.push((i, j, inv[k], c.clone()));
                }
            }
        }
        Self::new(degrees, inv[self.unit], entries)
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_str(src).map_err(|e| Error::InvalidAlgebra(e.to_string()))?;
        if raw.degrees.len() != raw.dim {
            return Err(Error::InvalidAlgebra(format!("{} degrees for dimension {}", raw.degrees.len(), raw.dim)));
        }
        let mut entries = Vec::with_capacity(raw.table.len());
        for (i, j, k, c) in raw.table {
            let c = S::parse_literal(&c).ok_or_else(|| Error::InvalidAlgebra(format!("bad scalar {c:?}")))?;
            entries.push((i, j, k, c));
        }
        Self::new(raw.degrees, raw.unit, entries)
    }

    pub fn to_json(&self) -> String {
        let d = self.dim();
        let mut table = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.product(i, j) {
                    table.push((i, j, k, c.to_string()));
                }
            }
        }
        let raw = AlgebraJson { dim: d, degrees: self.degrees.clone(), unit: self.unit, table };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    /// The ground field in degree 0.
    pub fn ground() -> Self {
        Self::new(vec![0], 0, [(0, 0, 0, S::one())]).expect("valid")
    }

    /// `k × k` on the basis `1, e` with `e² = e`.
    pub fn split_pair() -> Self {
        Self::new(vec![0, 0], 0, [(0, 0, 0, S::one()), (0, 1, 1, S::one()), (1, 0, 1, S::one()), (1, 1, 1, S::one())])
            .expect("valid")
    }

    /// `k[ε]/ε²` with `|ε| = deg`: dual numbers for 0, an exterior algebra
    /// for odd degrees.
    pub fn square_zero(deg: i64) -> Self {
        Self::new(vec![0, deg], 0, [(0, 0, 0, S::one()), (0, 1, 1, S::one()), (1, 0, 1, S::one())]).expect("valid")
    }
}

/// Graded tensor product with `(a ⊗ b)(a' ⊗ b') = (-1)^{|b||a'|} aa' ⊗ bb'`.
/// The basis is `e_i ⊗ f_j` at index `i * dim(B) + j`.
pub fn tensor_algebra<S: Scalar>(a: &SmallAlgebra<S>, b: &SmallAlgebra<S>) -> SmallAlgebra<S> {
    let (da, db) = (a.dim(), b.dim());
    let idx = |i: usize, j: usize| i * db + j;
    let mut degrees = vec![0; da * db];
    for i in 0..da {
        for j in 0..db {
            degrees[idx(i, j)] = a.degrees[i] + b.degrees[j];
        }
    }
    let mut entries = Vec::new();
    for i in 0..da {
        for j in 0..db {
            for i2 in 0..da {
                for j2 in 0..db {
                    let odd = (b.degrees[j] * a.degrees[i2]).rem_euclid(2) == 1;
                    for (k, ca) in a.product(i, i2) {
                        for (l, cb) in b.product(j, j2) {
                            let c = ca.clone() * cb.clone();
                            entries.push((idx(i, j), idx(i2, j2), idx(k, l), if odd { -c } else { c }));
                        }
                    }
                }
            }
        }
    }
    SmallAlgebra::new(degrees, idx(a.unit, b.unit), entries).expect("tensor product of algebras is an algebra")
}
