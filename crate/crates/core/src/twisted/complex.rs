use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tower::{parse_felem, FElem};

/// A matrix of elements of `F` between two sums of shifted copies of `F`.
///
/// Entry `(i, j)` maps source summand `j` to target summand `i`. A
/// morphism of degree `p` has entries of internal degree
/// `p + target_shift[i] - source_shift[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwMorphism<S> {
    n: u32,
    source: Vec<i64>,
    target: Vec<i64>,
    degree: i64,
    entries: BTreeMap<(usize, usize), FElem<S>>,
}

impl<S: Scalar> TwMorphism<S> {
    pub fn zero(n: u32, source: &[i64], target: &[i64], degree: i64) -> Self {
        TwMorphism { n, source: source.to_vec(), target: target.to_vec(), degree, entries: BTreeMap::new() }
    }

    /// Builds a morphism, checking indices and the degree law.
    pub fn from_entries(
        n: u32,
        source: &[i64],
        target: &[i64],
        degree: i64,
        entries: impl IntoIterator<Item = (usize, usize, FElem<S>)>,
    ) -> Result<Self> {
        let mut m = Self::zero(n, source, target, degree);
        for (i, j, v) in entries {
            m.set(i, j, v)?;
        }
        Ok(m)
    }

    /// Internal degree an entry `(i, j)` must have.
    pub fn entry_degree(&self, i: usize, j: usize) -> i64 {
        self.degree + self.target[i] - self.source[j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FElem<S>) -> Result<()> {
        if i >= self.target.len() || j >= self.source.len() {
            return Err(Error::InvalidComplex(format!("entry ({i}, {j}) out of range")));
        }
        if v.is_zero() {
            self.entries.remove(&(i, j));
            return Ok(());
        }
        let want = self.entry_degree(i, j);
        if v.degree() != Some(want) {
            return Err(Error::InvalidComplex(format!("entry ({i}, {j}) = {v} must be homogeneous of degree {want}")));
        }
        self.entries.insert((i, j), v);
        Ok(())
    }

    /// Unchecked accumulate.
    pub(crate) fn add_to(&mut self, i: usize, j: usize, v: &FElem<S>) {
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(|| FElem::zero(self.n));
        *e = &*e + v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn rows(&self) -> usize {
        self.target.len()
    }

    pub fn cols(&self) -> usize {
        self.source.len()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), FElem<S>> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&FElem<S>> {
        self.entries.get(&(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entrywise sum of morphisms with the same shape and degree.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.source != other.source || self.target != other.target || self.degree != other.degree {
            return Err(Error::InvalidComplex("cannot add morphisms of different shape or degree".into()));
        }
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_to(i, j, v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v = v.scale(c);
        }
        out.entries.retain(|_, v| !v.is_zero());
        out
    }
}

/// A one-sided twisted complex `(⊕ Σ^{u_i} F, δ)`: `δ` is a strictly
/// lower-triangular morphism of degree 1 from the object to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedComplex<S> {
    delta: TwMorphism<S>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    shifts: Vec<i64>,
    delta: Vec<(usize, usize, String)>,
}

impl<S: Scalar> TwistedComplex<S> {
    pub fn new(n: u32, shifts: Vec<i64>, delta: impl IntoIterator<Item = (usize, usize, FElem<S>)>) -> Result<Self> {
        let mut d = TwMorphism::zero(n, &shifts, &shifts, 1);
        for (i, j, v) in delta {
            if i <= j {
                return Err(Error::InvalidComplex(format!("entry ({i}, {j}) is not strictly below the diagonal")));
            }
            d.set(i, j, v)?;
        }
        Ok(TwistedComplex { delta: d })
    }

    /// `Σ^u F` with zero differential.
    pub fn shifted_unit(n: u32, u: i64) -> Self {
        TwistedComplex { delta: TwMorphism::zero(n, &[u], &[u], 1) }
    }

    pub fn from_json(src: &str, n: u32) -> Result<Self> {
        let raw: ComplexJson = serde_json::from_str(src).map_err(|e| Error::InvalidComplex(e.to_string()))?;
        let entries = raw
            .delta
            .iter()
            .map(|(i, j, e)| Ok((*i, *j, parse_felem(e, n)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, raw.shifts, entries)
    }

    pub fn to_json(&self) -> String {
        let raw = ComplexJson {
            shifts: self.shifts().to_vec(),
            delta: self.delta.entries.iter().map(|(&(i, j), v)| (i, j, v.to_string())).collect(),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }

    pub fn n(&self) -> u32 {
        self.delta.n
    }

    pub fn rank(&self) -> usize {
        self.delta.source.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.delta.source
    }

    pub fn delta(&self) -> &TwMorphism<S> {
        &self.delta
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::InvalidComplex("summands over different towers".into()));
        }
        let r = self.rank();
        let mut shifts = self.shifts().to_vec();
        shifts.extend_from_slice(other.shifts());
        let entries = self
            .delta
            .entries
            .iter()
            .map(|(&(i, j), v)| (i, j, v.clone()))
            .chain(other.delta.entries.iter().map(|(&(i, j), v)| (i + r, j + r, v.clone())));
        Self::new(self.n(), shifts, entries)
    }

    /// `Cone(f) = (Σ X ⊕ Y, [[δ_X, 0], [f, δ_Y]])` for a degree-0 morphism
    /// `f: X → Y`. It satisfies Maurer–Cartan exactly when `f` is closed
    /// (see [`crate::twisted::is_closed`]).
    pub fn cone(x: &Self, y: &Self, f: &TwMorphism<S>) -> Result<Self> {
        if f.degree != 0 || f.source != x.shifts() || f.target != y.shifts() {
            return Err(Error::InvalidComplex("cone needs a degree-0 morphism X → Y".into()));
        }
        let r = x.rank();
        let mut shifts: Vec<i64> = x.shifts().iter().map(|u| u + 1).collect();
        shifts.extend_from_slice(y.shifts());
        let entries = x
            .delta
            .entries
            .iter()
            .map(|(&(i, j), v)| (i, j, v.clone()))
            .chain(f.entries.iter().map(|(&(i, j), v)| (i + r, j, v.clone())))
            .chain(y.delta.entries.iter().map(|(&(i, j), v)| (i + r, j + r, v.clone())));
        Self::new(x.n(), shifts, entries)
    }
}
