use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Neg, Sub};

use super::slot::SlotOp;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tower::{FElem, Var};

/// A Hochschild cochain on `F` in polydifferential normal form:
/// `Σ c · (∂^{α_1} ⊗ ... ⊗ ∂^{α_p})`, acting by
/// `(a_1, ..., a_p) ↦ Σ c · Π ∂^{α_i} a_i`.
///
/// Terms are keyed by their slot tuple, so equal-slot terms are merged and
/// the map order is the canonical term order. Every cochain is homogeneous
/// of a declared internal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyDiffCochain<S> {
    n: u32,
    arity: usize,
    degree: i64,
    terms: BTreeMap<Vec<SlotOp>, FElem<S>>,
}

impl<S: Scalar> PolyDiffCochain<S> {
    pub fn zero(n: u32, arity: usize, degree: i64) -> Self {
        PolyDiffCochain { n, arity, degree, terms: BTreeMap::new() }
    }

    /// The multiplication `μ(a, b) = ab`.
    pub fn multiplication(n: u32) -> Self {
        let mut m = Self::zero(n, 2, 0);
        m.push(vec![SlotOp::identity(n), SlotOp::identity(n)], FElem::one(n));
        m
    }

    /// The derivation `∂/∂var` as a 1-cochain.
    pub fn derivation(var: Var, n: u32) -> Self {
        let op = SlotOp::partial(var, n);
        let mut m = Self::zero(n, 1, op.degree(n));
        m.push(vec![op], FElem::one(n));
        m
    }

    /// Builds a cochain from terms, checking arity and homogeneity.
    pub fn from_terms(
        n: u32,
        arity: usize,
        degree: i64,
        terms: impl IntoIterator<Item = (FElem<S>, Vec<SlotOp>)>,
    ) -> Result<Self> {
        let mut m = Self::zero(n, arity, degree);
        for (c, slots) in terms {
            m.add_term(slots, c)?;
        }
        Ok(m)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Internal degree `s`.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Total (cohomological) degree `p + s`.
    pub fn total_degree(&self) -> i64 {
        self.arity as i64 + self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<SlotOp>, FElem<S>> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The t-exponent a coefficient must have for a term with these slots.
    pub fn coefficient_t_exponent(&self, slots: &[SlotOp]) -> Option<i64> {
        let n = self.n as i64;
        let t_orders: i64 = slots.iter().map(|s| s.t_order() as i64).sum();
        (self.degree % n == 0).then(|| self.degree / n + t_orders)
    }

    /// Adds `c · slots`, rejecting wrong arity or mixed degree.
    pub fn add_term(&mut self, slots: Vec<SlotOp>, c: FElem<S>) -> Result<()> {
        if slots.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: slots.len() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let want = self.coefficient_t_exponent(&slots);
        if want.is_none() || c.t_exponent() != want {
            return Err(Error::GradingMismatch(format!(
                "term with coefficient {c} does not have internal degree {}",
                self.degree
            )));
        }
        self.push(slots, c);
        Ok(())
    }

    /// Unchecked accumulate; callers guarantee homogeneity.
    pub(crate) fn push(&mut self, slots: Vec<SlotOp>, c: FElem<S>) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(slots.len(), self.arity);
        match self.terms.get_mut(&slots) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&slots);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(slots, c);
            }
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.n, self.arity, self.degree);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect();
        }
        out
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: other.arity });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::GradingMismatch(format!(
                "cannot add cochains of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// Largest slot order appearing in any term.
    pub fn max_order(&self) -> u32 {
        self.terms.keys().flat_map(|s| s.iter().map(SlotOp::order)).max().unwrap_or(0)
    }

    /// True if no term has an identity slot (the cochain vanishes whenever
    /// an argument is 1).
    pub fn is_normalized(&self) -> bool {
        self.terms.keys().all(|s| s.iter().all(|o| !o.is_identity()))
    }

    /// Applies the cochain to `args`.
    pub fn evaluate(&self, args: &[FElem<S>]) -> Result<FElem<S>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: args.len() });
        }
        let mut cache: HashMap<(usize, &SlotOp), FElem<S>> = HashMap::new();
        let mut acc = FElem::zero(self.n);
        'terms: for (slots, c) in &self.terms {
            let mut prod = c.clone();
            for (i, op) in slots.iter().enumerate() {
                let v = cache.entry((i, op)).or_insert_with(|| op.apply(&args[i]));
                if v.is_zero() {
                    continue 'terms;
                }
                prod = &prod * v;
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    /// The term-wise sum; panics on incompatible shapes.
    fn combine(&self, other: &Self, negate: bool) -> Self {
        self.check_compatible(other).expect("incompatible cochains");
        let mut out = if self.is_zero() {
            Self::zero(self.n, self.arity, other.degree)
        } else {
            self.clone()
        };
        for (k, v) in &other.terms {
            out.push(k.clone(), if negate { -v } else { v.clone() });
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.combine(other, false))
    }
}

impl<S: Scalar> Add for &PolyDiffCochain<S> {
    type Output = PolyDiffCochain<S>;
    fn add(self, rhs: &PolyDiffCochain<S>) -> PolyDiffCochain<S> {
        self.combine(rhs, false)
    }
}

impl<S: Scalar> Sub for &PolyDiffCochain<S> {
    type Output = PolyDiffCochain<S>;
    fn sub(self, rhs: &PolyDiffCochain<S>) -> PolyDiffCochain<S> {
        self.combine(rhs, true)
    }
}

impl<S: Scalar> Neg for &PolyDiffCochain<S> {
    type Output = PolyDiffCochain<S>;
    fn neg(self) -> PolyDiffCochain<S> {
        self.scale(&-S::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn evaluate_tensor_of_partials() {
        let n = 2;
        let phi = PolyDiffCochain::<Q>::from_terms(
            n,
            2,
            0,
            [(FElem::one(n), vec![SlotOp::partial(Var::X(0), n), SlotOp::partial(Var::X(1), n)])],
        )
        .unwrap();
        let x1 = FElem::x(0, n);
        let x2 = FElem::x(1, n);
        assert!(phi.evaluate(&[x1.clone(), x2.clone()]).unwrap().is_one());
        assert!(phi.evaluate(&[x2, x1.clone()]).unwrap().is_zero());
        assert_eq!(phi.evaluate(&[x1]), Err(Error::ArityMismatch { expected: 2, got: 1 }));
    }

    #[test]
    fn rejects_mixed_degree() {
        let n = 2;
        let mut phi = PolyDiffCochain::<Q>::zero(n, 1, 0);
        // ∂t has degree -2, so its coefficient must carry t^1
        let bad = phi.add_term(vec![SlotOp::partial(Var::T, n)], FElem::one(n));
        assert!(matches!(bad, Err(Error::GradingMismatch(_))));
        phi.add_term(vec![SlotOp::partial(Var::T, n)], FElem::t_pow(1, n)).unwrap();
        let t = FElem::t_pow(1, n);
        assert_eq!(phi.evaluate(&[t.clone()]).unwrap(), t);
    }
}
