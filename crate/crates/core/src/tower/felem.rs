use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A differentiation direction on `F = K[t, t^-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `x_{i+1}`, zero-based.
    X(usize),
    T,
}

impl Var {
    /// Position in the list `x1, ..., x_{n+1}, t`.
    pub fn index(self, n: u32) -> usize {
        match self {
            Var::X(i) => i,
            Var::T => n as usize + 1,
        }
    }

    pub fn from_index(i: usize, n: u32) -> Var {
        if i == n as usize + 1 {
            Var::T
        } else {
            Var::X(i)
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::X(i) => format!("x{}", i + 1),
            Var::T => "t".to_string(),
        }
    }
}

/// Element of the graded field `F = K[t, t^-1]` with `K = k(x1, ..., x_{n+1})`
/// and `t` in degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FElem<S> {
    n: u32,
    coeffs: BTreeMap<i64, RatFunc<S>>,
}

impl<S: Scalar> FElem<S> {
    pub fn zero(n: u32) -> Self {
        FElem { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::from_ratfunc(RatFunc::one(n as usize + 1), 0)
    }

    pub fn constant(c: S, n: u32) -> Self {
        Self::from_ratfunc(RatFunc::constant(c, n as usize + 1), 0)
    }

    /// `r * t^j`.
    pub fn from_ratfunc(r: RatFunc<S>, j: i64) -> Self {
        let n = (r.nvars() - 1) as u32;
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(j, r);
        }
        FElem { n, coeffs }
    }

    pub fn x(i: usize, n: u32) -> Self {
        Self::from_ratfunc(RatFunc::var(i, n as usize + 1), 0)
    }

    pub fn t_pow(j: i64, n: u32) -> Self {
        Self::from_ratfunc(RatFunc::one(n as usize + 1), j)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n as usize + 1
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, RatFunc<S>> {
        &self.coeffs
    }

    pub fn coeff(&self, j: i64) -> RatFunc<S> {
        self.coeffs.get(&j).cloned().unwrap_or_else(|| RatFunc::zero(self.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|r| r.is_one())
    }

    /// The single t-exponent if the element is homogeneous and nonzero.
    pub fn t_exponent(&self) -> Option<i64> {
        if self.coeffs.len() == 1 {
            self.coeffs.keys().next().copied()
        } else {
            None
        }
    }

    /// Internal degree `n * j` of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<i64> {
        self.t_exponent().map(|j| j * self.n as i64)
    }

    /// True for elements `c * t^j` with `c` in the ground field.
    pub fn as_constant_monomial(&self) -> Option<(S, i64)> {
        let j = self.t_exponent()?;
        self.coeffs[&j].as_constant().map(|c| (c, j))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        FElem { n: self.n, coeffs: self.coeffs.iter().map(|(j, r)| (*j, r.scale(c))).collect() }
    }

    pub fn mul_ratfunc(&self, r: &RatFunc<S>) -> Self {
        if r.is_zero() {
            return Self::zero(self.n);
        }
        FElem { n: self.n, coeffs: self.coeffs.iter().map(|(j, c)| (*j, c * r)).collect() }
    }

    pub fn shift_t(&self, k: i64) -> Self {
        FElem { n: self.n, coeffs: self.coeffs.iter().map(|(j, c)| (j + k, c.clone())).collect() }
    }

    /// Inverse of a nonzero homogeneous element: `(c t^j)^-1 = c^-1 t^-j`.
    pub fn invert_homogeneous(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let j = self.t_exponent().ok_or(Error::NotHomogeneous)?;
        Ok(Self::from_ratfunc(self.coeffs[&j].inv()?, -j))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.invert_homogeneous()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.invert_homogeneous()?.pow(-e);
        }
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    pub fn partial(&self, var: Var) -> Self {
        let mut out = Self::zero(self.n);
        match var {
            Var::X(i) => {
                for (j, c) in &self.coeffs {
                    let d = c.partial(i);
                    if !d.is_zero() {
                        out.coeffs.insert(*j, d);
                    }
                }
            }
            Var::T => {
                for (j, c) in &self.coeffs {
                    if *j != 0 {
                        out.coeffs.insert(j - 1, c.scale(&S::from_int(*j)));
                    }
                }
            }
        }
        out
    }

    /// Applies `d^e / dv^e` for each `(v, e)` in order.
    pub fn partial_multi(&self, orders: &[u32]) -> Self {
        let mut out = self.clone();
        for (idx, &e) in orders.iter().enumerate() {
            for _ in 0..e {
                if out.is_zero() {
                    return out;
                }
                out = out.partial(Var::from_index(idx, self.n));
            }
        }
        out
    }

    fn add_coeff(&mut self, j: i64, c: &RatFunc<S>) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&j) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.coeffs.remove(&j);
                } else {
                    *v = s;
                }
            }
            None => {
                self.coeffs.insert(j, c.clone());
            }
        }
    }
}

impl<S: Scalar> Add for &FElem<S> {
    type Output = FElem<S>;
    fn add(self, rhs: &FElem<S>) -> FElem<S> {
        debug_assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (j, c) in &rhs.coeffs {
            out.add_coeff(*j, c);
        }
        out
    }
}

impl<S: Scalar> Sub for &FElem<S> {
    type Output = FElem<S>;
    fn sub(self, rhs: &FElem<S>) -> FElem<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &FElem<S> {
    type Output = FElem<S>;
    fn neg(self) -> FElem<S> {
        FElem { n: self.n, coeffs: self.coeffs.iter().map(|(j, c)| (*j, -c)).collect() }
    }
}

impl<S: Scalar> Mul for &FElem<S> {
    type Output = FElem<S>;
    fn mul(self, rhs: &FElem<S>) -> FElem<S> {
        debug_assert_eq!(self.n, rhs.n);
        let mut out = FElem::zero(self.n);
        for (j1, c1) in &self.coeffs {
            for (j2, c2) in &rhs.coeffs {
                out.add_coeff(j1 + j2, &(c1 * c2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    const N: u32 = 2;

    #[test]
    fn laurent_products() {
        let a = &FElem::<Q>::x(0, N) * &FElem::t_pow(1, N);
        let b = &FElem::x(1, N) * &FElem::t_pow(-1, N);
        let prod = &a * &b;
        assert_eq!(prod, &FElem::x(0, N) * &FElem::x(1, N));
        assert_eq!(prod.t_exponent(), Some(0));

        let s = &FElem::<Q>::t_pow(1, N) + &FElem::t_pow(-1, N);
        assert_eq!(&s * &FElem::t_pow(1, N), &FElem::t_pow(2, N) + &FElem::one(N));
    }

    #[test]
    fn homogeneous_inverse() {
        let a = &FElem::<Q>::x(0, N) * &FElem::t_pow(2, N);
        let inv = a.invert_homogeneous().unwrap();
        assert_eq!(inv, FElem::from_ratfunc(RatFunc::var(0, 3).inv().unwrap(), -2));
        assert!((&a * &inv).is_one());
        assert_eq!(inv.degree(), Some(-4));

        let s = &FElem::<Q>::t_pow(1, N) + &FElem::one(N);
        assert_eq!(s.invert_homogeneous(), Err(Error::NotHomogeneous));
        assert_eq!(FElem::<Q>::zero(N).invert_homogeneous(), Err(Error::ZeroInverse));
    }

    #[test]
    fn partials() {
        let x1 = FElem::<Q>::x(0, N);
        assert_eq!((&x1 * &x1).partial(Var::X(0)), x1.scale(&Q::from_int(2)));
        assert_eq!(FElem::<Q>::t_pow(3, N).partial(Var::T), FElem::t_pow(2, N).scale(&Q::from_int(3)));
        assert!(FElem::<Q>::one(N).partial(Var::T).is_zero());
        assert_eq!(FElem::<Q>::t_pow(3, N).partial_multi(&[0, 0, 0, 2]), FElem::t_pow(1, N).scale(&Q::from_int(6)));
    }
}
