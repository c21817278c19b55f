use std::ops::{Add, Mul, Neg, Sub};

use super::gcd::gcd;
use super::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of the rational function field `k(x1, ..., x_m)`.
///
/// Always normalized: `gcd(num, den) = 1` and `den` is monic under grlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc<S> {
    num: MPoly<S>,
    den: MPoly<S>,
}

impl<S: Scalar> RatFunc<S> {
    pub fn new(num: MPoly<S>, den: MPoly<S>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MPoly<S>, den: MPoly<S>) -> Self {
        let nvars = den.nvars();
        if num.is_zero() {
            return Self::zero(nvars);
        }
        if let Some(c) = den.as_constant() {
            let inv = S::one() / c;
            return RatFunc { num: num.scale(&inv), den: MPoly::one(nvars) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = S::one() / lc;
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: MPoly::zero(nvars), den: MPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(S::one(), nvars)
    }

    pub fn constant(c: S, nvars: usize) -> Self {
        RatFunc { num: MPoly::constant(c, nvars), den: MPoly::one(nvars) }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::from_poly(MPoly::var(i, nvars))
    }

    pub fn from_poly(p: MPoly<S>) -> Self {
        let nvars = p.nvars();
        RatFunc { num: p, den: MPoly::one(nvars) }
    }

    pub fn num(&self) -> &MPoly<S> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<S> {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value if this is a constant of the ground field.
    pub fn as_constant(&self) -> Option<S> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if rhs.den.is_one() && self.den.is_one() {
            return Ok(Self::normalize(self.num.clone(), rhs.num.clone()));
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(RatFunc { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
        } else {
            self.inv()?.pow(-e)
        }
    }

    /// Partial derivative in `x_{var+1}` by the quotient rule.
    pub fn partial(&self, var: usize) -> Self {
        let dn = self.num.derivative(var);
        if self.den.is_one() {
            return Self::from_poly(dn);
        }
        let dd = self.den.derivative(var);
        let top = &(&dn * &self.den) - &(&self.num * &dd);
        Self::normalize(top, &self.den * &self.den)
    }

    /// Substitutes `images[i]` for `x_{i+1}`.
    pub fn substitute(&self, images: &[RatFunc<S>]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), got: images.len() });
        }
        let den = eval_poly(&self.den, images)?;
        if den.is_zero() {
            return Err(Error::SubstitutionPole);
        }
        eval_poly(&self.num, images)?.checked_div(&den)
    }
}

/// Evaluates a polynomial at rational function arguments.
pub fn eval_poly<S: Scalar>(p: &MPoly<S>, images: &[RatFunc<S>]) -> Result<RatFunc<S>> {
    let nvars = images.first().map(|r| r.nvars()).unwrap_or(p.nvars());
    let mut powers: Vec<Vec<RatFunc<S>>> = images.iter().map(|r| vec![RatFunc::one(r.nvars()), r.clone()]).collect();
    let mut acc = RatFunc::zero(nvars);
    for (m, c) in p.terms() {
        let mut term = RatFunc::constant(c.clone(), nvars);
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = &powers[i][powers[i].len() - 1] * &images[i];
                powers[i].push(next);
            }
            term = &term * &powers[i][e as usize];
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

impl<S: Scalar> Add for &RatFunc<S> {
    type Output = RatFunc<S>;
    fn add(self, rhs: &RatFunc<S>) -> RatFunc<S> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::normalize(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalize(num, &self.den * &rhs.den)
    }
}

impl<S: Scalar> Sub for &RatFunc<S> {
    type Output = RatFunc<S>;
    fn sub(self, rhs: &RatFunc<S>) -> RatFunc<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &RatFunc<S> {
    type Output = RatFunc<S>;
    fn neg(self) -> RatFunc<S> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<S: Scalar> Mul for &RatFunc<S> {
    type Output = RatFunc<S>;
    fn mul(self, rhs: &RatFunc<S>) -> RatFunc<S> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying to keep the gcd small
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::normalize(&n1 * &n2, &d1 * &d2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;
    use num_traits::One;

    fn x(i: usize) -> RatFunc<Q> {
        RatFunc::var(i, 3)
    }

    #[test]
    fn inverse_pair() {
        let a = x(0).checked_div(&x(1)).unwrap();
        let b = x(1).checked_div(&x(0)).unwrap();
        assert!((&a * &b).is_one());
        assert!((&x(0) + &(-&x(0))).is_zero());
    }

    #[test]
    fn cancels_common_factor() {
        let num = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let den = &x(0) - &x(1);
        assert_eq!(num.checked_div(&den).unwrap(), &x(0) + &x(1));
    }

    #[test]
    fn denominator_is_monic() {
        let r = x(0).checked_div(&x(1).scale(&Q::from_int(-3))).unwrap();
        assert!(r.den().leading_coeff().is_one());
        assert_eq!(r.num(), x(0).scale(&Q::new((-1).into(), 3.into())).num());
    }

    #[test]
    fn quotient_rule() {
        let r = x(0).checked_div(&x(1)).unwrap();
        let expected = (-&x(0)).checked_div(&(&x(1) * &x(1))).unwrap();
        assert_eq!(r.partial(1), expected);
        assert_eq!((&x(0) * &x(0)).partial(0), x(0).scale(&Q::from_int(2)));
    }

    #[test]
    fn substitution() {
        let xy = &x(0) * &x(1);
        assert_eq!(xy.substitute(&[x(1), x(0), x(2)]).unwrap(), xy);
        let inv = x(0).inv().unwrap();
        let s = &x(0) + &x(1);
        assert_eq!(inv.substitute(&[s.clone(), x(1), x(2)]).unwrap(), s.inv().unwrap());
        assert_eq!(
            inv.substitute(&[RatFunc::zero(3), x(1), x(2)]),
            Err(Error::SubstitutionPole)
        );
        assert_eq!(x(0).checked_div(&RatFunc::zero(3)), Err(Error::DivisionByZero));
    }
}
