//! Multivariate GCD by recursive content extraction and primitive
//! pseudo-remainder sequences.
//!
//! The result is normalized to be monic under grlex, which makes it
//! canonical: two associates always produce the same output.

use super::mpoly::{MPoly, Monomial};
use crate::scalar::Scalar;

pub fn gcd<S: Scalar>(a: &MPoly<S>, b: &MPoly<S>) -> MPoly<S> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() || a == b {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.nvars());
    }
    if a.num_terms() == 1 || b.num_terms() == 1 {
        return monomial_gcd(a, b);
    }
    let var = (0..a.nvars())
        .find(|&v| a.contains_var(v) || b.contains_var(v))
        .expect("non-constant polynomial mentions some variable");
    let (ca, pa) = content_primitive(a, var);
    let (cb, pb) = content_primitive(b, var);
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    (&c * &g).monic()
}

/// GCD when one side is a single term: the largest monomial dividing
/// every term of both.
fn monomial_gcd<S: Scalar>(a: &MPoly<S>, b: &MPoly<S>) -> MPoly<S> {
    let n = a.nvars();
    let mut e: Vec<u32> = vec![u32::MAX; n];
    for (m, _) in a.terms().chain(b.terms()) {
        for (ei, mi) in e.iter_mut().zip(&m.0) {
            *ei = (*ei).min(*mi);
        }
    }
    MPoly::from_terms(n, [(Monomial(e), S::one())])
}

/// Content with respect to `var` (a polynomial free of `var`) and the
/// corresponding primitive part.
pub fn content_primitive<S: Scalar>(p: &MPoly<S>, var: usize) -> (MPoly<S>, MPoly<S>) {
    let coeffs = p.coeffs_in(var);
    let mut content = MPoly::zero(p.nvars());
    for c in coeffs.values() {
        content = gcd(&content, c);
        if content.is_one() {
            break;
        }
    }
    let pp = p
        .div_exact(&content)
        .expect("content divides the polynomial");
    (content, pp)
}

fn pseudo_rem<S: Scalar>(a: &MPoly<S>, b: &MPoly<S>, var: usize) -> MPoly<S> {
    let db = b.degree_in(var);
    let lc = b.leading_coeff_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.leading_coeff_in(var);
        let shift = Monomial::var(var, a.nvars());
        let mut shifted = b.clone();
        for _ in 0..(dr - db) {
            shifted = shifted.mul_term(&shift, &S::one());
        }
        r = &(&r * &lc) - &(&lr * &shifted);
    }
    r
}

fn primitive_prs<S: Scalar>(a: MPoly<S>, b: MPoly<S>, var: usize) -> MPoly<S> {
    let (a, b) = (a.monic(), b.monic());
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) { (a, b) } else { (b, a) };
    loop {
        if b.degree_in(var) == 0 {
            // b is primitive and free of var, hence a unit
            return MPoly::one(a.nvars());
        }
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return b;
        }
        // rescaling keeps rational coefficient growth in check
        let (_, pr) = content_primitive(&r, var);
        a = b;
        b = pr.monic();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn x(i: usize) -> MPoly<Q> {
        MPoly::var(i, 3)
    }
    fn c(v: i64) -> MPoly<Q> {
        MPoly::constant(Q::from_int(v), 3)
    }

    #[test]
    fn difference_of_squares() {
        let a = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let b = (&x(0) - &x(1)).scale(&Q::from_int(3));
        assert_eq!(gcd(&a, &b), &x(0) - &x(1));
    }

    #[test]
    fn coprime_and_trivial() {
        assert!(gcd(&(&x(0) + &c(1)), &(&x(1) + &c(1))).is_one());
        assert!(gcd(&x(0), &c(5)).is_one());
        assert_eq!(gcd(&MPoly::zero(3), &x(2).scale(&Q::from_int(-2))), x(2));
    }

    #[test]
    fn shared_multivariate_factor() {
        let f = &(&x(0) * &x(1)) + &(&x(2) + &c(1));
        let g1 = &x(0) + &x(2);
        let g2 = &(&x(1) * &x(1)) - &x(0);
        let a = &f * &g1;
        let b = &f * &g2;
        assert_eq!(gcd(&a, &b), f.monic());
        let a2 = &a * &x(0).pow(2);
        let b2 = &b * &x(0);
        assert_eq!(gcd(&a2, &b2), (&f * &x(0)).monic());
    }
}
