use super::cochain::PolyDiffCochain;
use super::slot::SlotOp;
use crate::scalar::Scalar;

/// The Hochschild differential of a single unit-coefficient term.
///
/// `(δφ)(a_1..a_{p+1}) = a_1 φ(a_2..) + Σ_i (-1)^i φ(.., a_i a_{i+1}, ..)
/// + (-1)^{p+1} φ(..) a_{p+1}`; every element of `F` has even degree, so
/// no Koszul signs enter. The product slot is expanded by Leibniz. The
/// coefficient is never differentiated, which makes `δ` linear over `F`.
pub fn differential_pattern<S: Scalar>(slots: &[SlotOp], n: u32) -> Vec<(Vec<SlotOp>, S)> {
    let p = slots.len();
    let id = SlotOp::identity(n);
    let mut out = Vec::new();

    let mut first = Vec::with_capacity(p + 1);
    first.push(id.clone());
    first.extend(slots.iter().cloned());
    out.push((first, S::one()));

    for i in 0..p {
        let sign = if (i + 1) % 2 == 0 { S::one() } else { -S::one() };
        for (beta, rest, w) in slots[i].splits::<S>() {
            let mut s = Vec::with_capacity(p + 1);
            s.extend(slots[..i].iter().cloned());
            s.push(beta);
            s.push(rest);
            s.extend(slots[i + 1..].iter().cloned());
            out.push((s, sign.clone() * w));
        }
    }

    let mut last: Vec<SlotOp> = slots.to_vec();
    last.push(id);
    let sign = if (p + 1) % 2 == 0 { S::one() } else { -S::one() };
    out.push((last, sign));
    out
}

pub fn hochschild_differential<S: Scalar>(phi: &PolyDiffCochain<S>) -> PolyDiffCochain<S> {
    let n = phi.n();
    let mut out = PolyDiffCochain::zero(n, phi.arity() + 1, phi.degree());
    for (slots, c) in phi.terms() {
        for (s, w) in differential_pattern::<S>(slots, n) {
            out.push(s, c.scale(&w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::{FElem, Var};
    use crate::Q;

    const N: u32 = 2;

    #[test]
    fn elements_and_derivations_are_cocycles() {
        let c = PolyDiffCochain::<Q>::from_terms(N, 0, 0, [(FElem::x(0, N), vec![])]).unwrap();
        assert!(hochschild_differential(&c).is_zero());
        let d = PolyDiffCochain::<Q>::derivation(Var::X(0), N);
        assert!(hochschild_differential(&d).is_zero());
        let dt = PolyDiffCochain::<Q>::derivation(Var::T, N);
        assert!(hochschild_differential(&dt).is_zero());
    }

    #[test]
    fn second_order_operator() {
        // δ(∂x1²) = -2 ∂x1 ⊗ ∂x1
        let op = SlotOp::from_vars(&[Var::X(0), Var::X(0)], N);
        let phi = PolyDiffCochain::<Q>::from_terms(N, 1, 0, [(FElem::one(N), vec![op])]).unwrap();
        let d = hochschild_differential(&phi);
        let p = SlotOp::partial(Var::X(0), N);
        let expected =
            PolyDiffCochain::from_terms(N, 2, 0, [(FElem::constant(Q::from_int(-2), N), vec![p.clone(), p])]).unwrap();
        assert_eq!(d, expected);
    }
}
