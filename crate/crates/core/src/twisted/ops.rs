use super::complex::{TwMorphism, TwistedComplex};
use crate::ainf::AInfStructure;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tower::FElem;

/// Nonzero entries of a morphism grouped by source column.
fn by_column<S: Scalar>(m: &TwMorphism<S>) -> Vec<Vec<(usize, &FElem<S>)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for (&(i, j), v) in m.entries() {
        cols[j].push((i, v));
    }
    cols
}

/// `m_L` on a composable chain of matrices between shifted sums, with the
/// shift sign `(-1)^{u_j}` of the source summand. `chain` is in application
/// order: `chain[0]` is applied first and becomes the last argument of
/// `m_L`. Fails only if a nonzero path needs an undetermined arity.
fn accumulate_chain<S: Scalar>(s: &AInfStructure<S>, chain: &[&TwMorphism<S>], out: &mut TwMorphism<S>) -> Result<()> {
    let len = chain.len();
    let op = s.ops().get(&len);
    let needs_op = (len as i64 - 2) % s.n() as i64 == 0;
    if op.is_none() && (len <= s.determined_through() || !needs_op) {
        return Ok(());
    }
    let cols: Vec<_> = chain.iter().map(|m| by_column(m)).collect();
    let source = chain[0].source();
    let mut args: Vec<FElem<S>> = Vec::with_capacity(len);
    for j in 0..chain[0].cols() {
        let sign = if source[j].rem_euclid(2) == 0 { S::one() } else { -S::one() };
        walk(s, &cols, 0, j, j, &sign, &mut args, out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn walk<S: Scalar>(
    s: &AInfStructure<S>,
    cols: &[Vec<Vec<(usize, &FElem<S>)>>],
    step: usize,
    at: usize,
    start: usize,
    sign: &S,
    args: &mut Vec<FElem<S>>,
    out: &mut TwMorphism<S>,
) -> Result<()> {
    if step == cols.len() {
        let rev: Vec<FElem<S>> = args.iter().rev().cloned().collect();
        let v = s.apply(cols.len(), &rev)?;
        out.add_to(at, start, &v.scale(sign));
        return Ok(());
    }
    for &(next, v) in &cols[step][at] {
        args.push(v.clone());
        walk(s, cols, step + 1, next, start, sign, args, out)?;
        args.pop();
    }
    Ok(())
}

/// The twisted operation `m_d^tw` on a composable chain.
///
/// `objects` are `X_0, ..., X_d` and `args[k]: X_k → X_{k+1}`, so `args` is
/// in application order; in composition notation this computes
/// `m_d^tw(args[d-1], ..., args[0])`. The result sums
/// `m_{d+Σk}(δ_{X_d}^{k_d}, args[d-1], ..., args[0], δ_{X_0}^{k_0})` over
/// all insertion counts; no extra signs arise because every `δ` has degree 1.
/// With no arguments this is the Maurer–Cartan curvature of `X_0`.
pub fn mu_tw<S: Scalar>(
    s: &AInfStructure<S>,
    objects: &[&TwistedComplex<S>],
    args: &[&TwMorphism<S>],
) -> Result<TwMorphism<S>> {
    let d = args.len();
    if objects.len() != d + 1 {
        return Err(Error::ArityMismatch { expected: d + 1, got: objects.len() });
    }
    for (k, a) in args.iter().enumerate() {
        if a.source() != objects[k].shifts() || a.target() != objects[k + 1].shifts() {
            return Err(Error::InvalidComplex(format!("argument {k} does not match its objects")));
        }
        if a.n() != s.n() {
            return Err(Error::InvalidComplex("morphism over a different tower".into()));
        }
    }
    let degree = args.iter().map(|a| a.degree()).sum::<i64>() + 2 - d as i64;
    let mut out = TwMorphism::zero(s.n(), objects[0].shifts(), objects[d].shifts(), degree);
    let mut counts = vec![0usize; d + 1];
    loop {
        let mut chain: Vec<&TwMorphism<S>> = Vec::new();
        for g in 0..=d {
            chain.extend(std::iter::repeat(objects[g].delta()).take(counts[g]));
            if g < d {
                chain.push(args[g]);
            }
        }
        if chain.len() >= 2 {
            accumulate_chain(s, &chain, &mut out)?;
        }
        // a strictly lower-triangular δ of rank r has δ^r = 0
        let mut g = 0;
        loop {
            if g > d {
                return Ok(out);
            }
            counts[g] += 1;
            if counts[g] < objects[g].rank() {
                break;
            }
            counts[g] = 0;
            g += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McReport {
    pub rank: usize,
    /// Longest chain of `δ`s that can be nonzero.
    pub max_arity_needed: usize,
}

/// Checks `Σ_d m_d(δ, ..., δ) = 0` exactly.
pub fn mc_check<S: Scalar>(x: &TwistedComplex<S>, s: &AInfStructure<S>) -> Result<McReport> {
    if x.n() != s.n() {
        return Err(Error::InvalidComplex("complex over a different tower".into()));
    }
    let curv = mu_tw(s, &[x], &[])?;
    if let Some((&(row, col), v)) = curv.entries().iter().next() {
        return Err(Error::MCViolation { row, col, value: v.to_string() });
    }
    Ok(McReport { rank: x.rank(), max_arity_needed: x.rank().saturating_sub(1) })
}

/// The morphism complex `Hom(X, Y)` with its twisted operations.
#[derive(Clone, Debug)]
pub struct HomComplex<'a, S> {
    x: &'a TwistedComplex<S>,
    y: &'a TwistedComplex<S>,
    s: &'a AInfStructure<S>,
}

pub fn hom_complex<'a, S: Scalar>(
    x: &'a TwistedComplex<S>,
    y: &'a TwistedComplex<S>,
    s: &'a AInfStructure<S>,
) -> Result<HomComplex<'a, S>> {
    for (name, z) in [("source", x), ("target", y)] {
        mc_check(z, s).map_err(|e| Error::MCPrereqFailed(format!("{name}: {e}")))?;
    }
    Ok(HomComplex { x, y, s })
}

impl<'a, S: Scalar> HomComplex<'a, S> {
    pub fn source(&self) -> &TwistedComplex<S> {
        self.x
    }

    pub fn target(&self) -> &TwistedComplex<S> {
        self.y
    }

    pub fn zero(&self, degree: i64) -> TwMorphism<S> {
        TwMorphism::zero(self.s.n(), self.x.shifts(), self.y.shifts(), degree)
    }

    /// The differential `m_1^tw`.
    pub fn m1(&self, phi: &TwMorphism<S>) -> Result<TwMorphism<S>> {
        mu_tw(self.s, &[self.x, self.y], &[phi])
    }

    /// `m_d^tw` for `d >= 2`, defined when source and target agree;
    /// arguments in application order as in [`mu_tw`].
    pub fn m(&self, args: &[&TwMorphism<S>]) -> Result<TwMorphism<S>> {
        if args.len() >= 2 && self.x != self.y {
            return Err(Error::InvalidComplex("higher operations need an endomorphism complex".into()));
        }
        let objects: Vec<&TwistedComplex<S>> = std::iter::once(self.x)
            .chain(std::iter::repeat(self.y).take(args.len()))
            .collect();
        mu_tw(self.s, &objects, args)
    }
}

/// True if `m_1^tw f = 0`.
pub fn is_closed<S: Scalar>(
    f: &TwMorphism<S>,
    x: &TwistedComplex<S>,
    y: &TwistedComplex<S>,
    s: &AInfStructure<S>,
) -> Result<bool> {
    Ok(hom_complex(x, y, s)?.m1(f)?.is_zero())
}

/// Entries of a morphism as `(row, col, text)` in canonical order.
pub fn entry_table<S: Scalar>(m: &TwMorphism<S>) -> Vec<(usize, usize, String)> {
    m.entries().iter().map(|(&(i, j), v)| (i, j, v.to_string())).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn rank_one_strict_is_multiplication() {
        let n = 2;
        let s = AInfStructure::<Q>::strict(n);
        let x = TwistedComplex::shifted_unit(n, 0);
        let hom = hom_complex(&x, &x, &s).unwrap();
        let a = FElem::x(0, n);
        let b = FElem::t_pow(1, n);
        let ma = TwMorphism::from_entries(n, &[0], &[0], 0, [(0, 0, a.clone())]).unwrap();
        let mb = TwMorphism::from_entries(n, &[0], &[0], 2, [(0, 0, b.clone())]).unwrap();
        let prod = hom.m(&[&ma, &mb]).unwrap();
        assert_eq!(prod.get(0, 0), Some(&(&a * &b)));
        assert_eq!(prod.degree(), 2);
        assert!(hom.m1(&ma).unwrap().is_zero());
        assert!(hom.m(&[&ma, &mb, &ma]).unwrap().is_zero());
    }
}
