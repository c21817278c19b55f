use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polydiff::{alternating_eval, PolyDiffCochain};
use crate::random::{self, SeededRng};
use crate::scalar::Scalar;
use crate::tower::{parse_ratfunc, FElem, MPoly, RatFunc};

/// A graded automorphism candidate `f_1` of `F`: `x_i ↦ σ(x_i)` on `K`
/// and `t ↦ u · t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutSpec<S> {
    n: u32,
    images_x: Vec<RatFunc<S>>,
    t_unit: RatFunc<S>,
}

#[derive(Serialize, Deserialize)]
struct AutSpecJson {
    images_x: Vec<String>,
    t_unit: String,
}

/// Determinant of the Jacobian `(∂ images[l] / ∂ x_k)`.
pub fn jacobian_det<S: Scalar>(images: &[RatFunc<S>]) -> RatFunc<S> {
    let m = images.len();
    let nvars = images.first().map(|r| r.nvars()).unwrap_or(0);
    let mut a: Vec<Vec<RatFunc<S>>> = images.iter().map(|r| (0..m).map(|k| r.partial(k)).collect()).collect();
    let mut det = RatFunc::one(nvars);
    for col in 0..m {
        let Some(piv) = (col..m).find(|&r| !a[r][col].is_zero()) else {
            return RatFunc::zero(nvars);
        };
        if piv != col {
            a.swap(piv, col);
            det = -&det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        let pinv = p.inv().expect("pivot is nonzero");
        for r in col + 1..m {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &pinv;
            for c in col..m {
                let sub = &f * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    det
}

impl<S: Scalar> AutSpec<S> {
    /// Validates and builds a spec: `n + 1` images with nonzero Jacobian
    /// determinant and a nonzero unit `u`.
    pub fn new(n: u32, images_x: Vec<RatFunc<S>>, t_unit: RatFunc<S>) -> Result<Self> {
        let nv = n as usize + 1;
        if images_x.len() != nv {
            return Err(Error::InvalidAutomorphism(format!("expected {nv} images, got {}", images_x.len())));
        }
        if images_x.iter().chain(std::iter::once(&t_unit)).any(|r| r.nvars() != nv) {
            return Err(Error::InvalidAutomorphism("images live in the wrong number of variables".into()));
        }
        if t_unit.is_zero() {
            return Err(Error::InvalidAutomorphism("t must map to a unit multiple of t".into()));
        }
        if jacobian_det(&images_x).is_zero() {
            return Err(Error::InvalidAutomorphism("Jacobian determinant vanishes".into()));
        }
        Ok(AutSpec { n, images_x, t_unit })
    }

    pub fn identity(n: u32) -> Self {
        let nv = n as usize + 1;
        AutSpec { n, images_x: (0..nv).map(|i| RatFunc::var(i, nv)).collect(), t_unit: RatFunc::one(nv) }
    }

    /// Parses `{"images_x": [...], "t_unit": "..."}`; `n` is the number of
    /// images minus one.
    pub fn from_json(src: &str) -> Result<Self> {
        let raw: AutSpecJson = serde_json::from_str(src).map_err(|e| Error::InvalidAutomorphism(e.to_string()))?;
        if raw.images_x.len() < 2 || raw.images_x.len() % 2 == 0 {
            return Err(Error::InvalidAutomorphism(format!(
                "need n+1 images with n > 0 even, got {}",
                raw.images_x.len()
            )));
        }
        let n = raw.images_x.len() as u32 - 1;
        let images = raw.images_x.iter().map(|s| parse_ratfunc(s, n)).collect::<Result<Vec<_>>>()?;
        let u = parse_ratfunc(&raw.t_unit, n)?;
        Self::new(n, images, u)
    }

    pub fn to_json(&self) -> String {
        let raw = AutSpecJson {
            images_x: self.images_x.iter().map(|r| r.to_string()).collect(),
            t_unit: self.t_unit.to_string(),
        };
        serde_json::to_string(&raw).expect("plain strings serialize")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn images_x(&self) -> &[RatFunc<S>] {
        &self.images_x
    }

    pub fn t_unit(&self) -> &RatFunc<S> {
        &self.t_unit
    }

    pub fn jacobian_det(&self) -> RatFunc<S> {
        jacobian_det(&self.images_x)
    }

    /// `f_1(Σ c_j t^j) = Σ σ(c_j) u^j t^j`.
    pub fn apply(&self, a: &FElem<S>) -> Result<FElem<S>> {
        let mut acc = FElem::zero(self.n);
        for (&j, c) in a.coeffs() {
            let sc = c.substitute(&self.images_x)?;
            let uj = self.t_unit.pow(j as i32)?;
            acc = &acc + &FElem::from_ratfunc(&sc * &uj, j);
        }
        Ok(acc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NonzeroClass,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<S> {
    /// Alternating evaluation of `η̃ ∘ f_1` on `(x_1, ..., x_{n+1}, t)`.
    pub value: FElem<S>,
    pub verdict: Verdict,
    pub jacobian_det: RatFunc<S>,
}

/// Evaluates the first obstruction `η̃ ∘ f_1` alternatingly on the
/// coordinate tuple. A nonzero value is a nonzero HKR symbol, so the class
/// of `η̃ ∘ f_1` is nonzero and `f_1` does not extend.
pub fn morphism_obstruction<S: Scalar>(f1: &AutSpec<S>, eta_tilde: &PolyDiffCochain<S>) -> Result<Certificate<S>> {
    let n = f1.n;
    if eta_tilde.n() != n {
        return Err(Error::InvalidAutomorphism(format!("automorphism is for n = {n}, cochain for n = {}", eta_tilde.n())));
    }
    if eta_tilde.arity() != n as usize + 2 {
        return Err(Error::ArityMismatch { expected: n as usize + 2, got: eta_tilde.arity() });
    }
    let det = f1.jacobian_det();
    if det.is_zero() || f1.t_unit.is_zero() {
        return Err(Error::InvalidAutomorphism("not invertible".into()));
    }
    let mut coords: Vec<FElem<S>> = (0..=n as usize).map(|i| FElem::x(i, n)).collect();
    coords.push(FElem::t_pow(1, n));
    let images = coords.iter().map(|a| f1.apply(a)).collect::<Result<Vec<_>>>()?;
    let value = alternating_eval(eta_tilde, &images)?;
    let verdict = if value.is_zero() { Verdict::Zero } else { Verdict::NonzeroClass };
    Ok(Certificate { value, verdict, jacobian_det: det })
}

/// A seeded random valid spec: `σ(x_i) = a_i x_{π(i)} + (small polynomial
/// in the other variables)` and polynomial `u`, retried until the Jacobian
/// determinant is nonzero.
pub fn random_autspec<S: Scalar>(rng: &mut SeededRng, n: u32) -> AutSpec<S> {
    let nv = n as usize + 1;
    loop {
        let mut perm: Vec<usize> = (0..nv).collect();
        for i in (1..nv).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let images: Vec<RatFunc<S>> = perm
            .iter()
            .map(|&v| {
                let mut a = rng.gen_range(-3..=3);
                if a == 0 {
                    a = 1;
                }
                let lead = MPoly::var(v, nv).scale(&S::from_int(a));
                let tail = random::poly::<S>(rng, nv, 2, 2);
                RatFunc::from_poly(&lead + &tail)
            })
            .collect();
        let u = RatFunc::from_poly(random::nonzero_poly(rng, nv, 2, 1));
        if let Ok(spec) = AutSpec::new(n, images, u) {
            return spec;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::{build_eta, build_eta_tilde};
    use crate::Q;

    fn eta_tilde() -> PolyDiffCochain<Q> {
        build_eta_tilde(&build_eta(2)).unwrap()
    }

    #[test]
    fn identity_gives_24() {
        let c = morphism_obstruction(&AutSpec::identity(2), &eta_tilde()).unwrap();
        assert_eq!(c.value, FElem::constant(Q::from_int(24), 2));
        assert_eq!(c.verdict, Verdict::NonzeroClass);
    }

    #[test]
    fn scaling_x1_doubles() {
        let f = AutSpec::from_json(r#"{"images_x":["2*x1","x2","x3"],"t_unit":"1"}"#).unwrap();
        let c = morphism_obstruction(&f, &eta_tilde()).unwrap();
        assert_eq!(c.value, FElem::constant(Q::from_int(48), 2));
    }

    #[test]
    fn swap_with_unit_x1() {
        let f = AutSpec::from_json(r#"{"images_x":["x2","x1","x3"],"t_unit":"x1"}"#).unwrap();
        let c = morphism_obstruction(&f, &eta_tilde()).unwrap();
        assert_eq!(c.value, crate::tower::parse_felem::<Q>("-24*x1", 2).unwrap());
    }

    #[test]
    fn rejects_degenerate() {
        let r = AutSpec::<Q>::from_json(r#"{"images_x":["x1","x1","x3"],"t_unit":"1"}"#);
        assert!(matches!(r, Err(Error::InvalidAutomorphism(_))));
        let r = AutSpec::<Q>::from_json(r#"{"images_x":["x1","x2","x3"],"t_unit":"0"}"#);
        assert!(matches!(r, Err(Error::InvalidAutomorphism(_))));
        let r = AutSpec::<Q>::from_json(r#"{"images_x":["x1","x2"],"t_unit":"1"}"#);
        assert!(matches!(r, Err(Error::InvalidAutomorphism(_))));
    }

    #[test]
    fn json_round_trip() {
        let mut rng = random::rng(5);
        let f = random_autspec::<Q>(&mut rng, 2);
        assert_eq!(AutSpec::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn jacobian_of_triangular_map() {
        let x = |i| RatFunc::<Q>::var(i, 3);
        let images = vec![&x(0) * &x(1), x(1), &x(2) + &(&x(0) * &x(0))];
        // d(x1 x2)/dx1 = x2, the rest is triangular with ones
        assert_eq!(jacobian_det(&images), x(1));
    }
}
