use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::polydiff::{insert, PolyDiffCochain};
use crate::random::{self, SeededRng};
use crate::scalar::Scalar;
use crate::tower::FElem;

/// A minimal A∞-structure `(0, m_2, m_3, ...)` on `F`.
///
/// `m_2` is always the multiplication. Every `m_d` with
/// `d <= determined_through` is fixed (an absent entry means zero);
/// Stasheff identities are known to hold for arities
/// `3..=verified_through`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfStructure<S> {
    n: u32,
    ops: BTreeMap<usize, PolyDiffCochain<S>>,
    determined_through: usize,
    verified_through: usize,
}

/// Sign of `m_a(1^r ⊗ m_b ⊗ 1^t)` in the Stasheff identity: `(-1)^{r + bt}`.
pub fn stasheff_sign<S: Scalar>(r: usize, b: usize, t: usize) -> S {
    if (r + b * t) % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StasheffMode {
    Symbolic,
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StasheffReport {
    pub arity: usize,
    pub mode: StasheffMode,
    /// Number of nonzero `m_a ∘_r m_b` insertions that entered the sum.
    pub insertions: usize,
}

impl<S: Scalar> AInfStructure<S> {
    /// The strictly associative structure: only `m_2`.
    pub fn strict(n: u32) -> Self {
        let mut ops = BTreeMap::new();
        ops.insert(2, PolyDiffCochain::multiplication(n));
        AInfStructure { n, ops, determined_through: usize::MAX, verified_through: usize::MAX }
    }

    /// Builds a structure from explicit operations, checking minimality,
    /// that `m_2` is the multiplication, and the degree law `|m_d| = 2 - d`.
    /// Nothing is marked verified.
    pub fn from_ops(
        n: u32,
        ops: impl IntoIterator<Item = (usize, PolyDiffCochain<S>)>,
        determined_through: usize,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (d, m) in ops {
            if d < 2 {
                return Err(Error::GradingMismatch(format!("minimal structure cannot have m_{d}")));
            }
            if m.arity() != d {
                return Err(Error::ArityMismatch { expected: d, got: m.arity() });
            }
            if m.degree() != 2 - d as i64 {
                return Err(Error::GradingMismatch(format!("m_{d} has degree {}, expected {}", m.degree(), 2 - d as i64)));
            }
            if !m.is_zero() {
                map.insert(d, m);
            }
        }
        if map.get(&2) != Some(&PolyDiffCochain::multiplication(n)) {
            return Err(Error::GradingMismatch("m_2 must be the multiplication of F".into()));
        }
        Ok(AInfStructure { n, ops: map, determined_through, verified_through: 2 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ops(&self) -> &BTreeMap<usize, PolyDiffCochain<S>> {
        &self.ops
    }

    pub fn op(&self, d: usize) -> Option<&PolyDiffCochain<S>> {
        self.ops.get(&d)
    }

    pub fn determined_through(&self) -> usize {
        self.determined_through
    }

    pub fn verified_through(&self) -> usize {
        self.verified_through
    }

    /// Arities `d >= 3` with a nonzero operation.
    pub fn higher_arities(&self) -> Vec<usize> {
        self.ops.keys().copied().filter(|&d| d >= 3).collect()
    }

    pub fn is_strict(&self) -> bool {
        self.higher_arities().is_empty()
    }

    fn require(&self, d: usize) -> Result<()> {
        if d > self.determined_through {
            Err(Error::InsufficientArity { have: self.determined_through, need: d })
        } else {
            Ok(())
        }
    }

    /// Evaluates `m_d` (zero if absent).
    pub fn apply(&self, d: usize, args: &[FElem<S>]) -> Result<FElem<S>> {
        self.require(d)?;
        match self.ops.get(&d) {
            Some(m) => m.evaluate(args),
            None => Ok(FElem::zero(self.n)),
        }
    }

    /// `Σ_{a+b=N+1} Σ_r (-1)^{r+bt} m_a ∘_{r} m_b` as a cochain, together
    /// with the number of insertions used.
    pub fn stasheff_cochain(&self, arity: usize) -> Result<(PolyDiffCochain<S>, usize)> {
        self.require(arity - 1)?;
        let mut acc = PolyDiffCochain::zero(self.n, arity, 3 - arity as i64);
        let mut count = 0;
        for b in 2..arity {
            let a = arity + 1 - b;
            let (Some(ma), Some(mb)) = (self.ops.get(&a), self.ops.get(&b)) else { continue };
            for r in 0..a {
                let t = a - 1 - r;
                let part = insert(ma, r, mb);
                acc = &acc + &part.scale(&stasheff_sign::<S>(r, b, t));
                count += 1;
            }
        }
        Ok((acc, count))
    }

    fn stasheff_pointwise(&self, arity: usize, args: &[FElem<S>]) -> Result<FElem<S>> {
        let mut acc = FElem::zero(self.n);
        for b in 2..arity {
            let a = arity + 1 - b;
            let (Some(ma), Some(mb)) = (self.ops.get(&a), self.ops.get(&b)) else { continue };
            for r in 0..a {
                let t = a - 1 - r;
                let inner = mb.evaluate(&args[r..r + b])?;
                let mut outer_args: Vec<FElem<S>> = args[..r].to_vec();
                outer_args.push(inner);
                outer_args.extend(args[r + b..].iter().cloned());
                let v = ma.evaluate(&outer_args)?;
                let sign = stasheff_sign::<S>(r, b, t);
                acc = &acc + &v.scale(&sign);
            }
        }
        Ok(acc)
    }

    /// Checks the arity-`N` Stasheff identity.
    ///
    /// Symbolic mode demands the normal form be zero; sampled mode evaluates
    /// the identity directly (without Leibniz expansion) on seeded random
    /// argument tuples.
    pub fn stasheff_check(&self, arity: usize, mode: StasheffMode) -> Result<StasheffReport> {
        if arity < 3 {
            return Err(Error::ArityMismatch { expected: 3, got: arity });
        }
        match mode {
            StasheffMode::Symbolic => {
                let (c, insertions) = self.stasheff_cochain(arity)?;
                if !c.is_zero() {
                    let first = c.terms().iter().next().map(|(s, v)| {
                        let slots: Vec<String> = s.iter().map(|o| o.fmt_with(self.n)).collect();
                        format!("{v} | {}", slots.join(", "))
                    });
                    return Err(Error::StasheffViolation {
                        arity,
                        detail: format!("{} nonzero terms, first: {}", c.num_terms(), first.unwrap_or_default()),
                    });
                }
                Ok(StasheffReport { arity, mode, insertions })
            }
            StasheffMode::Sampled { count, seed } => {
                self.require(arity - 1)?;
                let mut rng = random::rng(seed ^ (arity as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
                for _ in 0..count {
                    let args: Vec<FElem<S>> = (0..arity).map(|_| random_arg(&mut rng, self.n)).collect();
                    let v = self.stasheff_pointwise(arity, &args)?;
                    if !v.is_zero() {
                        let shown: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                        return Err(Error::StasheffViolation {
                            arity,
                            detail: format!("value {v} at ({})", shown.join(", ")),
                        });
                    }
                }
                let insertions = (2..arity)
                    .filter(|&b| self.ops.contains_key(&b) && self.ops.contains_key(&(arity + 1 - b)))
                    .map(|b| arity + 1 - b)
                    .sum();
                Ok(StasheffReport { arity, mode, insertions })
            }
        }
    }

    /// Runs symbolic Stasheff checks for `3..=up_to` and records success.
    pub fn verify_symbolic(&mut self, up_to: usize) -> Result<Vec<StasheffReport>> {
        let mut reports = Vec::new();
        for arity in 3..=up_to {
            reports.push(self.stasheff_check(arity, StasheffMode::Symbolic)?);
        }
        self.verified_through = self.verified_through.max(up_to);
        Ok(reports)
    }

    /// The same structure with every `m_d` scaled by `f(d)`.
    pub fn map_ops(&self, f: impl Fn(usize) -> S) -> Self {
        let mut out = self.clone();
        for (d, m) in out.ops.iter_mut() {
            *m = m.scale(&f(*d));
        }
        out
    }
}

fn random_arg<S: Scalar>(rng: &mut SeededRng, n: u32) -> FElem<S> {
    if rng.gen_bool(0.5) {
        random::felem(rng, n)
    } else {
        let j = rng.gen_range(-2..=2);
        random::homogeneous(rng, n, j)
    }
}

/// Dump format: one `m<d>:` header per operation followed by the cochain
/// literal.
impl<S: Scalar> fmt::Display for AInfStructure<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, m) in &self.ops {
            writeln!(f, "m{d}:")?;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
