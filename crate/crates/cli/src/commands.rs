use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use forge_core::ainf::{build_eta, build_eta_tilde, extend_minimal, morphism_obstruction, AInfStructure, AutSpec, Verdict};
use forge_core::polydiff::{PolyDiffCochain, SolverConfig};
use forge_core::small_hh::{hh_bruteforce, hh_laurent, kunneth_check, SmallAlgebra, DEFAULT_SIZE_LIMIT};
use forge_core::twisted::{mc_check, TwistedComplex};
use forge_core::{Error, Q};
use serde_json::json;

use crate::report::Report;

pub const SIZE_LIMIT_VAR: &str = "FORGE_SIZE_LIMIT";

/// Brute-force size guard, overridable through `FORGE_SIZE_LIMIT`.
pub fn size_limit() -> Result<usize> {
    match std::env::var(SIZE_LIMIT_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{SIZE_LIMIT_VAR}={v} is not a size")),
        Err(_) => Ok(DEFAULT_SIZE_LIMIT),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_algebra(path: &Path) -> Result<SmallAlgebra<Q>> {
    SmallAlgebra::from_json(&read(path)?).with_context(|| format!("loading {}", path.display()))
}

pub fn cmd_hh(path: &Path, imax: usize) -> Result<Report> {
    let alg = load_algebra(path)?;
    let table = hh_bruteforce(&alg, imax, size_limit()?)?;
    let mut r = Report::new("hh", json!({ "algebra": path.display().to_string(), "imax": imax }));
    r.check("hh", true, format!("dims {:?}", table.dims));
    r.section("table", table);
    Ok(r)
}

pub fn cmd_kunneth(a: &Path, b: &Path, imax: usize) -> Result<Report> {
    let (alg_a, alg_b) = (load_algebra(a)?, load_algebra(b)?);
    let k = kunneth_check(&alg_a, &alg_b, imax, size_limit()?)?;
    let mut r = Report::new(
        "kunneth",
        json!({ "a": a.display().to_string(), "b": b.display().to_string(), "imax": imax }),
    );
    r.check("kunneth", k.holds, format!("lhs {:?}, rhs {:?}", k.lhs, k.rhs));
    r.section("kunneth", k);
    Ok(r)
}

pub fn cmd_laurent(imax: usize, seed: u64) -> Result<Report> {
    if imax < 1 {
        bail!("imax must be at least 1");
    }
    let l = hh_laurent::<Q>(imax, seed);
    let mut expected = vec![0; imax + 1];
    expected[0] = 1;
    expected[1] = 1;
    let mut r = Report::new("laurent", json!({ "imax": imax, "seed": seed }));
    r.check("laurent_ranks", l.ranks == expected && l.exact, format!("ranks {:?}", l.ranks));
    r.check(
        "derivation_class",
        l.derivation_closed && !l.derivation_inner,
        "d/dt is a closed, non-inner derivation",
    );
    r.section("laurent", l);
    Ok(r)
}

pub fn cmd_obstruction(f1: &Path) -> Result<Report> {
    let spec = AutSpec::<Q>::from_json(&read(f1)?).with_context(|| format!("loading {}", f1.display()))?;
    let eta_tilde = build_eta_tilde(&build_eta(spec.n()))?;
    let c = morphism_obstruction(&spec, &eta_tilde)?;
    let mut r = Report::new("obstruction", json!({ "f1": f1.display().to_string(), "n": spec.n() }));
    r.check("nonzero_certificate", c.verdict == Verdict::NonzeroClass, c.value.to_string());
    r.section(
        "certificate",
        json!({ "value": c.value.to_string(), "verdict": c.verdict, "jacobian_det": c.jacobian_det.to_string() }),
    );
    Ok(r)
}

/// Structures a complex can be checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Over {
    /// The strictly associative `F`.
    Strict,
    /// `F_η`, the deformation by `η̃`.
    Deformed,
}

/// The deformed structure determined far enough for a rank-`r` complex.
fn deformed_for_rank(n: u32, rank: usize) -> Result<AInfStructure<Q>> {
    let eta_tilde = build_eta_tilde(&build_eta(n))?;
    let top = n as usize + 2;
    // m_{n+3} has degree -n-1, so it vanishes and {m_2, m_{n+2}} is
    // determined through n+3
    if rank <= top + 2 {
        return Ok(AInfStructure::from_ops(n, [(2, PolyDiffCochain::multiplication(n)), (top, eta_tilde)], top + 1)?);
    }
    let (s, _) = extend_minimal(&PolyDiffCochain::multiplication(n), &eta_tilde, rank, &SolverConfig::default())?;
    Ok(s)
}

pub fn cmd_tw_check(path: &Path, n: u32, over: Over) -> Result<Report> {
    if n == 0 || n % 2 != 0 {
        bail!("n must be even and positive, got {n}");
    }
    let x = TwistedComplex::<Q>::from_json(&read(path)?, n).with_context(|| format!("loading {}", path.display()))?;
    let s = match over {
        Over::Strict => AInfStructure::strict(n),
        Over::Deformed => deformed_for_rank(n, x.rank())?,
    };
    let mut r = Report::new(
        "tw check",
        json!({ "complex": path.display().to_string(), "n": n, "over": format!("{over:?}").to_lowercase() }),
    );
    r.section("complex", json!({ "rank": x.rank(), "shifts": x.shifts() }));
    match mc_check(&x, &s) {
        Ok(rep) => {
            r.check("maurer_cartan", true, format!("rank {}", rep.rank));
        }
        Err(e @ Error::MCViolation { .. }) => {
            r.check("maurer_cartan", false, e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}
