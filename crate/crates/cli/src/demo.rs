use std::collections::BTreeMap;
use std::fs;
use std::time::Instant;

use anyhow::{Context, Result};
use forge_core::ainf::{
    build_eta, build_eta_tilde, extend_minimal, morphism_obstruction, random_autspec, AInfStructure, AutSpec,
    StasheffMode, Verdict,
};
use forge_core::polydiff::{hkr_symbol, hochschild_differential, solve_coboundary, PolyDiffCochain};
use forge_core::random;
use forge_core::tower::FElem;
use forge_core::twisted::{
    endo_invariant, hom_complex, mc_check, subdiagonal_search, EndoVerdict, TwistedComplex,
};
use forge_core::Q;
use serde::Serialize;
use serde_json::json;

use crate::config::RunConfig;
use crate::report::Report;

#[derive(Serialize)]
struct CertificateRow {
    name: String,
    value: String,
    verdict: Verdict,
    jacobian_det: String,
}

#[derive(Serialize)]
struct EndoRow {
    u: i64,
    strict: EndoVerdict,
    deformed: EndoVerdict,
}

#[derive(Serialize)]
struct ComplexRow {
    name: String,
    rank: usize,
    shifts: Vec<i64>,
    mc_strict: String,
    mc_deformed: String,
}

struct Inputs {
    automorphisms: Vec<(String, AutSpec<Q>)>,
    complexes: Vec<(String, TwistedComplex<Q>)>,
}

fn load_inputs(cfg: &RunConfig) -> Result<Inputs> {
    let mut automorphisms = Vec::new();
    for p in &cfg.automorphisms {
        let src = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let f = AutSpec::from_json(&src).with_context(|| format!("parsing {}", p.display()))?;
        anyhow::ensure!(f.n() == cfg.n, "{} is for n = {}, config has n = {}", p.display(), f.n(), cfg.n);
        automorphisms.push((p.display().to_string(), f));
    }
    let mut complexes = Vec::new();
    for p in &cfg.complexes {
        let src = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let x = TwistedComplex::from_json(&src, cfg.n).with_context(|| format!("parsing {}", p.display()))?;
        complexes.push((p.display().to_string(), x));
    }
    Ok(Inputs { automorphisms, complexes })
}

/// `x1 ↦ 2 x1`, `x1 ↔ x2` with `u = x1`, and `x1 ↦ x1 / (1 + x2)`.
fn bundled_automorphisms(n: u32) -> Vec<(String, AutSpec<Q>)> {
    let vars: Vec<String> = (1..=n + 1).map(|i| format!("x{i}")).collect();
    let with = |first: &[&str], u: &str| {
        let mut images: Vec<String> = vars.clone();
        for (i, s) in first.iter().enumerate() {
            images[i] = s.to_string();
        }
        AutSpec::from_json(&json!({ "images_x": images, "t_unit": u }).to_string()).expect("bundled spec is valid")
    };
    vec![
        ("identity".to_string(), AutSpec::identity(n)),
        ("scale_x1".to_string(), with(&["2*x1"], "1")),
        ("swap_x1_x2".to_string(), with(&["x2", "x1"], "x1")),
        ("rational_x1".to_string(), with(&["x1/(x2 + 1)"], "1")),
    ]
}

fn xt(i: usize, n: u32) -> FElem<Q> {
    &FElem::x(i, n) * &FElem::t_pow(1, n)
}

/// Small complexes that exercise the Maurer–Cartan equation.
pub fn bundled_complexes(n: u32) -> Vec<(String, TwistedComplex<Q>)> {
    let s = n as i64 - 1;
    let square = TwistedComplex::new(
        n,
        vec![0, s, s, 2 * s],
        [(1, 0, xt(0, n)), (2, 0, xt(1, n)), (3, 1, xt(1, n)), (3, 2, -&xt(0, n))],
    )
    .expect("degrees match");
    let fork = TwistedComplex::new(n, vec![0, s, s], [(1, 0, xt(0, n)), (2, 0, xt(2, n))]).expect("degrees match");
    let chain = TwistedComplex::new(n, vec![0, s, 2 * s], [(1, 0, xt(0, n)), (2, 1, xt(1, n))]).expect("degrees match");
    vec![
        ("koszul_square".to_string(), square),
        ("fork".to_string(), fork),
        ("chain".to_string(), chain),
        ("unit_shift_1".to_string(), TwistedComplex::shifted_unit(n, 1)),
    ]
}

fn mc_outcome(x: &TwistedComplex<Q>, s: &AInfStructure<Q>) -> String {
    match mc_check(x, s) {
        Ok(_) => "pass".to_string(),
        Err(e) => e.to_string(),
    }
}

struct Clock {
    on: bool,
    last: Instant,
    times: BTreeMap<String, u128>,
}

impl Clock {
    fn lap(&mut self, step: &str) {
        if self.on {
            self.times.insert(step.to_string(), self.last.elapsed().as_millis());
            self.last = Instant::now();
        }
    }
}

/// Runs the end-to-end pipeline. Errors mean bad input or configuration;
/// failed verdicts are recorded in the report.
pub fn run_demo(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let inputs = load_inputs(cfg)?;
    // the output path is not part of the result
    let mut echo = serde_json::to_value(cfg)?;
    let obj = echo.as_object_mut().expect("config serializes to an object");
    obj.remove("report");
    obj.remove("structure_dump");
    obj.insert("max_arity".into(), json!(cfg.max_arity()));
    let mut report = Report::new("demo", echo);
    let mut clock = Clock { on: cfg.timings, last: Instant::now(), times: BTreeMap::new() };
    pipeline(cfg, &inputs, &mut report, &mut clock);
    if cfg.timings {
        report.timings_ms = Some(clock.times);
    }
    Ok(report)
}

fn pipeline(cfg: &RunConfig, inputs: &Inputs, report: &mut Report, clock: &mut Clock) {
    let n = cfg.n;
    let top = n as usize + 2;

    let eta = build_eta::<Q>(n);
    let eta_tilde = match build_eta_tilde(&eta) {
        Ok(e) => e,
        Err(e) => return report.abort("eta", e),
    };
    report.section(
        "eta",
        json!({
            "eta_terms": eta.num_terms(),
            "eta_tilde_terms": eta_tilde.num_terms(),
            "eta_tilde": eta_tilde.to_string(),
        }),
    );
    clock.lap("eta");

    let closed = hochschild_differential(&eta_tilde).is_zero();
    if !report.check("cocycle", closed, "Hochschild differential of eta_tilde") {
        return;
    }
    clock.lap("cocycle");

    let symbol = hkr_symbol(&eta_tilde);
    report.check("hkr_symbol_nonzero", !symbol.is_zero(), symbol.to_string());
    let solver = cfg.solver();
    match solve_coboundary(&eta_tilde, &solver) {
        Ok(found) => {
            report.check(
                "no_bounded_primitive",
                found.is_none(),
                format!("order <= {}, t-window {}..{}", solver.order_bound, solver.t_min, solver.t_max),
            );
        }
        Err(e) => return report.abort("no_bounded_primitive", e),
    }
    clock.lap("nontriviality");

    let m2 = PolyDiffCochain::<Q>::multiplication(n);
    let (mut deformed, ext) = match extend_minimal(&m2, &eta_tilde, cfg.max_arity(), &solver) {
        Ok(r) => r,
        Err(e) => return report.abort("extension", e),
    };
    let ops: BTreeMap<usize, usize> = deformed.ops().iter().map(|(d, m)| (*d, m.num_terms())).collect();
    let branch = match ext.seed_square_vanishes {
        None => "skipped",
        Some(true) if ext.corrected.is_empty() => "strict",
        _ => "primitive_solved",
    };
    report.section("extension", json!({ "report": ext, "branch": branch, "op_terms": ops }));
    report.check(
        "extension",
        deformed.op(top) == Some(&eta_tilde) && ext.steps.iter().all(|s| s.closed),
        format!("m_{top} = eta_tilde, determined through arity {}", deformed.determined_through()),
    );
    if let Some(p) = &cfg.structure_dump {
        if let Err(e) = fs::write(p, deformed.to_string()) {
            return report.abort("structure_dump", format!("{}: {e}", p.display()));
        }
    }
    clock.lap("extension");

    let through = cfg.max_arity().max(top + 1);
    match deformed.verify_symbolic(through) {
        Ok(reps) => {
            let rows: Vec<_> = reps.iter().map(|r| json!({ "arity": r.arity, "insertions": r.insertions })).collect();
            report.section("stasheff", json!({ "verified_through": deformed.verified_through(), "symbolic": rows }));
            report.check("stasheff_symbolic", true, format!("arities 3..={through}"));
        }
        Err(e) => return report.abort("stasheff_symbolic", e),
    }
    if cfg.stasheff_samples > 0 {
        let mode = StasheffMode::Sampled { count: cfg.stasheff_samples, seed: cfg.seed };
        let bad: Vec<String> =
            (3..=through).filter_map(|d| deformed.stasheff_check(d, mode).err().map(|e| e.to_string())).collect();
        report.check(
            "stasheff_sampled",
            bad.is_empty(),
            if bad.is_empty() { format!("{} samples per arity", cfg.stasheff_samples) } else { bad.join("; ") },
        );
    }
    clock.lap("stasheff");

    let mut autos = bundled_automorphisms(n);
    autos.extend(inputs.automorphisms.iter().cloned());
    let mut rng = random::rng(cfg.seed);
    for k in 0..cfg.random_automorphisms {
        autos.push((format!("random_{k}"), random_autspec(&mut rng, n)));
    }
    let mut rows = Vec::new();
    for (name, f) in &autos {
        match morphism_obstruction(f, &eta_tilde) {
            Ok(c) => rows.push(CertificateRow {
                name: name.clone(),
                value: c.value.to_string(),
                verdict: c.verdict,
                jacobian_det: c.jacobian_det.to_string(),
            }),
            Err(e) => return report.abort("morphism_obstruction", format!("{name}: {e}")),
        }
    }
    let expected_identity = forge_core::scalar::factorial::<Q>(n + 2);
    report.check(
        "identity_certificate",
        rows[0].value == FElem::constant(expected_identity.clone(), n).to_string(),
        format!("{} (expected {})", rows[0].value, expected_identity),
    );
    let nonzero = rows.iter().filter(|r| r.verdict == Verdict::NonzeroClass).count();
    report.check("non_isomorphism", nonzero == rows.len(), format!("{nonzero} of {} certificates nonzero", rows.len()));
    report.section("certificates", rows);
    clock.lap("morphisms");

    let strict = AInfStructure::<Q>::strict(n);
    let endo: Vec<EndoRow> = (cfg.shift_window[0]..=cfg.shift_window[1])
        .map(|u| EndoRow { u, strict: endo_invariant(u, &strict).verdict, deformed: endo_invariant(u, &deformed).verdict })
        .collect();
    let distinct = endo
        .iter()
        .all(|r| r.strict == EndoVerdict::NoHigherOperations && r.deformed == EndoVerdict::NonzeroTopClass);
    report.check(
        "enhancement_distinction",
        distinct,
        format!("shifts {}..={}", cfg.shift_window[0], cfg.shift_window[1]),
    );
    report.section("endo_invariant", endo);
    clock.lap("endo");

    let mut complexes = bundled_complexes(n);
    complexes.extend(inputs.complexes.iter().cloned());
    let mut rows = Vec::new();
    let mut square_failures = Vec::new();
    for (name, x) in &complexes {
        let row = ComplexRow {
            name: name.clone(),
            rank: x.rank(),
            shifts: x.shifts().to_vec(),
            mc_strict: mc_outcome(x, &strict),
            mc_deformed: mc_outcome(x, &deformed),
        };
        if row.mc_deformed == "pass" {
            match m1_squares_to_zero(x, &deformed, &mut rng) {
                Ok(true) => {}
                Ok(false) => square_failures.push(name.clone()),
                Err(e) => square_failures.push(format!("{name}: {e}")),
            }
        }
        rows.push(row);
    }
    report.check(
        "twisted_m1_squared",
        square_failures.is_empty(),
        if square_failures.is_empty() { "on every Maurer-Cartan complex".to_string() } else { square_failures.join("; ") },
    );
    report.section("twisted", rows);
    match subdiagonal_search(&deformed) {
        Ok(s) => report.section("rank5_search", s),
        Err(e) => return report.abort("rank5_search", e),
    }
    clock.lap("twisted");
}

fn m1_squares_to_zero(
    x: &TwistedComplex<Q>,
    s: &AInfStructure<Q>,
    rng: &mut random::SeededRng,
) -> forge_core::Result<bool> {
    let hom = hom_complex(x, x, s)?;
    for degree in -1..=1 {
        let phi = random::tw_morphism::<Q>(rng, s.n(), x.shifts(), x.shifts(), degree);
        if !hom.m1(&hom.m1(&phi)?)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
