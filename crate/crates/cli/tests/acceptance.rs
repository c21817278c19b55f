//! Acceptance suite for n = 2, K = k(x1, x2, x3).
//!
//! Runs every criterion, prints one line per criterion and exits nonzero if
//! any failed. All comparisons are exact (tolerance zero).

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use forge_cli::demo::bundled_complexes;
use forge_cli::{run_demo, RunConfig};
use forge_core::ainf::{
    build_eta, build_eta_tilde, extend_minimal, morphism_obstruction, random_autspec, AInfStructure, AutSpec,
    ExtensionReport, StasheffMode, Verdict,
};
use forge_core::polydiff::{bracket, hkr_symbol, hochschild_differential, solve_coboundary, PolyDiffCochain, SolverConfig};
use forge_core::random;
use forge_core::small_hh::{hh_bruteforce, hh_laurent, kunneth_check, tensor_algebra, SmallAlgebra, DEFAULT_SIZE_LIMIT};
use forge_core::tower::{FElem, RatFunc};
use forge_core::twisted::{endo_invariant, hom_complex, mc_check, EndoVerdict};
use forge_core::{Scalar, Q};
use rand::Rng;

const N: u32 = 2;
const TOL: &str = "tol=exact";

struct Ctx {
    eta_tilde: PolyDiffCochain<Q>,
    deformed: AInfStructure<Q>,
    ext: ExtensionReport,
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn sign(e: i64) -> Q {
    if e.rem_euclid(2) == 0 {
        Q::from_int(1)
    } else {
        Q::from_int(-1)
    }
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<RatFunc<Q>>]) -> RatFunc<Q> {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatFunc::zero(m[0][0].nvars());
    for c in 0..m.len() {
        let minor: Vec<Vec<RatFunc<Q>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][c] * &cofactor_det(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn cocycle(ctx: &Ctx) -> Outcome {
    let d = hochschild_differential(&ctx.eta_tilde);
    ensure(d.is_zero(), format!("δη̃ has {} terms", d.num_terms()))?;
    Ok(format!("δη̃ = 0, η̃ has {} terms", ctx.eta_tilde.num_terms()))
}

fn nontriviality(ctx: &Ctx) -> Outcome {
    let symbol = hkr_symbol(&ctx.eta_tilde);
    ensure(!symbol.is_zero(), "symbol vanishes")?;
    for order_bound in 1..=3 {
        let cfg = SolverConfig { order_bound, t_min: -2, t_max: 2 };
        let found = solve_coboundary(&ctx.eta_tilde, &cfg).map_err(|e| e.to_string())?;
        ensure(found.is_none(), format!("primitive found at order bound {order_bound}"))?;
    }
    Ok(format!("symbol {symbol}, no primitive for order <= 3, t in -2..2"))
}

fn existence(ctx: &Ctx) -> Outcome {
    ensure(ctx.deformed.op(4) == Some(&ctx.eta_tilde), "m4 is not η̃")?;
    ensure(ctx.ext.steps.iter().all(|s| s.closed), "an obstruction is not closed")?;
    for arity in 3..=7 {
        ctx.deformed.stasheff_check(arity, StasheffMode::Symbolic).map_err(|e| e.to_string())?;
    }
    // pinned branch: [η̃, η̃] is not zero on the nose, a primitive m6 is solved
    ensure(ctx.ext.seed_square_vanishes == Some(false), "branch changed: seed square vanishes")?;
    ensure(ctx.ext.corrected == vec![6], format!("corrected arities {:?}", ctx.ext.corrected))?;
    let m6 = ctx.deformed.op(6).map_or(0, |m| m.num_terms());
    Ok(format!("Stasheff symbolic for N = 3..7, m5 = 0, m6 solved ({m6} terms)"))
}

fn non_isomorphism(ctx: &Ctx) -> Outcome {
    let id = morphism_obstruction(&AutSpec::identity(N), &ctx.eta_tilde).map_err(|e| e.to_string())?;
    ensure(id.value == FElem::constant(Q::from_int(24), N), format!("identity certificate {}", id.value))?;
    let mut rng = random::rng(2024);
    let count = 25;
    for k in 0..count {
        let f = random_autspec::<Q>(&mut rng, N);
        let c = morphism_obstruction(&f, &ctx.eta_tilde).map_err(|e| e.to_string())?;
        ensure(c.verdict == Verdict::NonzeroClass, format!("automorphism {k} has a zero certificate"))?;
        // c = 24 u det J, with det J recomputed by cofactor expansion
        let jac: Vec<Vec<RatFunc<Q>>> =
            f.images_x().iter().map(|g| (0..=N as usize).map(|i| g.partial(i)).collect()).collect();
        let want = &(&cofactor_det(&jac) * f.t_unit()).scale(&Q::from_int(24));
        ensure(c.value == FElem::from_ratfunc(want.clone(), 0), format!("automorphism {k}: {} != {want}", c.value))?;
    }
    Ok(format!("identity certificate 24, {count} random certificates nonzero"))
}

fn lemma_laurent(_: &Ctx) -> Outcome {
    let l = hh_laurent::<Q>(4, 7);
    ensure(l.ranks == vec![1, 1, 0, 0, 0], format!("ranks {:?}", l.ranks))?;
    ensure(l.exact, "complex not exact in high degrees")?;
    ensure(l.derivation_closed && !l.derivation_inner, "d/dt class is trivial")?;
    Ok(format!("ranks {:?}, d/dt closed and not inner", l.ranks))
}

fn lemma_kunneth(_: &Ctx) -> Outcome {
    let fixtures: Vec<(&str, SmallAlgebra<Q>)> = vec![
        ("k", SmallAlgebra::ground()),
        ("k x k", SmallAlgebra::split_pair()),
        ("k[e]/e^2, |e|=0", SmallAlgebra::square_zero(0)),
        ("k[e]/e^2, |e|=1", SmallAlgebra::square_zero(1)),
        ("k[e]/e^2, |e|=-1", SmallAlgebra::square_zero(-1)),
    ];
    let mut pairs = 0;
    for (na, a) in &fixtures {
        for (nb, b) in &fixtures {
            let k = kunneth_check(a, b, 3, DEFAULT_SIZE_LIMIT).map_err(|e| e.to_string())?;
            ensure(k.holds && k.bigraded_holds, format!("{na} ⊗ {nb}: {:?} vs {:?}", k.lhs, k.rhs))?;
            pairs += 1;
        }
    }
    let dual = SmallAlgebra::<Q>::square_zero(0);
    let k = kunneth_check(&dual, &dual, 3, DEFAULT_SIZE_LIMIT).map_err(|e| e.to_string())?;
    ensure(k.lhs == vec![4, 4, 5, 6] && k.rhs == vec![4, 4, 5, 6], format!("{:?} vs {:?}", k.lhs, k.rhs))?;
    // convolution oracle: HH of the dual numbers alone is (2, 1, 1, 1)
    let single = hh_bruteforce(&dual, 3, DEFAULT_SIZE_LIMIT).map_err(|e| e.to_string())?;
    ensure(single.dims == vec![2, 1, 1, 1], format!("single factor {:?}", single.dims))?;
    let conv: Vec<usize> = (0..=3).map(|i| (0..=i).map(|j| single.dims[j] * single.dims[i - j]).sum()).collect();
    ensure(conv == k.lhs, format!("convolution {conv:?}"))?;
    let direct = hh_bruteforce(&tensor_algebra(&dual, &dual), 3, DEFAULT_SIZE_LIMIT).map_err(|e| e.to_string())?;
    ensure(direct.dims == conv, format!("direct {:?}", direct.dims))?;
    Ok(format!("{pairs} fixture pairs at imax 3, dual ⊗ dual = (4,4,5,6) on both sides"))
}

fn enhancement(ctx: &Ctx) -> Outcome {
    let strict = AInfStructure::<Q>::strict(N);
    for u in -3..=3 {
        let a = endo_invariant(u, &strict);
        ensure(a.verdict == EndoVerdict::NoHigherOperations, format!("F at u = {u}: {:?}", a.verdict))?;
        let b = endo_invariant(u, &ctx.deformed);
        ensure(b.verdict == EndoVerdict::NonzeroTopClass, format!("F_η at u = {u}: {:?}", b.verdict))?;
        ensure(b.ops[&4] == ctx.eta_tilde.scale(&sign(u)), format!("m4 at u = {u} is not ±η̃"))?;
    }
    Ok("u in -3..3: F has no higher operations, F_η has m4 = ±η̃ with nonzero symbol".into())
}

fn infrastructure(ctx: &Ctx) -> Outcome {
    let mut rng = random::rng(99);
    let samples = 20;
    for _ in 0..samples {
        let arity = rng.gen_range(0..=3);
        let s = N as i64 * rng.gen_range(-1..=1);
        let phi = random::cochain::<Q>(&mut rng, N, arity, 2, s);
        ensure(hochschild_differential(&hochschild_differential(&phi)).is_zero(), "δδ ≠ 0")?;
    }
    for _ in 0..samples {
        let mut c = || {
            let arity = rng.gen_range(1..=2);
            let s = N as i64 * rng.gen_range(-1..=0);
            random::cochain::<Q>(&mut rng, N, arity, 2, s)
        };
        let (f, g, h) = (c(), c(), c());
        let d = |x: &PolyDiffCochain<Q>| x.total_degree() - 1;
        let j = &(&bracket(&f, &bracket(&g, &h)).scale(&sign(d(&f) * d(&h)))
            + &bracket(&g, &bracket(&h, &f)).scale(&sign(d(&g) * d(&f))))
            + &bracket(&h, &bracket(&f, &g)).scale(&sign(d(&h) * d(&g)));
        ensure(j.is_zero(), "graded Jacobi fails")?;
    }
    let mut checked = 0;
    for (name, x) in bundled_complexes(N) {
        if mc_check(&x, &ctx.deformed).is_err() {
            continue;
        }
        let hom = hom_complex(&x, &x, &ctx.deformed).map_err(|e| e.to_string())?;
        for degree in -1..=1 {
            let phi = random::tw_morphism::<Q>(&mut rng, N, x.shifts(), x.shifts(), degree);
            let twice = hom.m1(&hom.m1(&phi).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(twice.is_zero(), format!("(m1^tw)^2 ≠ 0 on {name}"))?;
        }
        checked += 1;
    }
    ensure(checked >= 3, format!("only {checked} Maurer-Cartan complexes"))?;
    let cfg = RunConfig::default();
    let first = run_demo(&cfg).map_err(|e| e.to_string())?.to_json();
    let second = run_demo(&cfg).map_err(|e| e.to_string())?.to_json();
    ensure(first == second, "demo reports differ between runs")?;
    Ok(format!(
        "δδ = 0 and Jacobi on {samples} samples each, (m1^tw)^2 = 0 on {checked} complexes, identical reports"
    ))
}

fn main() {
    let start = Instant::now();
    let eta_tilde = build_eta_tilde(&build_eta::<Q>(N)).expect("η̃ builds");
    let (deformed, ext) = extend_minimal(&PolyDiffCochain::multiplication(N), &eta_tilde, 7, &SolverConfig::default())
        .expect("extension through arity 7");
    let ctx = Ctx { eta_tilde, deformed, ext };

    let criteria: [(&str, fn(&Ctx) -> Outcome); 8] = [
        ("cocycle", cocycle),
        ("nontriviality", nontriviality),
        ("existence", existence),
        ("non-isomorphism", non_isomorphism),
        ("laurent", lemma_laurent),
        ("kunneth", lemma_kunneth),
        ("enhancement", enhancement),
        ("infrastructure", infrastructure),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| f(&ctx)))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(msg) => println!("[PASS] criterion {} {name}: {msg} | {TOL} | {ms} ms", i + 1),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] criterion {} {name}: {msg} | {TOL} | {ms} ms", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
