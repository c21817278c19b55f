use forge_core::ainf::{build_eta, build_eta_tilde, AInfStructure};
use forge_core::polydiff::PolyDiffCochain;
use forge_core::random::{self, SeededRng};
use forge_core::tower::FElem;
use forge_core::twisted::{
    endo_invariant, hom_complex, is_closed, mc_check, mu_tw, subdiagonal_complex, subdiagonal_search, EndoVerdict,
    TwMorphism, TwistedComplex,
};
use forge_core::{Error, Scalar, Q};
use rand::Rng;

const N: u32 = 2;

fn eta_tilde() -> PolyDiffCochain<Q> {
    build_eta_tilde(&build_eta(N)).unwrap()
}

/// `m_2` and `m_4 = η̃` only. Stasheff holds through arity 5, which is all
/// the tests below touch.
fn truncated() -> AInfStructure<Q> {
    AInfStructure::from_ops(N, [(2, PolyDiffCochain::multiplication(N)), (4, eta_tilde())], 5).unwrap()
}

fn strict() -> AInfStructure<Q> {
    AInfStructure::strict(N)
}

fn xt(i: usize) -> FElem<Q> {
    &FElem::x(i, N) * &FElem::t_pow(1, N)
}

fn koszul_square() -> TwistedComplex<Q> {
    TwistedComplex::new(N, vec![0, 1, 1, 2], [(1, 0, xt(0)), (2, 0, xt(1)), (3, 1, xt(1)), (3, 2, -&xt(0))]).unwrap()
}

fn fork() -> TwistedComplex<Q> {
    TwistedComplex::new(N, vec![0, 1, 1], [(1, 0, xt(0)), (2, 0, xt(2))]).unwrap()
}

fn step() -> TwistedComplex<Q> {
    TwistedComplex::new(N, vec![0, 1], [(1, 0, xt(0))]).unwrap()
}

fn random_morphism(rng: &mut SeededRng, x: &TwistedComplex<Q>, y: &TwistedComplex<Q>, degree: i64) -> TwMorphism<Q> {
    random::tw_morphism(rng, N, x.shifts(), y.shifts(), degree)
}

/// `Σ (-1)^{ℵ_k} m^tw(a_d, ..., m^tw(a_{k+l}, ..., a_{k+1}), a_k, ..., a_1)`
/// with `ℵ_k = Σ_{i<=k} (|a_i| - 1)`: the A∞ relation in the suspended
/// convention, arguments in application order.
fn ainf_relation(s: &AInfStructure<Q>, objs: &[&TwistedComplex<Q>], args: &[&TwMorphism<Q>]) -> TwMorphism<Q> {
    let d = args.len();
    let degree = args.iter().map(|a| a.degree()).sum::<i64>() + 3 - d as i64;
    let mut acc = TwMorphism::zero(N, objs[0].shifts(), objs[d].shifts(), degree);
    for k in 0..d {
        let aleph: i64 = args[..k].iter().map(|a| a.degree() - 1).sum();
        for l in 1..=d - k {
            let inner = mu_tw(s, &objs[k..=k + l], &args[k..k + l]).unwrap();
            let mut outer_args: Vec<&TwMorphism<Q>> = args[..k].to_vec();
            outer_args.push(&inner);
            outer_args.extend_from_slice(&args[k + l..]);
            let mut outer_objs: Vec<&TwistedComplex<Q>> = objs[..=k].to_vec();
            outer_objs.extend_from_slice(&objs[k + l..]);
            let term = mu_tw(s, &outer_objs, &outer_args).unwrap();
            let term = if aleph.rem_euclid(2) == 0 { term } else { term.scale(&-Q::from_int(1)) };
            acc = acc.checked_add(&term).unwrap();
        }
    }
    acc
}

fn random_chain(
    rng: &mut SeededRng,
    objs: &[&TwistedComplex<Q>],
) -> Vec<TwMorphism<Q>> {
    objs.windows(2)
        .map(|w| {
            // pick a degree for which at least one entry is allowed
            let parity = (w[1].shifts()[0] - w[0].shifts()[0]).rem_euclid(2);
            let degree = parity + 2 * rng.gen_range(-1..=1);
            random_morphism(rng, w[0], w[1], degree)
        })
        .collect()
}

#[test]
fn shifted_objects_satisfy_ainf_relations() {
    let s = truncated();
    let mut rng = random::rng(31);
    for arity in [3usize, 5] {
        for _ in 0..4 {
            let objs: Vec<TwistedComplex<Q>> =
                (0..=arity).map(|_| TwistedComplex::shifted_unit(N, rng.gen_range(-2..=2))).collect();
            let refs: Vec<&TwistedComplex<Q>> = objs.iter().collect();
            let chain = random_chain(&mut rng, &refs);
            let args: Vec<&TwMorphism<Q>> = chain.iter().collect();
            assert!(ainf_relation(&s, &refs, &args).is_zero(), "arity {arity}, shifts {:?}", objs.iter().map(|o| o.shifts()[0]).collect::<Vec<_>>());
        }
    }
}

#[test]
fn twisted_objects_satisfy_ainf_relations() {
    let mut rng = random::rng(32);
    let f = strict();
    let pool = [koszul_square(), fork(), step(), TwistedComplex::shifted_unit(N, 1)];
    for _ in 0..6 {
        let objs: Vec<&TwistedComplex<Q>> = (0..4).map(|_| &pool[rng.gen_range(0..pool.len())]).collect();
        let chain = random_chain(&mut rng, &objs);
        let args: Vec<&TwMorphism<Q>> = chain.iter().collect();
        assert!(ainf_relation(&f, &objs, &args).is_zero());
    }
    let s = truncated();
    let pool = [step(), TwistedComplex::shifted_unit(N, 0), TwistedComplex::shifted_unit(N, 1)];
    for _ in 0..6 {
        let objs: Vec<&TwistedComplex<Q>> = (0..3).map(|_| &pool[rng.gen_range(0..pool.len())]).collect();
        let chain = random_chain(&mut rng, &objs);
        let args: Vec<&TwMorphism<Q>> = chain.iter().collect();
        assert!(ainf_relation(&s, &objs, &args).is_zero());
    }
}

#[test]
fn m1_squares_to_zero() {
    let mut rng = random::rng(33);
    for s in [strict(), truncated()] {
        for x in [koszul_square(), fork(), step()] {
            let hom = hom_complex(&x, &x, &s).unwrap();
            for degree in -1..=1 {
                let phi = random_morphism(&mut rng, &x, &x, degree);
                let once = hom.m1(&phi).unwrap();
                assert!(hom.m1(&once).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn maurer_cartan_examples() {
    let f = strict();
    let s = truncated();
    // zero differential always passes
    assert!(mc_check(&TwistedComplex::new(N, vec![0, 3, -1], []).unwrap(), &s).is_ok());
    // rank 2: no composable pair
    let r2 = TwistedComplex::new(N, vec![0, 1], [(1, 0, &xt(2) + &FElem::t_pow(1, N))]).unwrap();
    assert!(mc_check(&r2, &f).is_ok());
    assert!(mc_check(&koszul_square(), &f).is_ok());
    assert!(mc_check(&koszul_square(), &s).is_ok());
    // flipping one sign breaks the square
    let bad = TwistedComplex::new(N, vec![0, 1, 1, 2], [(1, 0, xt(0)), (2, 0, xt(1)), (3, 1, xt(1)), (3, 2, xt(0))])
        .unwrap();
    match mc_check(&bad, &s) {
        Err(Error::MCViolation { row: 3, col: 0, value }) => assert_eq!(value, "2*x1*x2*t^2"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(hom_complex(&bad, &bad, &s), Err(Error::MCPrereqFailed(_))));
}

#[test]
fn direct_sums() {
    let s = truncated();
    let bad = TwistedComplex::new(N, vec![0, 1, 2], [(1, 0, xt(0)), (2, 1, xt(1))]).unwrap();
    let pool = [koszul_square(), fork(), step(), bad.clone(), TwistedComplex::shifted_unit(N, 2)];
    for a in &pool {
        for b in &pool {
            let sum = a.direct_sum(b).unwrap();
            let expect = mc_check(a, &s).is_ok() && mc_check(b, &s).is_ok();
            assert_eq!(mc_check(&sum, &s).is_ok(), expect);
        }
    }
}

#[test]
fn cones_of_closed_maps() {
    let s = truncated();
    let x = step();
    // (c, 0) into Σ^0 F is closed, (0, 1) into Σ^1 F is not
    let y0 = TwistedComplex::shifted_unit(N, 0);
    let c = FElem::x(2, N);
    let f = TwMorphism::from_entries(N, x.shifts(), y0.shifts(), 0, [(0, 0, c)]).unwrap();
    assert!(is_closed(&f, &x, &y0, &s).unwrap());
    let cone = TwistedComplex::cone(&x, &y0, &f).unwrap();
    assert_eq!(cone.shifts(), &[1, 2, 0]);
    assert!(mc_check(&cone, &s).is_ok());

    let y1 = TwistedComplex::shifted_unit(N, 1);
    let g = TwMorphism::from_entries(N, x.shifts(), y1.shifts(), 0, [(0, 1, FElem::one(N))]).unwrap();
    assert!(!is_closed(&g, &x, &y1, &s).unwrap());
    assert!(mc_check(&TwistedComplex::cone(&x, &y1, &g).unwrap(), &s).is_err());
}

#[test]
fn endomorphism_invariants() {
    let f = strict();
    let s = truncated();
    let et = eta_tilde();
    for u in -3..=3 {
        let a = endo_invariant(u, &f);
        assert_eq!(a.verdict, EndoVerdict::NoHigherOperations);
        assert!(a.higher_arities.is_empty());
        let b = endo_invariant(u, &s);
        assert_eq!(b.verdict, EndoVerdict::NonzeroTopClass);
        let sign = if u % 2 == 0 { Q::from_int(1) } else { -Q::from_int(1) };
        assert_eq!(b.ops[&4], et.scale(&sign));
    }
}

#[test]
fn endo_ops_match_rank_one_twisted_ops() {
    let s = truncated();
    let mut rng = random::rng(34);
    for u in [-1, 0, 1, 2] {
        let x = TwistedComplex::shifted_unit(N, u);
        let hom = hom_complex(&x, &x, &s).unwrap();
        let inv = endo_invariant(u, &s);
        for d in [2usize, 4] {
            let elems: Vec<FElem<Q>> = (0..d)
                .map(|_| {
                    let j = rng.gen_range(-1..=1);
                    random::homogeneous(&mut rng, N, j)
                })
                .collect();
            let mats: Vec<TwMorphism<Q>> = elems
                .iter()
                .map(|e| TwMorphism::from_entries(N, &[u], &[u], e.degree().unwrap(), [(0, 0, e.clone())]).unwrap())
                .collect();
            let refs: Vec<&TwMorphism<Q>> = mats.iter().collect();
            let got = hom.m(&refs).unwrap();
            let rev: Vec<FElem<Q>> = elems.iter().rev().cloned().collect();
            let want = inv.ops[&d].evaluate(&rev).unwrap();
            assert_eq!(got.get(0, 0).cloned().unwrap_or_else(|| FElem::zero(N)), want);
        }
    }
}

#[test]
fn subdiagonal_rank_five() {
    let s = truncated();
    let out = subdiagonal_search(&s).unwrap();
    assert_eq!(out.candidates, 8usize.pow(4));
    // in a field a product of nonzero entries never vanishes, so the
    // two-step entries always obstruct
    assert_eq!(out.m2_obstructed, out.candidates);
    assert_eq!(out.passing, 0);
    // the corner is η̃ on the four entries: alternating, so it needs four
    // distinct base monomials from {t, x1 t, x2 t, x3 t}; 4! orders, 2^4 signs
    assert_eq!(out.corner_nonzero, 24 * 16);

    let x = subdiagonal_complex(N, [FElem::t_pow(1, N), xt(0), xt(1), xt(2)]).unwrap();
    assert!(matches!(mc_check(&x, &s), Err(Error::MCViolation { row: 2, col: 0, .. })));
}

#[test]
fn needs_enough_arity() {
    let s = AInfStructure::from_ops(N, [(2, PolyDiffCochain::multiplication(N)), (4, eta_tilde())], 3).unwrap();
    let x = subdiagonal_complex(N, [FElem::t_pow(1, N), xt(0), xt(1), xt(2)]).unwrap();
    assert!(matches!(mc_check(&x, &s), Err(Error::InsufficientArity { have: 3, need: 4 })));
}
