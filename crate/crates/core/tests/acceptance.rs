//! Acceptance criteria, one line of output each.
//!
//! Every expected value is recomputed here from plain summation loops over
//! weight lists; the library is only ever the thing being checked.

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigdist::integration::{act, convolve, integrate, natural_sum};
use rigdist::lawcheck::{run_suite, LawReport, SuiteConfig};
use rigdist::probability::{affine_push_expectation, condition, expectation, expectation_of_sum, marginals};
use rigdist::schwartz::{check_functional_linearity, dirac_functional, quadratic_functional, tau, Functional};
use rigdist::strength::{psi, psi_tilde};
use rigdist::{Boolean, Dist, Element, FinSpace, Mat2Nat, MinPlus, Modular, Natural, Rational, Rig, TestFn};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn atoms(names: &[&str]) -> Vec<Element> {
    names.iter().map(|s| Element::atom(*s)).collect()
}

/// Every weighting of `carrier` by `values`, zeros included.
fn all_weightings<C: Clone>(carrier: &[Element], values: &[C]) -> Vec<Vec<(Element, C)>> {
    let mut out = vec![Vec::new()];
    for x in carrier {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut row = prefix.clone();
                    row.push((x.clone(), v.clone()));
                    row
                })
            })
            .collect();
    }
    out
}

fn all_dists<R: Rig>(rig: &R, carrier: &[Element]) -> Vec<Dist<R>> {
    let values = rig.enumerate().expect("finite rig");
    all_weightings(carrier, &values)
        .into_iter()
        .map(|w| Dist::from_weights(rig, w))
        .collect()
}

fn all_fns<R: Rig>(rig: &R, carrier: &[Element]) -> Vec<TestFn<R>> {
    let values = rig.enumerate().expect("finite rig");
    all_weightings(carrier, &values)
        .into_iter()
        .map(|w| TestFn::from_pairs(rig, w))
        .collect()
}

/// `Σ_x P(x) * φ(x)` over raw weights.
fn sum_weighted<R: Rig>(rig: &R, p: &Dist<R>, phi: impl Fn(&Element) -> R::Elem) -> R::Elem {
    let mut acc = rig.zero();
    for (x, w) in p.iter() {
        acc = rig.add(&acc, &rig.mul(w, &phi(x)));
    }
    acc
}

/// `Σ_Q M(Q) * Q(x)`, collected point by point.
fn naive_flatten<R: Rig>(rig: &R, m: &Dist<R>) -> BTreeMap<Element, R::Elem> {
    let mut out: BTreeMap<Element, R::Elem> = BTreeMap::new();
    for (q, outer) in m.iter() {
        let Element::FnTable(rows) = q else { panic!("not a table") };
        for (x, c) in rows {
            let c = rig.parse(c).unwrap();
            let slot = out.entry(x.clone()).or_insert_with(|| rig.zero());
            *slot = rig.add(slot, &rig.mul(outer, &c));
        }
    }
    out.retain(|_, c| !rig.is_zero(c));
    out
}

fn as_map<R: Rig>(p: &Dist<R>) -> BTreeMap<Element, R::Elem> {
    p.iter().map(|(k, w)| (k.clone(), w.clone())).collect()
}

fn fn_of<R: Rig>(phi: &TestFn<R>) -> impl Fn(&Element) -> R::Elem + '_ {
    move |x| phi.get(x).cloned().unwrap_or_else(|| phi.rig().zero())
}

fn pair(a: &Element, b: &Element) -> Element {
    Element::pair(a.clone(), b.clone())
}

fn law<'a>(reports: &'a [LawReport], name: &str) -> &'a LawReport {
    reports.iter().find(|r| r.law == name).unwrap_or_else(|| panic!("no law {name}"))
}

fn passing(reports: &[LawReport], prefixes: &[&str]) -> Result<usize, String> {
    let mut cases = 0;
    for r in reports.iter().filter(|r| prefixes.iter().any(|p| r.law.starts_with(p))) {
        ensure(r.passed(), || format!("{} failed: {:?}", r.law, r.violations.first()))?;
        ensure(r.cases > 0, || format!("{} ran no cases", r.law))?;
        cases += r.cases;
    }
    Ok(cases)
}

/// Suite reports at carrier size 2 (seed 0, 500 samples), computed once.
fn suite(rig: &str) -> &'static [LawReport] {
    static CACHE: OnceLock<BTreeMap<&'static str, Vec<LawReport>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let cfg = SuiteConfig::new(2, 0);
        BTreeMap::from([
            ("bool", run_suite(&Boolean, &cfg).unwrap()),
            ("mod:2", run_suite(&Modular::new(2), &cfg).unwrap()),
            ("mod:3", run_suite(&Modular::new(3), &cfg).unwrap()),
            ("nat", run_suite(&Natural, &cfg).unwrap()),
            ("rational", run_suite(&Rational, &cfg).unwrap()),
            ("tropical", run_suite(&MinPlus, &cfg).unwrap()),
        ])
    });
    &cache[rig]
}

// Seeded rationals.

fn rand_q(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.random_range(-4i64..=4).into(), rng.random_range(1i64..=4).into())
}

fn rand_nonzero_q(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let q = rand_q(rng);
        if q != BigRational::from_integer(0.into()) {
            return q;
        }
    }
}

fn rand_dist(rng: &mut ChaCha8Rng, carrier: &[Element]) -> Dist<Rational> {
    let mut w = Vec::new();
    for x in carrier {
        if rng.random_bool(0.75) {
            w.push((x.clone(), rand_q(rng)));
        }
    }
    Dist::from_weights(&Rational, w)
}

fn rand_probability(rng: &mut ChaCha8Rng, carrier: &[Element]) -> Dist<Rational> {
    loop {
        let p = rand_dist(rng, carrier);
        let t = p.total();
        if t != Rational.zero() {
            return p.scale(&t.recip());
        }
    }
}

fn rand_fn(rng: &mut ChaCha8Rng, carrier: &[Element]) -> TestFn<Rational> {
    TestFn::from_pairs(&Rational, carrier.iter().map(|x| (x.clone(), rand_q(rng))))
}

fn q(s: &str) -> BigRational {
    Rational.parse(s).unwrap()
}

// 1. Monad and functor laws.

fn monad_laws_exhaustive<R: Rig>(rig: &R) -> Result<usize, String> {
    let x = atoms(&["x1", "x2"]);
    let dists = all_dists(rig, &x);
    let encoded: Vec<Element> = dists.iter().map(Dist::to_element).collect();
    let values: Vec<R::Elem> = rig.enumerate().unwrap().into_iter().filter(|v| !rig.is_zero(v)).collect();
    let mut cases = 0;

    // T(T(X)) with support at most two.
    let mut nested = vec![Dist::zero(rig)];
    for (i, a) in encoded.iter().enumerate() {
        for v in &values {
            nested.push(Dist::from_weights(rig, [(a.clone(), v.clone())]));
            for b in &encoded[i + 1..] {
                for w in &values {
                    nested.push(Dist::from_weights(rig, [(a.clone(), v.clone()), (b.clone(), w.clone())]));
                }
            }
        }
    }
    let maps: Vec<BTreeMap<Element, Element>> = all_weightings(&x, &x).into_iter().map(|m| m.into_iter().collect()).collect();

    for p in &dists {
        let left = Dist::dirac(rig, p.to_element()).flatten().map_err(|e| e.to_string())?;
        ensure(&left == p, || format!("left unit at {p:?}"))?;
        let right = p.map(|x| Dist::dirac(rig, x.clone()).to_element()).flatten().map_err(|e| e.to_string())?;
        ensure(&right == p, || format!("right unit at {p:?}"))?;
        ensure(p.map(Element::clone) == *p, || format!("functor identity at {p:?}"))?;
        for f in &maps {
            for g in &maps {
                let twice = p.map(|x| f[x].clone()).map(|y| g[y].clone());
                ensure(twice == p.map(|x| g[&f[x]].clone()), || format!("functor composition at {p:?}"))?;
                cases += 1;
            }
        }
        cases += 3;
    }
    for m in &nested {
        let flat = m.flatten().map_err(|e| e.to_string())?;
        ensure(as_map(&flat) == naive_flatten(rig, m), || format!("flatten disagrees with the double sum at {m:?}"))?;
        for f in &maps {
            let lhs = flat.map(|x| f[x].clone());
            let inner = m.map(|q| Dist::from_element(rig, q).unwrap().map(|x| f[x].clone()).to_element());
            ensure(lhs == inner.flatten().unwrap(), || format!("multiplication naturality at {m:?}"))?;
            cases += 1;
        }
    }
    // T(T(T(X))): weights from the first nonzero value, support at most two.
    let level2: Vec<Element> = nested.iter().map(Dist::to_element).collect();
    let one = rig.one();
    let mut triples = vec![Dist::zero(rig)];
    for (i, a) in level2.iter().enumerate() {
        triples.push(Dist::from_weights(rig, [(a.clone(), one.clone())]));
        for b in &level2[i + 1..] {
            triples.push(Dist::from_weights(rig, [(a.clone(), one.clone()), (b.clone(), one.clone())]));
        }
    }
    for t in &triples {
        let outer_first = t.flatten().unwrap().flatten().unwrap();
        let inner_first = t.map(|n| Dist::from_element(rig, n).unwrap().flatten().unwrap().to_element()).flatten().unwrap();
        ensure(outer_first == inner_first, || format!("associativity at {t:?}"))?;
        cases += 1;
    }
    Ok(cases)
}

fn criterion_1() -> Outcome {
    let mut total = monad_laws_exhaustive(&Boolean)? + monad_laws_exhaustive(&Modular::new(3))?;
    ensure(total >= 1000, || format!("only {total} exhaustive cases"))?;
    for rig in ["bool", "mod:3"] {
        total += passing(suite(rig), &["monad.", "functor."])?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = atoms(&["a", "b", "c"]);
    for _ in 0..500 {
        let p = rand_dist(&mut rng, &x);
        ensure(Dist::dirac(&Rational, p.to_element()).flatten().unwrap() == p, || format!("left unit at {p:?}"))?;
        ensure(p.map(|e| Dist::dirac(&Rational, e.clone()).to_element()).flatten().unwrap() == p, || format!("right unit at {p:?}"))?;
        let inner: Vec<Dist<Rational>> = (0..3).map(|_| rand_dist(&mut rng, &x)).collect();
        let m = Dist::from_weights(&Rational, inner.iter().map(|d| (d.to_element(), rand_q(&mut rng))));
        ensure(as_map(&m.flatten().unwrap()) == naive_flatten(&Rational, &m), || format!("flatten at {m:?}"))?;
        let m2 = Dist::from_weights(&Rational, inner.iter().rev().map(|d| (d.to_element(), rand_q(&mut rng))));
        let t = Dist::from_weights(&Rational, [(m.to_element(), rand_q(&mut rng)), (m2.to_element(), rand_q(&mut rng))]);
        let lhs = t.flatten().unwrap().flatten().unwrap();
        let rhs = t.map(|n| Dist::from_element(&Rational, n).unwrap().flatten().unwrap().to_element()).flatten().unwrap();
        ensure(lhs == rhs, || format!("associativity at {t:?}"))?;
        total += 4;
    }
    total += passing(suite("rational"), &["monad.", "functor."])?;
    Ok(format!("{total} cases"))
}

// 2. Commutativity.

fn psi_symmetric_exhaustive<R: Rig>(rig: &R) -> Result<usize, String> {
    let ds = all_dists(rig, &atoms(&["x1", "x2"]));
    let es = all_dists(rig, &atoms(&["y1", "y2"]));
    for p in &ds {
        for r in &es {
            ensure(psi(p, r).unwrap() == psi_tilde(p, r).unwrap(), || format!("psi != psi~ at {p:?}, {r:?}"))?;
        }
    }
    Ok(ds.len() * es.len())
}

fn criterion_2() -> Outcome {
    let mut cases = psi_symmetric_exhaustive(&Boolean)? + psi_symmetric_exhaustive(&Modular::new(3))?;
    for rig in ["bool", "mod:2", "mod:3", "nat", "rational", "tropical"] {
        cases += passing(suite(rig), &["psi.equals_psi_tilde"])?;
    }

    let mat = Mat2Nat::new(1);
    let reports = run_suite(&mat, &SuiteConfig::new(1, 0)).unwrap();
    passing(&reports, &["monad.", "functor.", "phi."])?;
    let sym = law(&reports, "psi.equals_psi_tilde");
    let fubini = law(&reports, "fubini");
    ensure(!sym.passed(), || "mat2:1 reported no psi != psi~ witness".into())?;
    ensure(!fubini.passed(), || "mat2:1 reported no Fubini witness".into())?;

    // replay the first witness
    let w = &sym.violations[0];
    let read = |s: &str| Dist::from_element(&mat, &Element::from_json(&serde_json::from_str(s).unwrap()).unwrap()).unwrap();
    let (p, r) = (read(&w.inputs[0]), read(&w.inputs[1]));
    ensure(psi(&p, &r).unwrap() != psi_tilde(&p, &r).unwrap(), || format!("witness {w:?} does not replay"))?;
    Ok(format!(
        "{cases} commutative cases; mat2:1 witnesses {} psi, {} fubini",
        sym.violations.len(),
        fubini.violations.len()
    ))
}

// 3. Fubini.

fn fubini_exhaustive<R: Rig>(rig: &R) -> Result<usize, String> {
    let (x, y) = (atoms(&["x1", "x2"]), atoms(&["y1", "y2"]));
    let xy: Vec<Element> = x.iter().flat_map(|a| y.iter().map(move |b| pair(a, b))).collect();
    let ds = all_dists(rig, &x);
    let es = all_dists(rig, &y);
    let fns = all_fns(rig, &xy);
    let mut cases = 0;
    for p in &ds {
        for r in &es {
            let (joint, twisted) = (psi(p, r).unwrap(), psi_tilde(p, r).unwrap());
            for phi in &fns {
                let f = fn_of(phi);
                let x_then_y = sum_weighted(rig, p, |a| sum_weighted(rig, r, |b| f(&pair(a, b))));
                let y_then_x = sum_weighted(rig, r, |b| sum_weighted(rig, p, |a| f(&pair(a, b))));
                ensure(x_then_y == y_then_x, || format!("iterated integrals differ at {p:?} {r:?} {phi:?}"))?;
                ensure(integrate(&joint, phi).unwrap() == x_then_y, || format!("psi route at {p:?} {r:?}"))?;
                ensure(integrate(&twisted, phi).unwrap() == y_then_x, || format!("psi~ route at {p:?} {r:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn criterion_3() -> Outcome {
    let mut cases = fubini_exhaustive(&Boolean)? + fubini_exhaustive(&Modular::new(3))?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (x, y) = (atoms(&["x1", "x2", "x3"]), atoms(&["y1", "y2"]));
    let xy: Vec<Element> = x.iter().flat_map(|a| y.iter().map(move |b| pair(a, b))).collect();
    for _ in 0..500 {
        let (p, r, phi) = (rand_dist(&mut rng, &x), rand_dist(&mut rng, &y), rand_fn(&mut rng, &xy));
        let f = fn_of(&phi);
        let x_then_y = sum_weighted(&Rational, &p, |a| sum_weighted(&Rational, &r, |b| f(&pair(a, b))));
        let y_then_x = sum_weighted(&Rational, &r, |b| sum_weighted(&Rational, &p, |a| f(&pair(a, b))));
        ensure(x_then_y == y_then_x, || format!("iterated integrals differ at {p:?} {r:?}"))?;
        ensure(integrate(&psi(&p, &r).unwrap(), &phi).unwrap() == x_then_y, || format!("psi route at {p:?} {r:?}"))?;
        cases += 1;
    }
    for rig in ["bool", "mod:3", "rational"] {
        cases += passing(suite(rig), &["fubini", "tau.monoidal"])?;
    }
    Ok(format!("{cases} cases"))
}

// 4. Action laws.

fn action_exhaustive<R: Rig>(rig: &R) -> Result<usize, String> {
    let (x, y) = (atoms(&["x1", "x2"]), atoms(&["y1", "y2"]));
    let ds = all_dists(rig, &x);
    let fx = all_fns(rig, &x);
    let fy = all_fns(rig, &y);
    let maps: Vec<BTreeMap<Element, Element>> = all_weightings(&x, &y).into_iter().map(|m| m.into_iter().collect()).collect();
    let one = TestFn::from_pairs(rig, x.iter().map(|e| (e.clone(), rig.one())));
    let mut cases = 0;
    for p in &ds {
        ensure(act(p, &one).unwrap() == *p, || format!("unit at {p:?}"))?;
        for f1 in &fx {
            let acted = act(p, f1).unwrap();
            let direct = Dist::from_weights(rig, p.iter().map(|(e, w)| (e.clone(), rig.mul(w, &fn_of(f1)(e)))));
            ensure(acted == direct, || format!("action at {p:?} {f1:?}"))?;
            ensure(acted.total() == sum_weighted(rig, p, fn_of(f1)), || format!("total of action at {p:?}"))?;
            for f2 in &fx {
                let both = f1.mul(f2).unwrap();
                ensure(act(&acted, f2).unwrap() == act(p, &both).unwrap(), || format!("associativity at {p:?}"))?;
                let reweighted = integrate(&act(p, f2).unwrap(), f1).unwrap();
                ensure(reweighted == sum_weighted(rig, p, fn_of(&both)), || format!("reweighting at {p:?}"))?;
                cases += 1;
            }
        }
        for f in &maps {
            for phi in &fy {
                let pulled = TestFn::from_pairs(rig, x.iter().map(|e| (e.clone(), fn_of(phi)(&f[e]))));
                let lhs = act(p, &pulled).unwrap().map(|e| f[e].clone());
                let rhs = act(&p.map(|e| f[e].clone()), phi).unwrap();
                ensure(lhs == rhs, || format!("Frobenius at {p:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn criterion_4() -> Outcome {
    let mut cases = action_exhaustive(&Boolean)? + action_exhaustive(&Modular::new(3))?;
    for rig in ["bool", "mod:3", "rational"] {
        cases += passing(suite(rig), &["act.", "integrate."])?;
    }
    Ok(format!("{cases} cases"))
}

// 5. Polynomials.

fn schoolbook(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly(coeffs: &[u64]) -> Dist<Natural> {
    Dist::from_weights(
        &Natural,
        coeffs.iter().enumerate().map(|(i, c)| (Element::atom(i.to_string()), BigUint::from(*c))),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pairs: Vec<(Vec<u64>, Vec<u64>)> = vec![(vec![0; 5], vec![3; 5]), (vec![3; 5], vec![3; 5]), (vec![1, 1], vec![1, 1])];
    while pairs.len() < 2000 {
        let mut draw = || (0..5).map(|_| rng.random_range(0..=3u64)).collect::<Vec<_>>();
        pairs.push((draw(), draw()));
    }
    for (a, b) in &pairs {
        let got = convolve(&poly(a), &poly(b), natural_sum).map_err(|e| e.to_string())?;
        let want = poly(&schoolbook(a, b));
        ensure(got == want, || format!("{a:?} * {b:?}: got {got:?}, want {want:?}"))?;
    }
    Ok(format!("{} seeded pairs", pairs.len()))
}

// 6. Biproduct and module axioms.

fn biproduct_exhaustive<R: Rig>(rig: &R) -> Result<usize, String> {
    let mut cases = 0;
    for n in 0..=2 {
        let x: Vec<Element> = (1..=n).map(|i| Element::atom(format!("x{i}"))).collect();
        let y: Vec<Element> = (1..=n).map(|i| Element::atom(format!("y{i}"))).collect();
        let sum: Vec<Element> = x.iter().cloned().map(Element::left).chain(y.iter().cloned().map(Element::right)).collect();
        for d in all_dists(rig, &sum) {
            let (l, r) = d.phi_split().map_err(|e| e.to_string())?;
            ensure(Dist::phi_merge(&l, &r).unwrap() == d, || format!("merge after split at {d:?}"))?;
            cases += 1;
        }
        for p in all_dists(rig, &x) {
            for r in all_dists(rig, &y) {
                let (l2, r2) = Dist::phi_merge(&p, &r).unwrap().phi_split().unwrap();
                ensure(l2 == p && r2 == r, || format!("split after merge at {p:?}, {r:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn module_exhaustive<R: Rig>(rig: &R) -> Result<usize, String> {
    let ds = all_dists(rig, &atoms(&["x1", "x2"]));
    let scalars = rig.enumerate().unwrap();
    let mut cases = 0;
    let zero = Dist::zero(rig);
    for a in &ds {
        ensure(a.add(&zero).unwrap() == *a, || format!("additive unit at {a:?}"))?;
        ensure(a.scale(&rig.one()) == *a && a.scale(&rig.zero()) == zero, || format!("scalar unit at {a:?}"))?;
        for b in &ds {
            let ab = a.add(b).unwrap();
            ensure(ab == b.add(a).unwrap(), || format!("commutativity at {a:?} {b:?}"))?;
            for c in &ds {
                ensure(ab.add(c).unwrap() == a.add(&b.add(c).unwrap()).unwrap(), || format!("associativity at {a:?}"))?;
                cases += 1;
            }
            for l in &scalars {
                ensure(ab.scale(l) == a.scale(l).add(&b.scale(l)).unwrap(), || format!("distributivity at {a:?}"))?;
                cases += 1;
            }
        }
        for l in &scalars {
            for m in &scalars {
                ensure(a.scale(&rig.add(l, m)) == a.scale(l).add(&a.scale(m)).unwrap(), || format!("scalar sum at {a:?}"))?;
                ensure(a.scale(l).scale(m) == a.scale(&rig.mul(l, m)), || format!("scalar product at {a:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn criterion_6() -> Outcome {
    let mut cases = biproduct_exhaustive(&Boolean)? + biproduct_exhaustive(&Modular::new(3))?;
    cases += module_exhaustive(&Boolean)? + module_exhaustive(&Modular::new(3))?;
    for rig in ["bool", "mod:3"] {
        cases += passing(suite(rig), &["phi.", "module.", "linear_maps."])?;
    }
    Ok(format!("{cases} cases"))
}

// 7. Functionals.

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for n in 1..=2 {
        let x: Vec<Element> = (1..=n).map(|i| Element::atom(format!("x{i}"))).collect();
        let carrier = FinSpace::new(x.clone());
        for e in &x {
            let lhs = tau(&Dist::dirac(&Boolean, e.clone()), &carrier).unwrap();
            let rhs = dirac_functional(&Boolean, e, &carrier).unwrap();
            ensure(lhs.extensionally_equal(&rhs), || format!("tau(dirac {e}) != dirac functional"))?;
        }
        let ds = all_dists(&Boolean, &x);
        let fns = all_fns(&Boolean, &x);
        let encoded: Vec<Element> = ds.iter().map(Dist::to_element).collect();
        for m in all_dists(&Boolean, &encoded) {
            let flat = m.flatten().unwrap();
            let inner: Vec<(Dist<Boolean>, bool)> =
                m.iter().map(|(q, w)| (Dist::from_element(&Boolean, q).unwrap(), *w)).collect();
            for phi in &fns {
                let outer = inner
                    .iter()
                    .fold(false, |acc, (q, w)| acc || (*w && sum_weighted(&Boolean, q, fn_of(phi))));
                ensure(integrate(&flat, phi).unwrap() == outer, || format!("flatten compatibility at {m:?}"))?;
                cases += 1;
            }
            let composed = Functional::new(&Boolean, carrier.clone(), move |phi: &TestFn<Boolean>| {
                Ok(inner.iter().fold(false, |acc, (q, w)| acc || (*w && integrate(q, phi).unwrap())))
            });
            ensure(tau(&flat, &carrier).unwrap().extensionally_equal(&composed), || format!("tau(flatten) at {m:?}"))?;
        }
    }

    let x = atoms(&["x1", "x2"]);
    let carrier = FinSpace::new(x.clone());
    let mut accepted = 0;
    for p in all_dists(&Boolean, &x) {
        ensure(check_functional_linearity(&tau(&p, &carrier).unwrap()), || format!("tau({p:?}) rejected"))?;
        accepted += 1;
    }
    for p in all_dists(&Modular::new(3), &x) {
        ensure(check_functional_linearity(&tau(&p, &carrier).unwrap()), || format!("tau({p:?}) rejected"))?;
        accepted += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let p = rand_dist(&mut rng, &x);
        ensure(check_functional_linearity(&tau(&p, &carrier).unwrap()), || format!("tau({p:?}) rejected"))?;
        accepted += 1;
    }
    let x1 = Element::atom("x1");
    ensure(!check_functional_linearity(&quadratic_functional(&Modular::new(3), &x1, &carrier)), || {
        "quadratic functional accepted over mod:3".into()
    })?;
    ensure(!check_functional_linearity(&quadratic_functional(&Rational, &x1, &carrier)), || {
        "quadratic functional accepted over rational".into()
    })?;
    Ok(format!("{cases} flatten cases, {accepted} tau(p) accepted, quadratic rejected"))
}

// 8. Probability.

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (x, y) = (atoms(&["a", "b", "c"]), atoms(&["u", "v"]));
    for _ in 0..200 {
        let (p, r) = (rand_probability(&mut rng, &x), rand_probability(&mut rng, &y));
        let (m0, m1) = marginals(&psi(&p, &r).unwrap()).unwrap();
        ensure(m0 == p && m1 == r, || format!("marginals of {p:?} x {r:?}"))?;
    }

    let coeff_atom = |c: &BigRational| Element::atom(Rational.format(c));
    for _ in 0..200 {
        let joint = Dist::from_weights(
            &Rational,
            (0..rng.random_range(1..=4)).map(|_| {
                let (a, b) = (rand_q(&mut rng), rand_q(&mut rng));
                (pair(&coeff_atom(&a), &coeff_atom(&b)), rand_q(&mut rng))
            }),
        );
        let (lhs, rhs) = expectation_of_sum(&joint).unwrap();
        let naive = sum_weighted(&Rational, &joint, |k| {
            let (a, b) = k.as_pair().unwrap();
            q(a.as_atom().unwrap()) + q(b.as_atom().unwrap())
        });
        ensure(lhs == rhs && lhs == naive, || format!("E(X+Y) at {joint:?}: {lhs} vs {rhs} vs {naive}"))?;
    }

    for _ in 0..100 {
        let n = rng.random_range(2..=6usize);
        let points: Vec<Element> = (0..n).map(|i| Element::atom(format!("w{i}"))).collect();
        let carrier = FinSpace::new(points.clone());
        let uniform = Dist::from_weights(&Rational, points.iter().map(|e| (e.clone(), BigRational::new(1.into(), (n as i64).into()))));
        let (a, b): (Vec<bool>, Vec<bool>) = loop {
            let a: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            if a.contains(&true) {
                break (a, (0..n).map(|_| rng.random_bool(0.5)).collect());
            }
        };
        let in_a = |e: &Element| a[points.iter().position(|p| p == e).unwrap()];
        let in_b = |e: &Element| b[points.iter().position(|p| p == e).unwrap()];
        let posterior = condition(&uniform, &TestFn::indicator(&Rational, &carrier, in_a)).unwrap();
        let got = integrate(&posterior, &TestFn::indicator(&Rational, &carrier, in_b)).unwrap();
        let both = (0..n).filter(|&i| a[i] && b[i]).count() as i64;
        let given = a.iter().filter(|&&v| v).count() as i64;
        let want = BigRational::new(both.into(), given.into());
        ensure(got == want, || format!("P(B|A) = {got}, counted {want}"))?;
    }

    for _ in 0..200 {
        let values: Vec<BigRational> = (0..rng.random_range(1..=4)).map(|_| rand_q(&mut rng)).collect();
        let keys: Vec<Element> = values.iter().map(coeff_atom).collect();
        let mut keys_dedup = keys.clone();
        keys_dedup.sort();
        keys_dedup.dedup();
        let p = rand_probability(&mut rng, &keys_dedup);
        let (a, b) = (rand_nonzero_q(&mut rng), rand_q(&mut rng));
        let (lhs, rhs) = affine_push_expectation(&p, &a, &b).unwrap();
        let mean = sum_weighted(&Rational, &p, |k| q(k.as_atom().unwrap()));
        let want = &a * &mean + &b;
        ensure(lhs == want && rhs == want, || format!("affine push at {p:?}: {lhs} / {rhs}, want {want}"))?;
        ensure(expectation(&p).unwrap() == mean, || format!("expectation at {p:?}"))?;
    }
    Ok("200 marginal, 200 sum, 100 conditioning, 200 affine cases".into())
}

// 9. Command line.

fn criterion_9() -> Outcome {
    let cases = common::golden_cases();
    let mut per_command: BTreeMap<String, usize> = BTreeMap::new();
    for case in &cases {
        common::check_golden(case)?;
        if case.stdout.is_some() {
            *per_command.entry(common::subcommand(case).to_string()).or_default() += 1;
        }
    }
    ensure(per_command.len() == 13 && per_command.values().all(|&n| n >= 2), || format!("golden coverage {per_command:?}"))?;
    let dir = common::golden_dir();
    let ok = common::rigdist(&dir, &["check-laws", "--rig", "bool", "--size", "2"]);
    ensure(ok.code == 0, || format!("bool size 2 exited {}", ok.code))?;
    let bad = common::rigdist(&dir, &["check-laws", "--rig", "mat2:1", "--size", "1"]);
    ensure(bad.code == 5, || format!("mat2:1 size 1 exited {}", bad.code))?;
    Ok(format!("{} golden cases over {} subcommands", cases.len(), per_command.len()))
}

fn main() {
    #[allow(clippy::type_complexity)]
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("monad and functor laws", criterion_1),
        ("commutativity", criterion_2),
        ("fubini", criterion_3),
        ("action laws", criterion_4),
        ("polynomial multiplication", criterion_5),
        ("biproduct and module axioms", criterion_6),
        ("functionals", criterion_7),
        ("probability layer", criterion_8),
        ("cli goldens", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: pass  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
