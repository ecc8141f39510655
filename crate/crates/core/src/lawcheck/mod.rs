//! Brute-force law checking on small finite instances.
//!
//! Every law below is stated with the naive formulas of [`oracle`]; the
//! `oracle.*` laws then check that each library operation agrees with its
//! naive counterpart on the same instances. Instances are exhaustive for
//! finite rigs (within caps) and seeded samples otherwise, so a given
//! `(rig, size, seed)` always yields the same report.

mod oracle;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::format::ElementMap;
use crate::integration::{self, TestFn};
use crate::probability;
use crate::rig::Rig;
use crate::schwartz;
use crate::space::{enumerate_functions, Element, FinSpace, Side};
use crate::strength;

use oracle::Weights;

pub const DEFAULT_DIST_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub cases: usize,
    /// The law is only claimed for commutative rigs.
    pub requires_commutative: bool,
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Size of each base carrier.
    pub size: usize,
    pub seed: u64,
    /// Cases per law when a law cannot be exhausted.
    pub samples: usize,
    /// Largest instance list built by exhaustive enumeration.
    pub dist_cap: usize,
    /// Largest cartesian product of instances checked exhaustively.
    pub case_cap: usize,
    /// Permits carriers of size 3.
    pub allow_large: bool,
}

impl SuiteConfig {
    pub fn new(size: usize, seed: u64) -> Self {
        SuiteConfig {
            size,
            seed,
            samples: 500,
            dist_cap: DEFAULT_DIST_CAP,
            case_cap: 100_000,
            allow_large: false,
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// All distributions on `carrier` with weights from `pool` (zeros dropped)
/// and at most `max_support` points, in canonical order.
pub fn enumerate_dists<R: Rig>(
    rig: &R,
    carrier: &FinSpace,
    pool: &[R::Elem],
    max_support: usize,
    cap: usize,
) -> Result<Vec<Dist<R>>> {
    let mut weights: Vec<R::Elem> = pool.iter().filter(|w| !rig.is_zero(w)).cloned().collect();
    weights.sort();
    weights.dedup();
    let n = carrier.len();
    let count: u128 = (0..=max_support.min(n))
        .map(|k| binomial(n, k).saturating_mul((weights.len() as u128).saturating_pow(k as u32)))
        .fold(0u128, u128::saturating_add);
    if count > cap as u128 {
        return Err(Error::CapExceeded { count, cap });
    }

    fn grow<R: Rig>(
        rig: &R,
        points: &[Element],
        weights: &[R::Elem],
        room: usize,
        acc: &mut Vec<(Element, R::Elem)>,
        out: &mut Vec<Dist<R>>,
    ) {
        let Some((first, rest)) = points.split_first() else {
            out.push(Dist::from_weights(rig, acc.iter().cloned()));
            return;
        };
        grow(rig, rest, weights, room, acc, out);
        if room > 0 {
            for w in weights {
                acc.push((first.clone(), w.clone()));
                grow(rig, rest, weights, room - 1, acc, out);
                acc.pop();
            }
        }
    }

    let mut out = Vec::with_capacity(count as usize);
    grow(rig, carrier.elements(), &weights, max_support, &mut Vec::new(), &mut out);
    out.sort_by_cached_key(Dist::to_element);
    Ok(out)
}

fn law_seed(seed: u64, law: &str) -> u64 {
    // FNV-1a; stable across platforms and releases.
    law.bytes().fold(0xcbf2_9ce4_8422_2325u64 ^ seed, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Instance pools shared by all laws.
struct Pools<R: Rig> {
    x: FinSpace,
    y: FinSpace,
    z: FinSpace,
    dx: Vec<Dist<R>>,
    dy: Vec<Dist<R>>,
    /// Distributions on `X + Y`.
    dsum: Vec<Dist<R>>,
    /// Joint distributions on `X × Y`.
    dxy: Vec<Dist<R>>,
    /// Elements of `T(T(X))`, `T(T(Y))`, `T(T(T(X)))`.
    nx: Vec<Dist<R>>,
    ny: Vec<Dist<R>>,
    nnx: Vec<Dist<R>>,
    fx: Vec<TestFn<R>>,
    fy: Vec<TestFn<R>>,
    fxy: Vec<TestFn<R>>,
    scalars: Vec<R::Elem>,
    maps_xy: Vec<ElementMap>,
    maps_yz: Vec<ElementMap>,
    /// Binary operations `X × X → X`.
    ops_x: Vec<ElementMap>,
    /// Kernels `X → T(Y)`.
    kernels: Vec<BTreeMap<Element, Dist<R>>>,
    probs_x: Vec<Dist<R>>,
    probs_y: Vec<Dist<R>>,
    /// Probability distributions on probability distributions on `X`.
    probs_nx: Vec<Dist<R>>,
    /// Distributions over test functions on `X`.
    fn_dists: Vec<Dist<R>>,
    /// Scalars viewed as points, and distributions over them.
    coeff: FinSpace,
    dr: Vec<Dist<R>>,
    joint_r: Vec<Dist<R>>,
    probs_r: Vec<Dist<R>>,
    fr: Vec<TestFn<R>>,
}

struct Builder<'a, R: Rig> {
    rig: &'a R,
    cfg: &'a SuiteConfig,
    rng: ChaCha8Rng,
    nonzero: Vec<R::Elem>,
    values: Vec<R::Elem>,
}

impl<'a, R: Rig> Builder<'a, R> {
    fn new(rig: &'a R, cfg: &'a SuiteConfig) -> Self {
        let values = rig.enumerate().unwrap_or_else(|| rig.sample_grid());
        let nonzero = values.iter().filter(|v| !rig.is_zero(v)).cloned().collect();
        Builder {
            rig,
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            nonzero,
            values,
        }
    }

    fn exhaustive(&self) -> bool {
        self.rig.enumerate().is_some()
    }

    fn random_dist(&mut self, carrier: &FinSpace, pool: &[R::Elem], max_support: usize) -> Dist<R> {
        let k = self.rng.random_range(0..=max_support.min(carrier.len()));
        let mut points: Vec<Element> = carrier.elements().to_vec();
        points.shuffle(&mut self.rng);
        let entries: Vec<_> = points
            .into_iter()
            .take(k)
            .map(|x| (x, pool[self.rng.random_range(0..pool.len())].clone()))
            .collect();
        Dist::from_weights(self.rig, entries)
    }

    /// Exhaustive when the rig is finite and the count fits, sampled
    /// otherwise.
    fn dists_with(&mut self, carrier: &FinSpace, pool: &[R::Elem], max_support: usize) -> Vec<Dist<R>> {
        if self.exhaustive() {
            if let Ok(all) = enumerate_dists(self.rig, carrier, pool, max_support, self.cfg.dist_cap) {
                return all;
            }
        }
        if pool.is_empty() {
            return vec![Dist::zero(self.rig)];
        }
        (0..self.cfg.samples)
            .map(|_| self.random_dist(carrier, pool, max_support))
            .collect()
    }

    fn dists(&mut self, carrier: &FinSpace) -> Vec<Dist<R>> {
        let pool = self.nonzero.clone();
        self.dists_with(carrier, &pool, self.cfg.size)
    }

    /// Distributions over (encodings of) `inner`, support at most two.
    fn nested(&mut self, inner: &[Dist<R>], keep: usize, pool_len: usize) -> Vec<Dist<R>> {
        let mut chosen: Vec<Dist<R>> = inner.to_vec();
        if chosen.len() > keep {
            chosen.shuffle(&mut self.rng);
            chosen.truncate(keep);
        }
        let space = FinSpace::new(chosen.iter().map(Dist::to_element));
        let pool: Vec<R::Elem> = self.nonzero.iter().take(pool_len).cloned().collect();
        self.dists_with(&space, &pool, 2)
    }

    fn fns(&mut self, carrier: &FinSpace) -> Vec<TestFn<R>> {
        if self.exhaustive() {
            if let Ok(all) = enumerate_functions(self.rig, carrier, &self.values, self.cfg.dist_cap) {
                return all;
            }
        }
        let values = self.values.clone();
        (0..self.cfg.samples)
            .map(|_| {
                TestFn::new(self.rig, carrier, |_| values[self.rng.random_range(0..values.len())].clone())
            })
            .collect()
    }

    fn probabilities(&mut self, carrier: &FinSpace, candidates: &[Dist<R>]) -> Vec<Dist<R>> {
        let rig = self.rig;
        let mut out: Vec<Dist<R>> = carrier.iter().map(|x| Dist::dirac(rig, x.clone())).collect();
        for d in candidates {
            if probability::is_probability(d) {
                out.push(d.clone());
            } else if !self.exhaustive() {
                if let Some(inv) = rig.try_invert(&d.total()) {
                    out.push(d.scale(&inv));
                }
            }
        }
        out.sort_by_cached_key(Dist::to_element);
        out.dedup();
        out
    }

    fn maps(&mut self, from: &FinSpace, to: &FinSpace, limit: usize) -> Vec<ElementMap> {
        let count = (to.len() as u128).checked_pow(from.len() as u32).unwrap_or(u128::MAX);
        if to.is_empty() {
            return if from.is_empty() { vec![ElementMap::default()] } else { vec![] };
        }
        if count <= limit as u128 {
            let mut out = Vec::new();
            let n = from.len();
            let mut idx = vec![0usize; n];
            loop {
                out.push(ElementMap::new(
                    from.iter().zip(&idx).map(|(a, &i)| (a.clone(), to.elements()[i].clone())),
                ));
                let mut pos = n;
                loop {
                    if pos == 0 {
                        return out;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < to.len() {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        (0..limit)
            .map(|_| {
                ElementMap::new(
                    from.iter()
                        .map(|a| (a.clone(), to.elements()[self.rng.random_range(0..to.len())].clone())),
                )
            })
            .collect()
    }

    fn build(mut self) -> Pools<R> {
        let rig = self.rig;
        let n = self.cfg.size;
        let names = |p: &str| FinSpace::new((1..=n).map(|i| Element::atom(format!("{p}{i}"))));
        let (x, y, z) = (names("x"), names("y"), names("z"));

        let dx = self.dists(&x);
        let dy = self.dists(&y);
        let dsum = self.dists(&x.coproduct(&y));
        let dxy = self.dists(&x.product(&y));
        let nx = self.nested(&dx, 6, 3);
        let ny = self.nested(&dy, 6, 3);
        let nnx = self.nested(&nx, 4, 2);
        let fx = self.fns(&x);
        let fy = self.fns(&y);
        let fxy = self.fns(&x.product(&y));
        let scalars = self.values.clone();
        let maps_xy = self.maps(&x, &y, 64);
        let maps_yz = self.maps(&y, &z, 64);
        let ops_x = self.maps(&x.product(&x), &x, 64);

        let kernel_targets: Vec<Dist<R>> = dy.iter().take(3).cloned().collect();
        let kernel_space = FinSpace::new((0..kernel_targets.len()).map(|i| Element::atom(i.to_string())));
        let kernels = self
            .maps(&x, &kernel_space, 64)
            .into_iter()
            .map(|m| {
                m.iter()
                    .map(|(a, i)| {
                        let i: usize = i.as_atom().and_then(|s| s.parse().ok()).expect("index atom");
                        (a.clone(), kernel_targets[i].clone())
                    })
                    .collect()
            })
            .collect();

        let probs_x = self.probabilities(&x, &dx);
        let probs_y = self.probabilities(&y, &dy);
        let probs_nx = {
            let keep: Vec<Dist<R>> = probs_x.iter().take(6).cloned().collect();
            let space = FinSpace::new(keep.iter().map(Dist::to_element));
            let candidates = self.dists_with(&space, &self.nonzero.clone(), 2);
            self.probabilities(&space, &candidates)
        };

        let fn_space = FinSpace::new(fx.iter().take(6).map(TestFn::to_element));
        let fn_dists = self.dists_with(&fn_space, &self.nonzero.clone(), 2);

        let coeff_values: Vec<R::Elem> = if self.exhaustive() {
            self.values.clone()
        } else {
            let mut grid = self.values.clone();
            grid.shuffle(&mut self.rng);
            grid.truncate(n + 1);
            grid
        };
        let coeff = FinSpace::new(coeff_values.iter().map(|c| Element::atom(rig.format(c))));
        let dr = self.dists(&coeff);
        let joint_r = self.dists(&coeff.product(&coeff));
        let probs_r = self.probabilities(&coeff, &dr);
        let fr = self.fns(&coeff);

        Pools {
            x,
            y,
            z,
            dx,
            dy,
            dsum,
            dxy,
            nx,
            ny,
            nnx,
            fx,
            fy,
            fxy,
            scalars,
            maps_xy,
            maps_yz,
            ops_x,
            kernels,
            probs_x,
            probs_y,
            probs_nx,
            fn_dists,
            coeff,
            dr,
            joint_r,
            probs_r,
            fr,
        }
    }
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    reports: Vec<LawReport>,
}

impl Runner<'_> {
    fn cases<const N: usize>(&self, law: &str, dims: [usize; N]) -> Vec<[usize; N]> {
        if dims.contains(&0) {
            return Vec::new();
        }
        let total = dims.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
        if total <= self.cfg.case_cap as u128 {
            let mut out = Vec::with_capacity(total as usize);
            let mut idx = [0usize; N];
            'outer: loop {
                out.push(idx);
                for pos in (0..N).rev() {
                    idx[pos] += 1;
                    if idx[pos] < dims[pos] {
                        continue 'outer;
                    }
                    idx[pos] = 0;
                }
                return out;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(law_seed(self.cfg.seed, law));
        (0..self.cfg.samples)
            .map(|_| {
                let mut idx = [0usize; N];
                for (i, d) in idx.iter_mut().zip(dims) {
                    *i = rng.random_range(0..d);
                }
                idx
            })
            .collect()
    }

    fn law<const N: usize, F>(&mut self, name: &str, requires_commutative: bool, dims: [usize; N], check: F)
    where
        F: Fn([usize; N]) -> Option<Violation>,
    {
        let cases = self.cases(name, dims);
        let violations = cases.iter().filter_map(|&c| check(c)).collect();
        self.reports.push(LawReport {
            law: name.to_string(),
            cases: cases.len(),
            requires_commutative,
            violations,
        });
    }
}

fn nv<R: Rig>(d: &Dist<R>) -> Weights<Element, R::Elem> {
    d.iter().map(|(k, w)| (k.clone(), w.clone())).collect()
}

fn nested_nv<R: Rig>(rig: &R, m: &Dist<R>) -> Weights<Weights<Element, R::Elem>, R::Elem> {
    m.iter().map(|(k, w)| (oracle::decode(rig, k), w.clone())).collect()
}

fn fval<R: Rig>(phi: &TestFn<R>, x: &Element) -> R::Elem {
    phi.get(x).cloned().expect("test function covers its carrier")
}

fn ds<R: Rig>(d: &Dist<R>) -> String {
    d.to_element().to_string()
}

fn fs<R: Rig>(phi: &TestFn<R>) -> String {
    phi.to_element().to_string()
}

fn ms(m: &ElementMap) -> String {
    let rows: Vec<String> = m.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    format!("[{}]", rows.join(","))
}

fn differ_w<R: Rig>(
    rig: &R,
    inputs: impl FnOnce() -> Vec<String>,
    lhs: &[(Element, R::Elem)],
    rhs: &[(Element, R::Elem)],
) -> Option<Violation> {
    (!oracle::same(rig, lhs, rhs)).then(|| Violation {
        inputs: inputs(),
        lhs: oracle::show(rig, lhs),
        rhs: oracle::show(rig, rhs),
    })
}

fn differ_c<R: Rig>(rig: &R, inputs: impl FnOnce() -> Vec<String>, lhs: &R::Elem, rhs: &R::Elem) -> Option<Violation> {
    (lhs != rhs).then(|| Violation {
        inputs: inputs(),
        lhs: rig.format(lhs),
        rhs: rig.format(rhs),
    })
}

/// Compares a library result against the naive one.
fn agrees<R: Rig>(
    rig: &R,
    inputs: impl FnOnce() -> Vec<String>,
    library: Result<Dist<R>>,
    naive: &[(Element, R::Elem)],
) -> Option<Violation> {
    match library {
        Ok(d) => differ_w(rig, inputs, &nv(&d), naive),
        Err(e) => Some(Violation {
            inputs: inputs(),
            lhs: format!("error: {e}"),
            rhs: oracle::show(rig, naive),
        }),
    }
}

fn agrees_c<R: Rig>(rig: &R, inputs: impl FnOnce() -> Vec<String>, library: Result<R::Elem>, naive: &R::Elem) -> Option<Violation> {
    match library {
        Ok(c) => differ_c(rig, inputs, &c, naive),
        Err(e) => Some(Violation {
            inputs: inputs(),
            lhs: format!("error: {e}"),
            rhs: rig.format(naive),
        }),
    }
}

fn tagged(side: Side, e: &Element) -> Element {
    Element::Tag(side, Box::new(e.clone()))
}

/// Reads a coefficient atom.
fn coeff_of<R: Rig>(rig: &R, e: &Element) -> R::Elem {
    rig.parse(e.as_atom().expect("coefficient atom")).expect("coefficient atom")
}

/// `Σ P(r) * r` with the naive formulas.
fn naive_expectation<R: Rig>(rig: &R, p: &[(Element, R::Elem)]) -> R::Elem {
    oracle::integrate(rig, p, |r| coeff_of(rig, r))
}

/// Runs every law and returns the reports sorted by law name.
pub fn run_suite<R: Rig>(rig: &R, cfg: &SuiteConfig) -> Result<Vec<LawReport>> {
    let max = if cfg.allow_large { 3 } else { 2 };
    if cfg.size > max {
        return Err(Error::CapExceeded {
            count: cfg.size as u128,
            cap: max,
        });
    }
    let p = Builder::new(rig, cfg).build();
    let mut run = Runner {
        cfg,
        reports: Vec::new(),
    };
    let one = rig.one();
    let zero = rig.zero();
    let point = Element::point();

    // Monad and functor laws.
    run.law("monad.left_unit", false, [p.dx.len()], |[i]| {
        let q = nv(&p.dx[i]);
        let lhs = oracle::flatten(rig, &oracle::dirac(rig, q.clone()));
        differ_w(rig, || vec![ds(&p.dx[i])], &lhs, &q)
    });
    run.law("monad.right_unit", false, [p.dx.len()], |[i]| {
        let q = nv(&p.dx[i]);
        let lhs = oracle::flatten(rig, &oracle::push(&q, |x| oracle::dirac(rig, x.clone())));
        differ_w(rig, || vec![ds(&p.dx[i])], &lhs, &q)
    });
    run.law("monad.associativity", false, [p.nnx.len()], |[i]| {
        let m: oracle::Nested<Weights<Element, R::Elem>, R::Elem> = p.nnx[i]
            .iter()
            .map(|(k, w)| {
                let level2 = oracle::decode(rig, k)
                    .into_iter()
                    .map(|(k2, w2)| (oracle::decode(rig, &k2), w2))
                    .collect();
                (level2, w.clone())
            })
            .collect();
        let lhs = oracle::flatten(rig, &oracle::flatten(rig, &m));
        let rhs = oracle::flatten(rig, &oracle::push(&m, |n| oracle::flatten(rig, n)));
        differ_w(rig, || vec![ds(&p.nnx[i])], &lhs, &rhs)
    });
    run.law("monad.unit_naturality", false, [p.x.len(), p.maps_xy.len()], |[i, j]| {
        let (x, f) = (&p.x.elements()[i], &p.maps_xy[j]);
        let lhs = oracle::push(&oracle::dirac(rig, x.clone()), |e| f.get(e).expect("total"));
        let rhs = oracle::dirac(rig, f.get(x).expect("total"));
        differ_w(rig, || vec![x.to_string(), ms(f)], &lhs, &rhs)
    });
    run.law("monad.multiplication_naturality", false, [p.nx.len(), p.maps_xy.len()], |[i, j]| {
        let (m, f) = (nested_nv(rig, &p.nx[i]), &p.maps_xy[j]);
        let g = |e: &Element| f.get(e).expect("total");
        let lhs = oracle::push(&oracle::flatten(rig, &m), g);
        let inner: Vec<_> = m.iter().map(|(q, w)| (oracle::push(q, g), w.clone())).collect();
        let rhs = oracle::flatten(rig, &inner);
        differ_w(rig, || vec![ds(&p.nx[i]), ms(f)], &lhs, &rhs)
    });
    run.law("functor.identity", false, [p.dx.len()], |[i]| {
        let q = nv(&p.dx[i]);
        differ_w(rig, || vec![ds(&p.dx[i])], &oracle::push(&q, Element::clone), &q)
    });
    run.law(
        "functor.composition",
        false,
        [p.dx.len(), p.maps_xy.len(), p.maps_yz.len()],
        |[i, j, k]| {
            let (q, f, g) = (nv(&p.dx[i]), &p.maps_xy[j], &p.maps_yz[k]);
            let step = oracle::push(&q, |e| f.get(e).expect("total"));
            let lhs = oracle::push(&step, |e| g.get(e).expect("total"));
            let rhs = oracle::push(&q, |e| g.get(&f.get(e).expect("total")).expect("total"));
            differ_w(rig, || vec![ds(&p.dx[i]), ms(f), ms(g)], &lhs, &rhs)
        },
    );

    // Strength.
    run.law("strength.unit", false, [p.dx.len()], |[i]| {
        let q = nv(&p.dx[i]);
        let strong = oracle::push(&q, |x| oracle::pair(x, &point));
        let lhs = oracle::push(&strong, |k| k.as_pair().expect("pair").0.clone());
        differ_w(rig, || vec![ds(&p.dx[i])], &lhs, &q)
    });
    run.law("strength.associativity", false, [p.dx.len(), p.y.len(), p.z.len()], |[i, j, k]| {
        let (q, y, z) = (nv(&p.dx[i]), &p.y.elements()[j], &p.z.elements()[k]);
        let twice = oracle::push(&oracle::push(&q, |x| oracle::pair(x, y)), |xy| oracle::pair(xy, z));
        let lhs = oracle::push(&twice, |k| {
            let (xy, z) = k.as_pair().expect("pair");
            let (x, y) = xy.as_pair().expect("pair");
            oracle::pair(x, &oracle::pair(y, z))
        });
        let rhs = oracle::push(&q, |x| oracle::pair(x, &oracle::pair(y, z)));
        differ_w(rig, || vec![ds(&p.dx[i]), y.to_string(), z.to_string()], &lhs, &rhs)
    });
    run.law("strength.unit_compatibility", false, [p.x.len(), p.y.len()], |[i, j]| {
        let (x, y) = (&p.x.elements()[i], &p.y.elements()[j]);
        let lhs = oracle::push(&oracle::dirac(rig, x.clone()), |e| oracle::pair(e, y));
        let rhs = oracle::dirac(rig, oracle::pair(x, y));
        differ_w(rig, || vec![x.to_string(), y.to_string()], &lhs, &rhs)
    });
    run.law("strength.right_projection", false, [p.x.len(), p.dy.len()], |[i, j]| {
        let (x, q) = (&p.x.elements()[i], nv(&p.dy[j]));
        let strong = oracle::push(&q, |y| oracle::pair(x, y));
        let lhs = oracle::push(&strong, |k| k.as_pair().expect("pair").1.clone());
        differ_w(rig, || vec![x.to_string(), ds(&p.dy[j])], &lhs, &q)
    });

    // Tensor products.
    run.law("psi.linear_in_first", false, [p.nx.len(), p.dy.len()], |[i, j]| {
        let (m, q) = (nested_nv(rig, &p.nx[i]), nv(&p.dy[j]));
        let lhs = oracle::psi(rig, &oracle::flatten(rig, &m), &q);
        let rhs = oracle::flatten(rig, &oracle::push(&m, |a| oracle::psi(rig, a, &q)));
        differ_w(rig, || vec![ds(&p.nx[i]), ds(&p.dy[j])], &lhs, &rhs)
    });
    run.law("psi.restricts_to_strength", false, [p.x.len(), p.dy.len()], |[i, j]| {
        let (x, q) = (&p.x.elements()[i], nv(&p.dy[j]));
        let lhs = oracle::psi(rig, &oracle::dirac(rig, x.clone()), &q);
        let rhs = oracle::push(&q, |y| oracle::pair(x, y));
        differ_w(rig, || vec![x.to_string(), ds(&p.dy[j])], &lhs, &rhs)
    });
    run.law("psi_tilde.linear_in_second", false, [p.dx.len(), p.ny.len()], |[i, j]| {
        let (q, n) = (nv(&p.dx[i]), nested_nv(rig, &p.ny[j]));
        let lhs = oracle::psi_tilde(rig, &q, &oracle::flatten(rig, &n));
        let rhs = oracle::flatten(rig, &oracle::push(&n, |b| oracle::psi_tilde(rig, &q, b)));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.ny[j])], &lhs, &rhs)
    });
    run.law("psi_tilde.restricts_to_strength", false, [p.dx.len(), p.y.len()], |[i, j]| {
        let (q, y) = (nv(&p.dx[i]), &p.y.elements()[j]);
        let lhs = oracle::psi_tilde(rig, &q, &oracle::dirac(rig, y.clone()));
        let rhs = oracle::push(&q, |x| oracle::pair(x, y));
        differ_w(rig, || vec![ds(&p.dx[i]), y.to_string()], &lhs, &rhs)
    });
    run.law("psi.equals_psi_tilde", true, [p.dx.len(), p.dy.len()], |[i, j]| {
        let (a, b) = (nv(&p.dx[i]), nv(&p.dy[j]));
        let lhs = oracle::psi(rig, &a, &b);
        let rhs = oracle::psi_tilde(rig, &a, &b);
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.dy[j])], &lhs, &rhs)
    });
    run.law("psi.bilinear", true, [p.dx.len(), p.ny.len()], |[i, j]| {
        let (q, n) = (nv(&p.dx[i]), nested_nv(rig, &p.ny[j]));
        let lhs = oracle::psi(rig, &q, &oracle::flatten(rig, &n));
        let rhs = oracle::flatten(rig, &oracle::push(&n, |b| oracle::psi(rig, &q, b)));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.ny[j])], &lhs, &rhs)
    });
    run.law("total.multiplicative", false, [p.dx.len(), p.dy.len()], |[i, j]| {
        let (a, b) = (nv(&p.dx[i]), nv(&p.dy[j]));
        let lhs = oracle::total(rig, &oracle::psi(rig, &a, &b));
        let rhs = rig.mul(&oracle::total(rig, &a), &oracle::total(rig, &b));
        differ_c(rig, || vec![ds(&p.dx[i]), ds(&p.dy[j])], &lhs, &rhs)
    });
    run.law("scalar_monoid.two_constructions", false, [p.scalars.len(), p.scalars.len()], |[i, j]| {
        let (a, b) = (&p.scalars[i], &p.scalars[j]);
        let via_psi = oracle::psi(rig, &[(point.clone(), a.clone())], &[(point.clone(), b.clone())]);
        let m1 = oracle::total(rig, &via_psi);
        let nested = vec![(vec![(point.clone(), b.clone())], a.clone())];
        let m2 = oracle::total(rig, &oracle::flatten(rig, &nested));
        let inputs = || vec![rig.format(a), rig.format(b)];
        differ_c(rig, inputs, &m1, &m2).or_else(|| differ_c(rig, inputs, &m1, &rig.mul(a, b)))
    });

    // Biproducts and module structure.
    run.law("phi.merge_after_split", false, [p.dsum.len()], |[i]| {
        let q = nv(&p.dsum[i]);
        let side = |s: Side| -> Weights<Element, R::Elem> {
            q.iter()
                .filter_map(|(k, w)| match k.as_tag() {
                    Some((t, e)) if t == s => Some((e.clone(), w.clone())),
                    _ => None,
                })
                .collect()
        };
        let (l, r) = (side(Side::Left), side(Side::Right));
        let merged = oracle::add(
            &oracle::push(&l, |e| tagged(Side::Left, e)),
            &oracle::push(&r, |e| tagged(Side::Right, e)),
        );
        differ_w(rig, || vec![ds(&p.dsum[i])], &merged, &q)
    });
    run.law("phi.split_after_merge", false, [p.dx.len(), p.dy.len()], |[i, j]| {
        let (a, b) = (nv(&p.dx[i]), nv(&p.dy[j]));
        let merged = oracle::add(
            &oracle::push(&a, |e| tagged(Side::Left, e)),
            &oracle::push(&b, |e| tagged(Side::Right, e)),
        );
        let back = |s: Side| -> Weights<Element, R::Elem> {
            merged
                .iter()
                .filter_map(|(k, w)| match k.as_tag() {
                    Some((t, e)) if t == s => Some((e.clone(), w.clone())),
                    _ => None,
                })
                .collect()
        };
        let inputs = || vec![ds(&p.dx[i]), ds(&p.dy[j])];
        differ_w(rig, inputs, &back(Side::Left), &a).or_else(|| differ_w(rig, inputs, &back(Side::Right), &b))
    });
    let nd = p.dx.len();
    run.law("module.add_associative", false, [nd, nd, nd], |[i, j, k]| {
        let (a, b, c) = (nv(&p.dx[i]), nv(&p.dx[j]), nv(&p.dx[k]));
        let lhs = oracle::add(&oracle::add(&a, &b), &c);
        let rhs = oracle::add(&a, &oracle::add(&b, &c));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j]), ds(&p.dx[k])], &lhs, &rhs)
    });
    run.law("module.add_commutative", false, [nd, nd], |[i, j]| {
        let (a, b) = (nv(&p.dx[i]), nv(&p.dx[j]));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j])], &oracle::add(&a, &b), &oracle::add(&b, &a))
    });
    run.law("module.add_unit", false, [nd], |[i]| {
        let a = nv(&p.dx[i]);
        differ_w(rig, || vec![ds(&p.dx[i])], &oracle::add(&a, &[]), &a)
    });
    let ns = p.scalars.len();
    run.law("module.scalar_distributes_over_add", false, [nd, nd, ns], |[i, j, k]| {
        let (a, b, l) = (nv(&p.dx[i]), nv(&p.dx[j]), &p.scalars[k]);
        let lhs = oracle::scale(rig, &oracle::add(&a, &b), l);
        let rhs = oracle::add(&oracle::scale(rig, &a, l), &oracle::scale(rig, &b, l));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j]), rig.format(l)], &lhs, &rhs)
    });
    run.law("module.add_of_scalars_distributes", false, [nd, ns, ns], |[i, j, k]| {
        let (a, l, m) = (nv(&p.dx[i]), &p.scalars[j], &p.scalars[k]);
        let lhs = oracle::scale(rig, &a, &rig.add(l, m));
        let rhs = oracle::add(&oracle::scale(rig, &a, l), &oracle::scale(rig, &a, m));
        differ_w(rig, || vec![ds(&p.dx[i]), rig.format(l), rig.format(m)], &lhs, &rhs)
    });
    run.law("module.scalar_associative", false, [nd, ns, ns], |[i, j, k]| {
        let (a, l, m) = (nv(&p.dx[i]), &p.scalars[j], &p.scalars[k]);
        let lhs = oracle::scale(rig, &oracle::scale(rig, &a, l), m);
        let rhs = oracle::scale(rig, &a, &rig.mul(l, m));
        differ_w(rig, || vec![ds(&p.dx[i]), rig.format(l), rig.format(m)], &lhs, &rhs)
    });
    run.law("module.scalar_unit_and_zero", false, [nd], |[i]| {
        let a = nv(&p.dx[i]);
        let inputs = || vec![ds(&p.dx[i])];
        differ_w(rig, inputs, &oracle::scale(rig, &a, &one), &a)
            .or_else(|| differ_w(rig, inputs, &oracle::scale(rig, &a, &zero), &[]))
    });
    run.law("linear_maps.preserve_addition", false, [nd, nd, p.maps_xy.len()], |[i, j, k]| {
        let (a, b, f) = (nv(&p.dx[i]), nv(&p.dx[j]), &p.maps_xy[k]);
        let g = |e: &Element| f.get(e).expect("total");
        let lhs = oracle::push(&oracle::add(&a, &b), g);
        let rhs = oracle::add(&oracle::push(&a, g), &oracle::push(&b, g));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j]), ms(f)], &lhs, &rhs)
    });
    run.law("linear_maps.preserve_scalars", false, [nd, ns, p.maps_xy.len()], |[i, j, k]| {
        let (a, l, f) = (nv(&p.dx[i]), &p.scalars[j], &p.maps_xy[k]);
        let g = |e: &Element| f.get(e).expect("total");
        let lhs = oracle::push(&oracle::scale(rig, &a, l), g);
        let rhs = oracle::scale(rig, &oracle::push(&a, g), l);
        differ_w(rig, || vec![ds(&p.dx[i]), rig.format(l), ms(f)], &lhs, &rhs)
    });
    let kernel_nv = |k: &BTreeMap<Element, Dist<R>>, x: &Element| nv(&k[x]);
    let kernel_s = |k: &BTreeMap<Element, Dist<R>>| {
        let rows: Vec<String> = k.iter().map(|(x, d)| format!("[{x},{}]", ds(d))).collect();
        format!("[{}]", rows.join(","))
    };
    let bind = |a: &[(Element, R::Elem)], k: &BTreeMap<Element, Dist<R>>| {
        oracle::flatten(rig, &oracle::push(a, |x| kernel_nv(k, x)))
    };
    run.law("linear_maps.bind_preserves_addition", false, [nd, nd, p.kernels.len()], |[i, j, k]| {
        let (a, b, ker) = (nv(&p.dx[i]), nv(&p.dx[j]), &p.kernels[k]);
        let lhs = bind(&oracle::add(&a, &b), ker);
        let rhs = oracle::add(&bind(&a, ker), &bind(&b, ker));
        differ_w(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j]), kernel_s(ker)], &lhs, &rhs)
    });
    run.law("linear_maps.bind_preserves_scalars", true, [nd, ns, p.kernels.len()], |[i, j, k]| {
        let (a, l, ker) = (nv(&p.dx[i]), &p.scalars[j], &p.kernels[k]);
        let lhs = bind(&oracle::scale(rig, &a, l), ker);
        let rhs = oracle::scale(rig, &bind(&a, ker), l);
        differ_w(rig, || vec![ds(&p.dx[i]), rig.format(l), kernel_s(ker)], &lhs, &rhs)
    });

    // Action of functions and integration.
    let nf = p.fx.len();
    run.law("act.unit", false, [nd], |[i]| {
        let a = nv(&p.dx[i]);
        differ_w(rig, || vec![ds(&p.dx[i])], &oracle::act(rig, &a, |_| one.clone()), &a)
    });
    run.law("act.associative", false, [nd, nf, nf], |[i, j, k]| {
        let (a, f1, f2) = (nv(&p.dx[i]), &p.fx[j], &p.fx[k]);
        let lhs = oracle::act(rig, &oracle::act(rig, &a, |x| fval(f1, x)), |x| fval(f2, x));
        let rhs = oracle::act(rig, &a, |x| rig.mul(&fval(f1, x), &fval(f2, x)));
        differ_w(rig, || vec![ds(&p.dx[i]), fs(f1), fs(f2)], &lhs, &rhs)
    });
    run.law("act.restricts_to_scalars", false, [nd, ns], |[i, j]| {
        let (a, l) = (nv(&p.dx[i]), &p.scalars[j]);
        let lhs = oracle::act(rig, &a, |_| l.clone());
        differ_w(rig, || vec![ds(&p.dx[i]), rig.format(l)], &lhs, &oracle::scale(rig, &a, l))
    });
    run.law("act.frobenius", false, [nd, p.maps_xy.len(), p.fy.len()], |[i, j, k]| {
        let (a, f, phi) = (nv(&p.dx[i]), &p.maps_xy[j], &p.fy[k]);
        let g = |e: &Element| f.get(e).expect("total");
        let lhs = oracle::push(&oracle::act(rig, &a, |x| fval(phi, &g(x))), g);
        let rhs = oracle::act(rig, &oracle::push(&a, g), |y| fval(phi, y));
        differ_w(rig, || vec![ds(&p.dx[i]), ms(f), fs(phi)], &lhs, &rhs)
    });
    run.law("act.total_is_integral", false, [nd, nf], |[i, j]| {
        let (a, phi) = (nv(&p.dx[i]), &p.fx[j]);
        let lhs = oracle::integrate(rig, &a, |x| fval(phi, x));
        let rhs = oracle::total(rig, &oracle::act(rig, &a, |x| fval(phi, x)));
        differ_c(rig, || vec![ds(&p.dx[i]), fs(phi)], &lhs, &rhs)
    });
    run.law("act.reweighting", true, [nd, nf, nf], |[i, j, k]| {
        let (a, f1, f2) = (nv(&p.dx[i]), &p.fx[j], &p.fx[k]);
        let lhs = oracle::integrate(rig, &oracle::act(rig, &a, |x| fval(f2, x)), |x| fval(f1, x));
        let rhs = oracle::integrate(rig, &a, |x| rig.mul(&fval(f1, x), &fval(f2, x)));
        differ_c(rig, || vec![ds(&p.dx[i]), fs(f1), fs(f2)], &lhs, &rhs)
    });
    run.law("integrate.dirac_is_evaluation", false, [p.x.len(), nf], |[i, j]| {
        let (x, phi) = (&p.x.elements()[i], &p.fx[j]);
        let lhs = oracle::integrate(rig, &oracle::dirac(rig, x.clone()), |e| fval(phi, e));
        differ_c(rig, || vec![x.to_string(), fs(phi)], &lhs, &fval(phi, x))
    });
    run.law("integrate.additive_in_dist", false, [nd, nd, nf], |[i, j, k]| {
        let (a, b, phi) = (nv(&p.dx[i]), nv(&p.dx[j]), &p.fx[k]);
        let f = |x: &Element| fval(phi, x);
        let lhs = oracle::integrate(rig, &oracle::add(&a, &b), f);
        let rhs = rig.add(&oracle::integrate(rig, &a, f), &oracle::integrate(rig, &b, f));
        differ_c(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j]), fs(phi)], &lhs, &rhs)
    });
    run.law("integrate.additive_in_fn", false, [nd, nf, nf], |[i, j, k]| {
        let (a, f1, f2) = (nv(&p.dx[i]), &p.fx[j], &p.fx[k]);
        let lhs = oracle::integrate(rig, &a, |x| rig.add(&fval(f1, x), &fval(f2, x)));
        let rhs = rig.add(
            &oracle::integrate(rig, &a, |x| fval(f1, x)),
            &oracle::integrate(rig, &a, |x| fval(f2, x)),
        );
        differ_c(rig, || vec![ds(&p.dx[i]), fs(f1), fs(f2)], &lhs, &rhs)
    });
    run.law("integrate.homogeneous_in_fn", false, [nd, nf, ns], |[i, j, k]| {
        let (a, phi, l) = (nv(&p.dx[i]), &p.fx[j], &p.scalars[k]);
        let lhs = oracle::integrate(rig, &a, |x| rig.mul(&fval(phi, x), l));
        let rhs = rig.mul(&oracle::integrate(rig, &a, |x| fval(phi, x)), l);
        differ_c(rig, || vec![ds(&p.dx[i]), fs(phi), rig.format(l)], &lhs, &rhs)
    });
    run.law("integrate.homogeneous_in_dist", true, [nd, nf, ns], |[i, j, k]| {
        let (a, phi, l) = (nv(&p.dx[i]), &p.fx[j], &p.scalars[k]);
        let lhs = oracle::integrate(rig, &oracle::scale(rig, &a, l), |x| fval(phi, x));
        let rhs = rig.mul(&oracle::integrate(rig, &a, |x| fval(phi, x)), l);
        differ_c(rig, || vec![ds(&p.dx[i]), fs(phi), rig.format(l)], &lhs, &rhs)
    });

    // The functional representation.
    run.law("tau.multiplication", false, [p.nx.len(), nf], |[i, j]| {
        let (m, phi) = (nested_nv(rig, &p.nx[i]), &p.fx[j]);
        let f = |x: &Element| fval(phi, x);
        let lhs = oracle::integrate(rig, &oracle::flatten(rig, &m), f);
        let rhs = m
            .iter()
            .fold(zero.clone(), |acc, (q, w)| rig.add(&acc, &rig.mul(w, &oracle::integrate(rig, q, f))));
        differ_c(rig, || vec![ds(&p.nx[i]), fs(phi)], &lhs, &rhs)
    });
    let nested_x_then_y = |a: &[(Element, R::Elem)], b: &[(Element, R::Elem)], phi: &TestFn<R>| {
        oracle::integrate(rig, a, |x| oracle::integrate(rig, b, |y| fval(phi, &oracle::pair(x, y))))
    };
    let nested_y_then_x = |a: &[(Element, R::Elem)], b: &[(Element, R::Elem)], phi: &TestFn<R>| {
        oracle::integrate(rig, b, |y| oracle::integrate(rig, a, |x| fval(phi, &oracle::pair(x, y))))
    };
    let nxy = [nd, p.dy.len(), p.fxy.len()];
    run.law("tau.monoidal", false, nxy, |[i, j, k]| {
        let (a, b, phi) = (nv(&p.dx[i]), nv(&p.dy[j]), &p.fxy[k]);
        let lhs = oracle::integrate(rig, &oracle::psi(rig, &a, &b), |e| fval(phi, e));
        differ_c(rig, || vec![ds(&p.dx[i]), ds(&p.dy[j]), fs(phi)], &lhs, &nested_x_then_y(&a, &b, phi))
    });
    run.law("tau.monoidal_twisted", false, nxy, |[i, j, k]| {
        let (a, b, phi) = (nv(&p.dx[i]), nv(&p.dy[j]), &p.fxy[k]);
        let lhs = oracle::integrate(rig, &oracle::psi_tilde(rig, &a, &b), |e| fval(phi, e));
        differ_c(rig, || vec![ds(&p.dx[i]), ds(&p.dy[j]), fs(phi)], &lhs, &nested_y_then_x(&a, &b, phi))
    });
    run.law("fubini", true, nxy, |[i, j, k]| {
        let (a, b, phi) = (nv(&p.dx[i]), nv(&p.dy[j]), &p.fxy[k]);
        differ_c(
            rig,
            || vec![ds(&p.dx[i]), ds(&p.dy[j]), fs(phi)],
            &nested_x_then_y(&a, &b, phi),
            &nested_y_then_x(&a, &b, phi),
        )
    });
    run.law("tau.indicators_recover_weights", false, [nd, p.x.len()], |[i, j]| {
        let (a, x) = (nv(&p.dx[i]), &p.x.elements()[j]);
        let lhs = oracle::integrate(rig, &a, |e| if e == x { one.clone() } else { zero.clone() });
        let rhs = oracle::total(rig, &a.iter().filter(|(k, _)| k == x).cloned().collect::<Vec<_>>());
        differ_c(rig, || vec![ds(&p.dx[i]), x.to_string()], &lhs, &rhs)
    });

    // Expectation and moments.
    run.law("expectation.of_pushforward", false, [p.dr.len(), p.fr.len()], |[i, j]| {
        let (a, phi) = (nv(&p.dr[i]), &p.fr[j]);
        let lhs = oracle::integrate(rig, &a, |r| fval(phi, r));
        let pushed = oracle::push(&a, |r| Element::atom(rig.format(&fval(phi, r))));
        differ_c(rig, || vec![ds(&p.dr[i]), fs(phi)], &lhs, &naive_expectation(rig, &pushed))
    });
    run.law("expectation.is_flatten_at_one", false, [p.dr.len()], |[i]| {
        let a = nv(&p.dr[i]);
        let nested = oracle::push(&a, |r| vec![(point.clone(), coeff_of(rig, r))]);
        let rhs = oracle::total(rig, &oracle::flatten(rig, &nested));
        differ_c(rig, || vec![ds(&p.dr[i])], &naive_expectation(rig, &a), &rhs)
    });
    run.law("expectation.of_sum", false, [p.joint_r.len()], |[i]| {
        let a = nv(&p.joint_r[i]);
        let split = |k: &Element| {
            let (r, s) = k.as_pair().expect("pair");
            (coeff_of(rig, r), coeff_of(rig, s))
        };
        let summed = oracle::push(&a, |k| {
            let (r, s) = split(k);
            Element::atom(rig.format(&rig.add(&r, &s)))
        });
        let first = oracle::push(&a, |k| k.as_pair().expect("pair").0.clone());
        let second = oracle::push(&a, |k| k.as_pair().expect("pair").1.clone());
        let rhs = rig.add(&naive_expectation(rig, &first), &naive_expectation(rig, &second));
        differ_c(rig, || vec![ds(&p.joint_r[i])], &naive_expectation(rig, &summed), &rhs)
    });
    run.law("expectation.affine_equivariance", true, [p.probs_r.len(), ns, ns], |[i, j, k]| {
        let (a, s, t) = (nv(&p.probs_r[i]), &p.scalars[j], &p.scalars[k]);
        let lhs = rig.add(&rig.mul(s, &naive_expectation(rig, &a)), t);
        let pushed = oracle::push(&a, |r| Element::atom(rig.format(&rig.add(&rig.mul(s, &coeff_of(rig, r)), t))));
        differ_c(
            rig,
            || vec![ds(&p.probs_r[i]), rig.format(s), rig.format(t)],
            &lhs,
            &naive_expectation(rig, &pushed),
        )
    });
    run.law("expectation.independent_mixed_moment", true, [p.probs_r.len(), p.probs_r.len()], |[i, j]| {
        let (a, b) = (nv(&p.probs_r[i]), nv(&p.probs_r[j]));
        let joint = oracle::psi(rig, &a, &b);
        let lhs = joint.iter().fold(zero.clone(), |acc, (k, w)| {
            let (r, s) = k.as_pair().expect("pair");
            rig.add(&acc, &rig.mul(&rig.mul(w, &coeff_of(rig, r)), &coeff_of(rig, s)))
        });
        let rhs = rig.mul(&naive_expectation(rig, &a), &naive_expectation(rig, &b));
        differ_c(rig, || vec![ds(&p.probs_r[i]), ds(&p.probs_r[j])], &lhs, &rhs)
    });

    // The affine part.
    let is_prob = |w: &[(Element, R::Elem)]| oracle::total(rig, w) == one;
    let prob_fail = |inputs: Vec<String>, w: &[(Element, R::Elem)]| {
        (!is_prob(w)).then(|| Violation {
            inputs,
            lhs: rig.format(&oracle::total(rig, w)),
            rhs: rig.format(&one),
        })
    };
    run.law("affine.pushforward", false, [p.probs_x.len(), p.maps_xy.len()], |[i, j]| {
        let f = &p.maps_xy[j];
        let pushed = oracle::push(&nv(&p.probs_x[i]), |e| f.get(e).expect("total"));
        prob_fail(vec![ds(&p.probs_x[i]), ms(f)], &pushed)
    });
    run.law("affine.tensor", false, [p.probs_x.len(), p.probs_y.len()], |[i, j]| {
        let joint = oracle::psi(rig, &nv(&p.probs_x[i]), &nv(&p.probs_y[j]));
        prob_fail(vec![ds(&p.probs_x[i]), ds(&p.probs_y[j])], &joint)
    });
    run.law("affine.flatten", false, [p.probs_nx.len()], |[i]| {
        let flat = oracle::flatten(rig, &nested_nv(rig, &p.probs_nx[i]));
        prob_fail(vec![ds(&p.probs_nx[i])], &flat)
    });
    let npx = p.probs_x.len();
    run.law("affine.convolution", false, [npx, npx, p.ops_x.len()], |[i, j, k]| {
        let op = &p.ops_x[k];
        let joint = oracle::psi(rig, &nv(&p.probs_x[i]), &nv(&p.probs_x[j]));
        let conv = oracle::push(&joint, |e| op.get(e).expect("total"));
        prob_fail(vec![ds(&p.probs_x[i]), ds(&p.probs_x[j]), ms(op)], &conv)
    });
    run.law("affine.condition", false, [npx, nf], |[i, j]| {
        let (a, phi) = (nv(&p.probs_x[i]), &p.fx[j]);
        let mass = oracle::integrate(rig, &a, |x| fval(phi, x));
        let inv = rig.try_invert(&mass)?;
        let conditioned = oracle::scale(rig, &oracle::act(rig, &a, |x| fval(phi, x)), &inv);
        prob_fail(vec![ds(&p.probs_x[i]), fs(phi)], &conditioned)
    });
    run.law("affine.marginals_of_tensor", false, [npx, p.probs_y.len()], |[i, j]| {
        let (a, b) = (nv(&p.probs_x[i]), nv(&p.probs_y[j]));
        let joint = oracle::psi(rig, &a, &b);
        let first = oracle::push(&joint, |k| k.as_pair().expect("pair").0.clone());
        let second = oracle::push(&joint, |k| k.as_pair().expect("pair").1.clone());
        let inputs = || vec![ds(&p.probs_x[i]), ds(&p.probs_y[j])];
        differ_w(rig, inputs, &first, &a).or_else(|| differ_w(rig, inputs, &second, &b))
    });

    // Library operations against the naive formulas.
    run.law("oracle.dirac", false, [p.x.len()], |[i]| {
        let x = &p.x.elements()[i];
        agrees(rig, || vec![x.to_string()], Ok(Dist::dirac(rig, x.clone())), &oracle::dirac(rig, x.clone()))
    });
    run.law("oracle.pushforward", false, [nd, p.maps_xy.len()], |[i, j]| {
        let f = &p.maps_xy[j];
        let naive = oracle::push(&nv(&p.dx[i]), |e| f.get(e).expect("total"));
        agrees(rig, || vec![ds(&p.dx[i]), ms(f)], p.dx[i].pushforward(|e| f.get(e)), &naive)
    });
    run.law("oracle.flatten", false, [p.nx.len()], |[i]| {
        let naive = oracle::flatten(rig, &nested_nv(rig, &p.nx[i]));
        agrees(rig, || vec![ds(&p.nx[i])], p.nx[i].flatten(), &naive)
    });
    run.law("oracle.bind", false, [nd, p.kernels.len()], |[i, j]| {
        let ker = &p.kernels[j];
        let naive = bind(&nv(&p.dx[i]), ker);
        agrees(rig, || vec![ds(&p.dx[i]), kernel_s(ker)], p.dx[i].bind(|x| ker.get(x).cloned()), &naive)
    });
    run.law("oracle.add", false, [nd, nd], |[i, j]| {
        let naive = oracle::add(&nv(&p.dx[i]), &nv(&p.dx[j]));
        agrees(rig, || vec![ds(&p.dx[i]), ds(&p.dx[j])], p.dx[i].add(&p.dx[j]), &naive)
    });
    run.law("oracle.scale", false, [nd, ns], |[i, j]| {
        let l = &p.scalars[j];
        let naive = oracle::scale(rig, &nv(&p.dx[i]), l);
        agrees(rig, || vec![ds(&p.dx[i]), rig.format(l)], Ok(p.dx[i].scale(l)), &naive)
    });
    run.law("oracle.total", false, [nd], |[i]| {
        let naive = oracle::total(rig, &nv(&p.dx[i]));
        agrees_c(rig, || vec![ds(&p.dx[i])], Ok(p.dx[i].total()), &naive)
    });
    run.law("oracle.phi", false, [p.dsum.len()], |[i]| {
        let q = nv(&p.dsum[i]);
        let side = |s: Side| -> Weights<Element, R::Elem> {
            q.iter()
                .filter_map(|(k, w)| match k.as_tag() {
                    Some((t, e)) if t == s => Some((e.clone(), w.clone())),
                    _ => None,
                })
                .collect()
        };
        let inputs = || vec![ds(&p.dsum[i])];
        match p.dsum[i].phi_split() {
            Ok((l, r)) => agrees(rig, inputs, Ok(l.clone()), &side(Side::Left))
                .or_else(|| agrees(rig, inputs, Ok(r.clone()), &side(Side::Right)))
                .or_else(|| agrees(rig, inputs, Dist::phi_merge(&l, &r), &q)),
            Err(e) => agrees(rig, inputs, Err(e), &q),
        }
    });
    run.law("oracle.strength", false, [nd, p.y.len()], |[i, j]| {
        let (d, y) = (&p.dx[i], &p.y.elements()[j]);
        let q = nv(d);
        let inputs = || vec![ds(d), y.to_string()];
        agrees(rig, inputs, Ok(strength::strength_left(d, y)), &oracle::push(&q, |x| oracle::pair(x, y))).or_else(|| {
            agrees(
                rig,
                inputs,
                Ok(strength::strength_right(y, d)),
                &oracle::push(&q, |x| oracle::pair(y, x)),
            )
        })
    });
    run.law("oracle.psi", false, [nd, p.dy.len()], |[i, j]| {
        let (a, b) = (&p.dx[i], &p.dy[j]);
        let (na, nb) = (nv(a), nv(b));
        let direct = oracle::psi(rig, &na, &nb);
        let twisted = oracle::psi_tilde(rig, &na, &nb);
        let inputs = || vec![ds(a), ds(b)];
        agrees(rig, inputs, strength::psi(a, b), &direct)
            .or_else(|| agrees(rig, inputs, strength::psi_via_strength(a, b), &direct))
            .or_else(|| agrees(rig, inputs, strength::psi_tilde(a, b), &twisted))
            .or_else(|| agrees(rig, inputs, strength::psi_tilde_via_strength(a, b), &twisted))
    });
    run.law("oracle.cotensor_strength", false, [p.fn_dists.len()], |[i]| {
        let s = &p.fn_dists[i];
        let inputs = || vec![ds(s)];
        match strength::cotensor_strength(s, &p.x) {
            Ok(table) => p.x.iter().find_map(|x| {
                let naive = oracle::push(&nv(s), |f| Element::atom(f.lookup(x).expect("total table")));
                agrees(rig, inputs, Ok(table[x].clone()), &naive)
            }),
            Err(e) => agrees(rig, inputs, Err(e), &[]),
        }
    });
    run.law("oracle.integrate", false, [nd, nf], |[i, j]| {
        let (d, phi) = (&p.dx[i], &p.fx[j]);
        let naive = oracle::integrate(rig, &nv(d), |x| fval(phi, x));
        let inputs = || vec![ds(d), fs(phi)];
        agrees_c(rig, inputs, integration::integrate(d, phi), &naive)
            .or_else(|| agrees_c(rig, inputs, integration::integrate_via_monad(d, phi), &naive))
            .or_else(|| {
                let functional = schwartz::tau(d, &p.x).and_then(|t| t.eval(phi));
                agrees_c(rig, inputs, functional, &naive)
            })
    });
    run.law("oracle.act", false, [nd, nf], |[i, j]| {
        let (d, phi) = (&p.dx[i], &p.fx[j]);
        let naive = oracle::act(rig, &nv(d), |x| fval(phi, x));
        let inputs = || vec![ds(d), fs(phi)];
        agrees(rig, inputs, integration::act(d, phi), &naive)
            .or_else(|| agrees(rig, inputs, integration::act_via_strength(d, phi), &naive))
    });
    run.law("oracle.convolve", false, [nd, nd, p.ops_x.len()], |[i, j, k]| {
        let (a, b, op) = (&p.dx[i], &p.dx[j], &p.ops_x[k]);
        let naive = oracle::push(&oracle::psi(rig, &nv(a), &nv(b)), |e| op.get(e).expect("total"));
        agrees(rig, || vec![ds(a), ds(b), ms(op)], integration::convolve(a, b, |x, y| op.get2(x, y)), &naive)
    });
    run.law("oracle.functional_psi", false, nxy, |[i, j, k]| {
        let (a, b, phi) = (&p.dx[i], &p.dy[j], &p.fxy[k]);
        let (na, nb) = (nv(a), nv(b));
        let inputs = || vec![ds(a), ds(b), fs(phi)];
        let eval = |twisted: bool| -> Result<R::Elem> {
            let (f, g) = (schwartz::tau(a, &p.x)?, schwartz::tau(b, &p.y)?);
            let h = if twisted {
                schwartz::functional_psi_tilde(&f, &g)?
            } else {
                schwartz::functional_psi(&f, &g)?
            };
            h.eval(phi)
        };
        agrees_c(rig, inputs, eval(false), &nested_x_then_y(&na, &nb, phi))
            .or_else(|| agrees_c(rig, inputs, eval(true), &nested_y_then_x(&na, &nb, phi)))
    });
    run.law("oracle.scalar_monoid", false, [ns, ns], |[i, j]| {
        let (a, b) = (&p.scalars[i], &p.scalars[j]);
        let m = integration::ScalarMonoid::new(rig);
        let naive = rig.mul(a, b);
        let inputs = || vec![rig.format(a), rig.format(b)];
        agrees_c(rig, inputs, Ok(m.mul_via_psi(a, b)), &naive)
            .or_else(|| agrees_c(rig, inputs, Ok(m.mul_via_strength(a, b)), &naive))
    });
    run.law("oracle.marginals", false, [p.dxy.len()], |[i]| {
        let d = &p.dxy[i];
        let q = nv(d);
        let first = oracle::push(&q, |k| k.as_pair().expect("pair").0.clone());
        let second = oracle::push(&q, |k| k.as_pair().expect("pair").1.clone());
        let inputs = || vec![ds(d)];
        match probability::marginals(d) {
            Ok((m1, m2)) => agrees(rig, inputs, Ok(m1), &first).or_else(|| agrees(rig, inputs, Ok(m2), &second)),
            Err(e) => agrees(rig, inputs, Err(e), &first),
        }
    });
    run.law("oracle.moments", false, [p.dr.len(), 4], |[i, n]| {
        let d = &p.dr[i];
        let q = nv(d);
        let naive = oracle::integrate(rig, &q, |r| rig.pow(&coeff_of(rig, r), n as u32));
        let inputs = || vec![ds(d), n.to_string()];
        let check = agrees_c(rig, inputs, probability::moment(d, n as u32), &naive);
        if n == 1 {
            check
                .or_else(|| agrees_c(rig, inputs, probability::expectation(d), &naive))
                .or_else(|| agrees_c(rig, inputs, schwartz::expectation_via_ev_id(d), &naive))
        } else {
            check
        }
    });
    run.law("oracle.mixed_moment", false, [p.joint_r.len()], |[i]| {
        let d = &p.joint_r[i];
        let naive = nv(d).iter().fold(zero.clone(), |acc, (k, w)| {
            let (r, s) = k.as_pair().expect("pair");
            rig.add(&acc, &rig.mul(&rig.mul(w, &coeff_of(rig, r)), &coeff_of(rig, s)))
        });
        agrees_c(rig, || vec![ds(d)], probability::mixed_moment(d), &naive)
    });
    run.law("oracle.condition", false, [npx, nf], |[i, j]| {
        let (d, phi) = (&p.probs_x[i], &p.fx[j]);
        let q = nv(d);
        let mass = oracle::integrate(rig, &q, |x| fval(phi, x));
        let inputs = || vec![ds(d), fs(phi)];
        match rig.try_invert(&mass) {
            Some(inv) => {
                let naive = oracle::scale(rig, &oracle::act(rig, &q, |x| fval(phi, x)), &inv);
                agrees(rig, inputs, probability::condition(d, phi), &naive)
            }
            None => match probability::condition(d, phi) {
                Err(Error::NotInvertible(_)) => None,
                other => Some(Violation {
                    inputs: inputs(),
                    lhs: format!("{other:?}"),
                    rhs: "NotInvertible".into(),
                }),
            },
        }
    });
    let _ = &p.coeff;

    let mut reports = run.reports;
    reports.sort_by(|a, b| a.law.cmp(&b.law));
    Ok(reports)
}
