//! Distributions as linear functionals on test functions.
//!
//! A [`Functional`] is an opaque evaluation procedure with a declared
//! carrier. Equality is extensional over a canonical test family: every
//! function on the carrier when the rig is finite and the count is small,
//! otherwise indicators, constants and a seeded sample from the rig's grid.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::integration::{integrate, TestFn};
use crate::rig::Rig;
use crate::space::{enumerate_functions, Element, FinSpace, DEFAULT_FUNCTION_CAP};

type Eval<R> = dyn Fn(&TestFn<R>) -> Result<<R as Rig>::Elem> + Send + Sync;

#[derive(Clone)]
pub struct Functional<R: Rig> {
    rig: R,
    carrier: FinSpace,
    eval: Arc<Eval<R>>,
}

impl<R: Rig> fmt::Debug for Functional<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Functional")
            .field("rig", &self.rig.to_string())
            .field("carrier", &self.carrier)
            .finish_non_exhaustive()
    }
}

const SAMPLED_FAMILY: usize = 32;
const PAIR_CAP: usize = 20_000;

impl<R: Rig> Functional<R> {
    pub fn new<F>(rig: &R, carrier: FinSpace, eval: F) -> Self
    where
        F: Fn(&TestFn<R>) -> Result<R::Elem> + Send + Sync + 'static,
    {
        Functional {
            rig: rig.clone(),
            carrier,
            eval: Arc::new(eval),
        }
    }

    pub fn rig(&self) -> &R {
        &self.rig
    }

    pub fn carrier(&self) -> &FinSpace {
        &self.carrier
    }

    pub fn eval(&self, phi: &TestFn<R>) -> Result<R::Elem> {
        (self.eval)(phi)
    }

    /// Equal carriers and equal values on every member of the test family.
    pub fn extensionally_equal(&self, other: &Self) -> bool {
        if self.rig != other.rig || self.carrier != other.carrier {
            return false;
        }
        test_family(&self.rig, &self.carrier, 0)
            .iter()
            .all(|phi| matches!((self.eval(phi), other.eval(phi)), (Ok(a), Ok(b)) if a == b))
    }
}

/// The canonical test family on `carrier`.
pub fn test_family<R: Rig>(rig: &R, carrier: &FinSpace, seed: u64) -> Vec<TestFn<R>> {
    if let Some(values) = rig.enumerate() {
        if let Ok(all) = enumerate_functions(rig, carrier, &values, DEFAULT_FUNCTION_CAP) {
            return all;
        }
    }
    let mut family = vec![
        TestFn::constant(rig, carrier, rig.zero()),
        TestFn::constant(rig, carrier, rig.one()),
    ];
    family.extend(
        carrier
            .iter()
            .map(|x| TestFn::indicator(rig, carrier, |y| y == x)),
    );
    let grid = rig.sample_grid();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLED_FAMILY {
        family.push(TestFn::new(rig, carrier, |_| {
            grid[rng.random_range(0..grid.len())].clone()
        }));
    }
    family
}

/// `τ(P)`: the functional `φ ↦ ∫ φ dP`.
pub fn tau<R: Rig>(p: &Dist<R>, carrier: &FinSpace) -> Result<Functional<R>> {
    if let Some(x) = p.support().find(|x| !carrier.contains(x)) {
        return Err(Error::CarrierMismatch(x.clone()));
    }
    let (rig, p) = (p.rig().clone(), p.clone());
    Ok(Functional::new(&rig, carrier.clone(), move |phi| integrate(&p, phi)))
}

/// Evaluation at `x`.
pub fn dirac_functional<R: Rig>(rig: &R, x: &Element, carrier: &FinSpace) -> Result<Functional<R>> {
    if !carrier.contains(x) {
        return Err(Error::CarrierMismatch(x.clone()));
    }
    let x = x.clone();
    Ok(Functional::new(rig, carrier.clone(), move |phi| phi.at(&x).cloned()))
}

/// `φ ↦ φ(x) * φ(x)`. Not linear unless squaring is additive in the rig
/// (it is in idempotent rigs such as `bool`).
pub fn quadratic_functional<R: Rig>(rig: &R, x: &Element, carrier: &FinSpace) -> Functional<R> {
    let x = x.clone();
    let r = rig.clone();
    Functional::new(rig, carrier.clone(), move |phi| {
        let v = phi.at(&x)?;
        Ok(r.mul(v, v))
    })
}

/// Additivity, zero preservation and right homogeneity over the test
/// family (scalars from the rig's sample grid).
pub fn check_functional_linearity<R: Rig>(f: &Functional<R>) -> bool {
    let rig = &f.rig;
    let family = test_family(rig, &f.carrier, 0);
    let ev = |phi: &TestFn<R>| f.eval(phi).ok();

    let zero = TestFn::constant(rig, &f.carrier, rig.zero());
    if ev(&zero) != Some(rig.zero()) {
        return false;
    }

    let n = family.len();
    let pairs: Vec<(usize, usize)> = if n * n <= PAIR_CAP {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..PAIR_CAP)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
            .collect()
    };
    for (i, j) in pairs {
        let (a, b) = (&family[i], &family[j]);
        let Ok(sum) = a.add(b) else { return false };
        match (ev(&sum), ev(a), ev(b)) {
            (Some(s), Some(x), Some(y)) if s == rig.add(&x, &y) => {}
            _ => return false,
        }
    }

    let scalars = rig.sample_grid();
    family.iter().all(|phi| {
        scalars.iter().all(|lambda| match (ev(&phi.scale(lambda)), ev(phi)) {
            (Some(lhs), Some(v)) => lhs == rig.mul(&v, lambda),
            _ => false,
        })
    })
}

/// Slices `φ` on `X × Y` at a fixed `x`.
fn slice_first<R: Rig>(phi: &TestFn<R>, x: &Element, ys: &FinSpace) -> Result<TestFn<R>> {
    let pairs = ys
        .iter()
        .map(|y| Ok((y.clone(), phi.at(&Element::pair(x.clone(), y.clone()))?.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TestFn::from_pairs(phi.rig(), pairs))
}

fn slice_second<R: Rig>(phi: &TestFn<R>, y: &Element, xs: &FinSpace) -> Result<TestFn<R>> {
    let pairs = xs
        .iter()
        .map(|x| Ok((x.clone(), phi.at(&Element::pair(x.clone(), y.clone()))?.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TestFn::from_pairs(phi.rig(), pairs))
}

/// Tensor product of functionals: `φ ↦ F(x ↦ G(y ↦ φ(x, y)))`.
pub fn functional_psi<R: Rig>(f: &Functional<R>, g: &Functional<R>) -> Result<Functional<R>> {
    if f.rig != g.rig {
        return Err(Error::rig_mismatch(&f.rig, &g.rig));
    }
    let carrier = f.carrier.product(&g.carrier);
    let (f, g) = (f.clone(), g.clone());
    Ok(Functional::new(&f.rig.clone(), carrier, move |phi| {
        let inner = f
            .carrier
            .iter()
            .map(|x| Ok((x.clone(), g.eval(&slice_first(phi, x, &g.carrier)?)?)))
            .collect::<Result<Vec<_>>>()?;
        f.eval(&TestFn::from_pairs(&f.rig, inner))
    }))
}

/// The twisted tensor product: `φ ↦ G(y ↦ F(x ↦ φ(x, y)))`.
pub fn functional_psi_tilde<R: Rig>(f: &Functional<R>, g: &Functional<R>) -> Result<Functional<R>> {
    if f.rig != g.rig {
        return Err(Error::rig_mismatch(&f.rig, &g.rig));
    }
    let carrier = f.carrier.product(&g.carrier);
    let (f, g) = (f.clone(), g.clone());
    Ok(Functional::new(&f.rig.clone(), carrier, move |phi| {
        let inner = g
            .carrier
            .iter()
            .map(|y| Ok((y.clone(), f.eval(&slice_second(phi, y, &f.carrier)?)?)))
            .collect::<Result<Vec<_>>>()?;
        g.eval(&TestFn::from_pairs(&g.rig, inner))
    }))
}

/// Parses every key of `p` as a coefficient atom.
pub(crate) fn coefficient_keys<R: Rig>(p: &Dist<R>) -> Result<Vec<(Element, R::Elem)>> {
    p.support()
        .map(|k| {
            let r = k
                .as_atom()
                .and_then(|s| p.rig().parse(s).ok())
                .ok_or_else(|| Error::KeyNotCoefficient(k.clone()))?;
            Ok((k.clone(), r))
        })
        .collect()
}

/// The expectation of a distribution on scalars, as `τ(P)` evaluated at
/// the identity function.
pub fn expectation_via_ev_id<R: Rig>(p: &Dist<R>) -> Result<R::Elem> {
    let keys = coefficient_keys(p)?;
    let carrier = FinSpace::new(keys.iter().map(|(k, _)| k.clone()));
    let identity = TestFn::from_pairs(p.rig(), keys);
    tau(p, &carrier)?.eval(&identity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::{Boolean, Modular, Natural, Rational};
    use crate::strength::psi;

    fn ab() -> FinSpace {
        FinSpace::atoms(&["a", "b"])
    }

    #[test]
    fn tau_examples() {
        let x: Element = "a".into();
        let phi = TestFn::parse_pairs(&Rational, [("a", "2/3"), ("b", "5")]).unwrap();
        let t = tau(&Dist::dirac(&Rational, x.clone()), &ab()).unwrap();
        assert_eq!(t.eval(&phi).unwrap(), phi.get(&x).unwrap().clone());
        let z = tau(&Dist::zero(&Rational), &ab()).unwrap();
        assert_eq!(z.eval(&phi).unwrap(), Rational.zero());
        let p = Dist::parse_weights(&Rational, [("a", "1/3"), ("b", "7")]).unwrap();
        let one = TestFn::constant(&Rational, &ab(), Rational.one());
        assert_eq!(tau(&p, &ab()).unwrap().eval(&one).unwrap(), p.total());
    }

    #[test]
    fn tau_rejects_support_outside_carrier() {
        let p = Dist::dirac(&Rational, "c".into());
        assert!(matches!(tau(&p, &ab()), Err(Error::CarrierMismatch(_))));
        assert!(matches!(dirac_functional(&Rational, &"c".into(), &ab()), Err(Error::CarrierMismatch(_))));
    }

    #[test]
    fn dirac_functional_examples() {
        let x: Element = "a".into();
        let d = dirac_functional(&Modular::new(3), &x, &ab()).unwrap();
        let ind_x = TestFn::indicator(&Modular::new(3), &ab(), |y| *y == x);
        let ind_y = TestFn::indicator(&Modular::new(3), &ab(), |y| *y != x);
        assert_eq!(d.eval(&ind_x).unwrap(), 1);
        assert_eq!(d.eval(&ind_y).unwrap(), 0);
        let t = tau(&Dist::dirac(&Modular::new(3), x), &ab()).unwrap();
        assert!(d.extensionally_equal(&t));
    }

    #[test]
    fn linearity_examples() {
        let p = Dist::parse_weights(&Modular::new(3), [("a", "2"), ("b", "1")]).unwrap();
        assert!(check_functional_linearity(&tau(&p, &ab()).unwrap()));
        let zero = Functional::new(&Modular::new(3), ab(), |_| Ok(0));
        assert!(check_functional_linearity(&zero));

        let one_point = FinSpace::atoms(&["x"]);
        let x: Element = "x".into();
        assert!(!check_functional_linearity(&quadratic_functional(&Modular::new(3), &x, &one_point)));
        assert!(!check_functional_linearity(&quadratic_functional(&Rational, &x, &one_point)));
        // squaring is the identity on booleans
        assert!(check_functional_linearity(&quadratic_functional(&Boolean, &x, &one_point)));
    }

    #[test]
    fn functional_psi_examples() {
        let rig = Rational;
        let xs = ab();
        let ys = FinSpace::atoms(&["c", "d"]);
        let (x, y): (Element, Element) = ("a".into(), "d".into());
        let dd = functional_psi(
            &dirac_functional(&rig, &x, &xs).unwrap(),
            &dirac_functional(&rig, &y, &ys).unwrap(),
        )
        .unwrap();
        let carrier = xs.product(&ys);
        let phi = TestFn::new(&rig, &carrier, |e| {
            let (a, b) = e.as_pair().unwrap();
            let v = match (a.as_atom().unwrap(), b.as_atom().unwrap()) {
                ("a", "c") => "1",
                ("a", "d") => "2/5",
                ("b", "c") => "-3",
                _ => "7",
            };
            rig.parse(v).unwrap()
        });
        assert_eq!(rig.format(&dd.eval(&phi).unwrap()), "2/5");

        let p = Dist::parse_weights(&rig, [("a", "1/2"), ("b", "-2")]).unwrap();
        let q = Dist::parse_weights(&rig, [("c", "3"), ("d", "1/3")]).unwrap();
        let (tp, tq) = (tau(&p, &xs).unwrap(), tau(&q, &ys).unwrap());
        let lhs = functional_psi(&tp, &tq).unwrap();
        assert!(lhs.extensionally_equal(&tau(&psi(&p, &q).unwrap(), &carrier).unwrap()));
        assert!(lhs.extensionally_equal(&functional_psi_tilde(&tp, &tq).unwrap()));
    }

    #[test]
    fn expectation_via_identity() {
        assert_eq!(expectation_via_ev_id(&Dist::dirac(&Natural, "5".into())).unwrap(), 5u32.into());
        let p = Dist::parse_weights(&Rational, [("1", "1/2"), ("2", "1/2")]).unwrap();
        assert_eq!(Rational.format(&expectation_via_ev_id(&p).unwrap()), "3/2");
        assert_eq!(expectation_via_ev_id(&Dist::zero(&Rational)).unwrap(), Rational.zero());
        let bad = Dist::dirac(&Natural, "five".into());
        assert_eq!(expectation_via_ev_id(&bad).unwrap_err(), Error::KeyNotCoefficient("five".into()));
    }
}
