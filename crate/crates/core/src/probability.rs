//! The affine part: distributions of total one, their marginals,
//! moments, and conditioning.
//!
//! "Probability" means total equal to the rig's one and nothing more;
//! there is no order or nonnegativity requirement.

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::integration::{act, integrate, TestFn};
use crate::rig::Rig;
use crate::schwartz::coefficient_keys;
use crate::space::Element;

pub fn is_probability<R: Rig>(p: &Dist<R>) -> bool {
    p.total() == p.rig().one()
}

fn require_probability<R: Rig>(p: &Dist<R>) -> Result<()> {
    if is_probability(p) {
        Ok(())
    } else {
        Err(Error::NotProbability(p.rig().format(&p.total())))
    }
}

fn invert<R: Rig>(rig: &R, a: &R::Elem) -> Result<R::Elem> {
    rig.try_invert(a).ok_or_else(|| Error::NotInvertible(rig.format(a)))
}

/// Rescales by the inverse of the total.
pub fn normalize<R: Rig>(p: &Dist<R>) -> Result<Dist<R>> {
    let inv = invert(p.rig(), &p.total())?;
    Ok(p.scale(&inv))
}

/// Pushforwards along both projections of a joint distribution.
pub fn marginals<R: Rig>(p: &Dist<R>) -> Result<(Dist<R>, Dist<R>)> {
    if let Some(k) = p.support().find(|k| k.as_pair().is_none()) {
        return Err(Error::UnpairedElement(k.clone()));
    }
    let first = p.map(|k| k.as_pair().expect("checked").0.clone());
    let second = p.map(|k| k.as_pair().expect("checked").1.clone());
    Ok((first, second))
}

/// `Σ P(r) * r`, keys read as coefficients.
pub fn expectation<R: Rig>(p: &Dist<R>) -> Result<R::Elem> {
    moment(p, 1)
}

/// `Σ P(r) * r^n`. The zeroth moment is the total.
pub fn moment<R: Rig>(p: &Dist<R>, n: u32) -> Result<R::Elem> {
    let rig = p.rig();
    let keys = coefficient_keys(p)?;
    let terms: Vec<R::Elem> = keys
        .iter()
        .map(|(k, r)| rig.mul(&p.weight(k), &rig.pow(r, n)))
        .collect();
    Ok(rig.sum(&terms))
}

fn coefficient_pair<R: Rig>(rig: &R, k: &Element) -> Result<(R::Elem, R::Elem)> {
    let not_coeff = || Error::KeyNotCoefficient(k.clone());
    let (a, b) = k.as_pair().ok_or_else(not_coeff)?;
    let parse = |e: &Element| e.as_atom().and_then(|s| rig.parse(s).ok()).ok_or_else(not_coeff);
    Ok((parse(a)?, parse(b)?))
}

/// `Σ P(r, s) * r * s` over a joint distribution on scalar pairs.
pub fn mixed_moment<R: Rig>(p: &Dist<R>) -> Result<R::Elem> {
    let rig = p.rig();
    let mut acc = rig.zero();
    for (k, w) in p.iter() {
        let (r, s) = coefficient_pair(rig, k)?;
        acc = rig.add(&acc, &rig.mul(&rig.mul(w, &r), &s));
    }
    Ok(acc)
}

/// `P_φ = (P ⊢ φ) * λ⁻¹` with `λ = ∫ φ dP`. `P` must have total one.
pub fn condition<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<Dist<R>> {
    require_probability(p)?;
    condition_lenient(p, phi)
}

/// [`condition`] without the total-one requirement on `P`; only `∫ φ dP`
/// needs an inverse. The result has total one either way.
pub fn condition_lenient<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<Dist<R>> {
    let mass = integrate(p, phi)?;
    let inv = invert(p.rig(), &mass)?;
    Ok(act(p, phi)?.scale(&inv))
}

/// Both sides of `E{X + Y} = E{X} + E{Y}` for a joint distribution on
/// scalar pairs: the left pushes forward along addition first, the right
/// adds the expectations of the marginals.
pub fn expectation_of_sum<R: Rig>(p: &Dist<R>) -> Result<(R::Elem, R::Elem)> {
    let rig = p.rig();
    let mut summed = Vec::with_capacity(p.len());
    for (k, w) in p.iter() {
        let (r, s) = coefficient_pair(rig, k)?;
        summed.push((Element::atom(rig.format(&rig.add(&r, &s))), w.clone()));
    }
    let lhs = expectation(&Dist::from_weights(rig, summed))?;
    let (px, py) = marginals(p)?;
    let rhs = rig.add(&expectation(&px)?, &expectation(&py)?);
    Ok((lhs, rhs))
}

/// Both sides of `φ(E P) = E(T(φ) P)` for the affine map `φ(x) = a*x + b`,
/// for a probability distribution `P`.
pub fn affine_push_expectation<R: Rig>(p: &Dist<R>, a: &R::Elem, b: &R::Elem) -> Result<(R::Elem, R::Elem)> {
    require_probability(p)?;
    affine_push_sides(p, a, b)
}

/// [`affine_push_expectation`] without the total-one check. With total
/// other than one the sides differ in general.
pub fn affine_push_sides<R: Rig>(p: &Dist<R>, a: &R::Elem, b: &R::Elem) -> Result<(R::Elem, R::Elem)> {
    let rig = p.rig();
    let lhs = rig.add(&rig.mul(a, &expectation(p)?), b);
    let keys = coefficient_keys(p)?;
    let pushed = Dist::from_weights(
        rig,
        keys.iter().map(|(k, r)| {
            let image = rig.add(&rig.mul(a, r), b);
            (Element::atom(rig.format(&image)), p.weight(k))
        }),
    );
    Ok((lhs, expectation(&pushed)?))
}
