//! Tensorial and cotensorial strengths and the two tensor products.

use std::collections::BTreeMap;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::rig::Rig;
use crate::space::{Element, FinSpace};

/// `t'(P, y)`: re-keys every `x` to `(x, y)`.
pub fn strength_left<R: Rig>(p: &Dist<R>, y: &Element) -> Dist<R> {
    p.map(|x| Element::pair(x.clone(), y.clone()))
}

/// `t''(x, Q)`: re-keys every `y` to `(x, y)`.
pub fn strength_right<R: Rig>(x: &Element, q: &Dist<R>) -> Dist<R> {
    q.map(|y| Element::pair(x.clone(), y.clone()))
}

/// The derived three-place strength `X × T(Y) × Z → T(X × Y × Z)`, with
/// triples nested as `((x, y), z)`.
pub fn strength_middle<R: Rig>(x: &Element, q: &Dist<R>, z: &Element) -> Dist<R> {
    q.map(|y| Element::pair(Element::pair(x.clone(), y.clone()), z.clone()))
}

/// Tensor product, weight `P(x) * Q(y)` (in that order).
pub fn psi<R: Rig>(p: &Dist<R>, q: &Dist<R>) -> Result<Dist<R>> {
    q.check_rig(p.rig())?;
    let rig = p.rig();
    let mut out = Vec::with_capacity(p.len() * q.len());
    for (x, a) in p.iter() {
        for (y, b) in q.iter() {
            out.push((Element::pair(x.clone(), y.clone()), rig.mul(a, b)));
        }
    }
    Ok(Dist::from_weights(rig, out))
}

/// Twisted tensor product, weight `Q(y) * P(x)`.
pub fn psi_tilde<R: Rig>(p: &Dist<R>, q: &Dist<R>) -> Result<Dist<R>> {
    q.check_rig(p.rig())?;
    let rig = p.rig();
    let mut out = Vec::with_capacity(p.len() * q.len());
    for (x, a) in p.iter() {
        for (y, b) in q.iter() {
            out.push((Element::pair(x.clone(), y.clone()), rig.mul(b, a)));
        }
    }
    Ok(Dist::from_weights(rig, out))
}

/// `psi` as the composite `μ ∘ T(t'') ∘ t'`.
pub fn psi_via_strength<R: Rig>(p: &Dist<R>, q: &Dist<R>) -> Result<Dist<R>> {
    q.check_rig(p.rig())?;
    let rig = p.rig();
    let outer = strength_left(p, &q.to_element());
    let nested = outer.pushforward(|k| {
        let (x, qe) = k.as_pair()?;
        let inner = Dist::from_element(rig, qe).ok()?;
        Some(strength_right(x, &inner).to_element())
    })?;
    nested.flatten()
}

/// `psi_tilde` as the composite `μ ∘ T(t') ∘ t''`.
pub fn psi_tilde_via_strength<R: Rig>(p: &Dist<R>, q: &Dist<R>) -> Result<Dist<R>> {
    q.check_rig(p.rig())?;
    let rig = p.rig();
    let outer = strength_right(&p.to_element(), q);
    let nested = outer.pushforward(|k| {
        let (pe, y) = k.as_pair()?;
        let inner = Dist::from_element(rig, pe).ok()?;
        Some(strength_left(&inner, y).to_element())
    })?;
    nested.flatten()
}

/// The cotensorial strength `λ`: a distribution over function tables
/// becomes, at each `x` of `domain`, the pushforward along evaluation at
/// `x`. Function values are read back as atoms.
pub fn cotensor_strength<R: Rig>(s: &Dist<R>, domain: &FinSpace) -> Result<BTreeMap<Element, Dist<R>>> {
    for f in s.support() {
        if f.as_table().is_none() {
            return Err(Error::MapIncomplete(f.clone()));
        }
        if let Some(x) = domain.iter().find(|x| f.lookup(x).is_none()) {
            return Err(Error::MapIncomplete(x.clone()));
        }
    }
    domain
        .iter()
        .map(|x| {
            let at_x = s.pushforward(|f| f.lookup(x).map(Element::atom))?;
            Ok((x.clone(), at_x))
        })
        .collect()
}

/// Whether `f: T(A) × B → T(C)` is linear in its first argument on every
/// grid point `(M, b)`, `M ∈ T(T(A))`:
/// `f(μ M, b) = μ(T(f(-, b)) M)`.
pub fn is_linear_1<R, B, F>(f: F, grid: &[(Dist<R>, B)]) -> bool
where
    R: Rig,
    F: Fn(&Dist<R>, &B) -> Result<Dist<R>>,
{
    grid.iter().all(|(m, b)| {
        let check = || -> Result<bool> {
            let rig = m.rig();
            let lhs = f(&m.flatten()?, b)?;
            let mapped = m.pushforward(|a| {
                let a = Dist::from_element(rig, a).ok()?;
                f(&a, b).ok().map(|c| c.to_element())
            })?;
            Ok(lhs == mapped.flatten()?)
        };
        check().unwrap_or(false)
    })
}

/// Whether `f: A × T(B) → T(C)` is linear in its second argument on every
/// grid point `(a, N)`, `N ∈ T(T(B))`.
pub fn is_linear_2<R, A, F>(f: F, grid: &[(A, Dist<R>)]) -> bool
where
    R: Rig,
    F: Fn(&A, &Dist<R>) -> Result<Dist<R>>,
{
    grid.iter().all(|(a, n)| {
        let check = || -> Result<bool> {
            let rig = n.rig();
            let lhs = f(a, &n.flatten()?)?;
            let mapped = n.pushforward(|b| {
                let b = Dist::from_element(rig, b).ok()?;
                f(a, &b).ok().map(|c| c.to_element())
            })?;
            Ok(lhs == mapped.flatten()?)
        };
        check().unwrap_or(false)
    })
}

/// Linear in each argument separately, on the respective grids.
pub fn is_bilinear<R, F>(f: F, grid_1: &[(Dist<R>, Dist<R>)], grid_2: &[(Dist<R>, Dist<R>)]) -> bool
where
    R: Rig,
    F: Fn(&Dist<R>, &Dist<R>) -> Result<Dist<R>>,
{
    is_linear_1(&f, grid_1) && is_linear_2(&f, grid_2)
}
