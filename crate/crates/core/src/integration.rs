//! Test functions, the integration pairing, the action of functions on
//! distributions, and convolution.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::rig::Rig;
use crate::space::{Element, FinSpace};
use crate::strength;

/// A total table from a finite carrier to coefficients.
#[derive(Clone, PartialEq)]
pub struct TestFn<R: Rig> {
    rig: R,
    table: BTreeMap<Element, R::Elem>,
}

impl<R: Rig> fmt::Debug for TestFn<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.table.iter().map(|(k, v)| (k.to_string(), self.rig.format(v))))
            .finish()
    }
}

impl<R: Rig> TestFn<R> {
    /// Later duplicates win; the carrier is the set of keys.
    pub fn from_pairs(rig: &R, pairs: impl IntoIterator<Item = (Element, R::Elem)>) -> Self {
        TestFn {
            rig: rig.clone(),
            table: pairs.into_iter().collect(),
        }
    }

    pub fn parse_pairs<K, S>(rig: &R, pairs: impl IntoIterator<Item = (K, S)>) -> Result<Self>
    where
        K: Into<Element>,
        S: AsRef<str>,
    {
        let parsed = pairs
            .into_iter()
            .map(|(k, s)| Ok((k.into(), rig.parse(s.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TestFn::from_pairs(rig, parsed))
    }

    pub fn new<F>(rig: &R, carrier: &FinSpace, mut f: F) -> Self
    where
        F: FnMut(&Element) -> R::Elem,
    {
        TestFn::from_pairs(rig, carrier.iter().map(|x| (x.clone(), f(x))))
    }

    pub fn constant(rig: &R, carrier: &FinSpace, value: R::Elem) -> Self {
        TestFn::new(rig, carrier, |_| value.clone())
    }

    /// One on the points selected by `event`, zero elsewhere.
    pub fn indicator<F>(rig: &R, carrier: &FinSpace, event: F) -> Self
    where
        F: Fn(&Element) -> bool,
    {
        TestFn::new(rig, carrier, |x| if event(x) { rig.one() } else { rig.zero() })
    }

    pub fn rig(&self) -> &R {
        &self.rig
    }

    pub fn carrier(&self) -> FinSpace {
        FinSpace::new(self.table.keys().cloned())
    }

    pub fn get(&self, x: &Element) -> Option<&R::Elem> {
        self.table.get(x)
    }

    pub(crate) fn at(&self, x: &Element) -> Result<&R::Elem> {
        self.table.get(x).ok_or_else(|| Error::MapIncomplete(x.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, &R::Elem)> {
        self.table.iter()
    }

    fn zip_with<F>(&self, other: &Self, op: F) -> Result<Self>
    where
        F: Fn(&R::Elem, &R::Elem) -> R::Elem,
    {
        if self.rig != other.rig {
            return Err(Error::rig_mismatch(&self.rig, &other.rig));
        }
        let table = self
            .table
            .iter()
            .map(|(x, a)| Ok((x.clone(), op(a, other.at(x)?))))
            .collect::<Result<_>>()?;
        Ok(TestFn {
            rig: self.rig.clone(),
            table,
        })
    }

    /// Pointwise sum over the carrier of `self`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.rig.add(a, b))
    }

    /// Pointwise product `x ↦ self(x) * other(x)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.rig.mul(a, b))
    }

    /// `x ↦ self(x) * lambda`.
    pub fn scale(&self, lambda: &R::Elem) -> Self {
        TestFn {
            rig: self.rig.clone(),
            table: self
                .table
                .iter()
                .map(|(x, v)| (x.clone(), self.rig.mul(v, lambda)))
                .collect(),
        }
    }

    /// Precomposition with `f`, on `domain`.
    pub fn pullback<F>(&self, f: F, domain: &FinSpace) -> Result<Self>
    where
        F: Fn(&Element) -> Option<Element>,
    {
        let table = domain
            .iter()
            .map(|x| {
                let y = f(x).ok_or_else(|| Error::MapIncomplete(x.clone()))?;
                Ok((x.clone(), self.at(&y)?.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(TestFn {
            rig: self.rig.clone(),
            table,
        })
    }

    pub fn to_element(&self) -> Element {
        Element::FnTable(
            self.table
                .iter()
                .map(|(k, v)| (k.clone(), self.rig.format(v)))
                .collect(),
        )
    }

    pub fn from_element(rig: &R, e: &Element) -> Result<Self> {
        let rows = e
            .as_table()
            .ok_or_else(|| Error::Parse(format!("{e} does not encode a function")))?;
        let pairs = rows
            .iter()
            .map(|(k, s)| Ok((k.clone(), rig.parse(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TestFn::from_pairs(rig, pairs))
    }
}

fn same_rig<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<()> {
    if p.rig() == phi.rig() {
        Ok(())
    } else {
        Err(Error::rig_mismatch(p.rig(), phi.rig()))
    }
}

/// `∫ φ dP`, the sum over the support of `P(x) * φ(x)`.
pub fn integrate<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<R::Elem> {
    same_rig(p, phi)?;
    let rig = p.rig();
    let mut acc = rig.zero();
    for (x, w) in p.iter() {
        acc = rig.add(&acc, &rig.mul(w, phi.at(x)?));
    }
    Ok(acc)
}

/// The same pairing computed as the free-algebra structure map applied to
/// `T(φ)(P)`: push each point to the scalar distribution `{* ↦ φ(x)}` and
/// flatten.
pub fn integrate_via_monad<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<R::Elem> {
    same_rig(p, phi)?;
    let rig = p.rig();
    let scalars = p.pushforward(|x| {
        let v = phi.get(x)?;
        Some(Dist::from_weights(rig, [(Element::point(), v.clone())]).to_element())
    })?;
    Ok(scalars.flatten()?.weight(&Element::point()))
}

/// The monoid structure on scalars: unit `e = one`, multiplication the
/// rig product.
#[derive(Debug, Clone)]
pub struct ScalarMonoid<R: Rig> {
    rig: R,
}

impl<R: Rig> ScalarMonoid<R> {
    pub fn new(rig: &R) -> Self {
        ScalarMonoid { rig: rig.clone() }
    }

    pub fn unit(&self) -> R::Elem {
        self.rig.one()
    }

    pub fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.rig.mul(a, b)
    }

    fn scalar(&self, a: &R::Elem) -> Dist<R> {
        Dist::from_weights(&self.rig, [(Element::point(), a.clone())])
    }

    /// The product read off the tensor product of two distributions on
    /// the one-point space.
    pub fn mul_via_psi(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        let joint = strength::psi(&self.scalar(a), &self.scalar(b))
            .expect("scalar distributions share a rig");
        joint.map(|_| Element::point()).weight(&Element::point())
    }

    /// The product as left strength into `T(1 × T(1)) ≅ T²(1)` followed by
    /// flattening.
    pub fn mul_via_strength(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        let outer = strength::strength_left(&self.scalar(a), &self.scalar(b).to_element());
        let nested = outer.map(|k| k.as_pair().map(|(_, q)| q.clone()).expect("paired key"));
        nested
            .flatten()
            .expect("keys encode scalar distributions")
            .weight(&Element::point())
    }
}

/// `P ⊢ φ`: reweights `P(x)` to `P(x) * φ(x)`.
pub fn act<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<Dist<R>> {
    same_rig(p, phi)?;
    let rig = p.rig();
    let entries = p
        .iter()
        .map(|(x, w)| Ok((x.clone(), rig.mul(w, phi.at(x)?))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Dist::from_weights(rig, entries))
}

/// `P ⊢ φ` built as the 1-linear extension of
/// `x ↦ t''(x, φ(x))`, re-keyed along `X × 1 ≅ X`.
pub fn act_via_strength<R: Rig>(p: &Dist<R>, phi: &TestFn<R>) -> Result<Dist<R>> {
    same_rig(p, phi)?;
    let rig = p.rig();
    let on_point = |x: &Element| -> Option<Element> {
        let scalar = Dist::from_weights(rig, [(Element::point(), phi.get(x)?.clone())]);
        let rho = strength::strength_right(x, &scalar);
        let unpaired = rho.map(|k| k.as_pair().map(|(a, _)| a.clone()).expect("paired key"));
        Some(unpaired.to_element())
    };
    p.pushforward(on_point)?.flatten()
}

/// Convolution along `m`: the pushforward of `psi(P, Q)` along `m`.
pub fn convolve<R, F>(p: &Dist<R>, q: &Dist<R>, m: F) -> Result<Dist<R>>
where
    R: Rig,
    F: Fn(&Element, &Element) -> Option<Element>,
{
    strength::psi(p, q)?.pushforward(|k| {
        let (x, y) = k.as_pair()?;
        m(x, y)
    })
}

/// Addition of natural-number atoms, e.g. `"2" + "3" = "5"`.
pub fn natural_sum(a: &Element, b: &Element) -> Option<Element> {
    let parse = |e: &Element| -> Option<BigUint> {
        let s = e.as_atom()?;
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    Some(Element::atom((parse(a)? + parse(b)?).to_string()))
}
