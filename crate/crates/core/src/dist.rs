//! Finitely supported distributions with coefficients in a rig: the free
//! module monad.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rig::Rig;
use crate::space::{Element, FinSpace, Side};

/// A finitely supported weighting of elements.
///
/// Weights equal to the rig's zero are never stored, and entries are kept
/// in canonical element order, so structural equality is equality of
/// distributions.
#[derive(Clone, PartialEq)]
pub struct Dist<R: Rig> {
    rig: R,
    weights: BTreeMap<Element, R::Elem>,
    carrier: Option<FinSpace>,
}

impl<R: Rig> fmt::Debug for Dist<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dist<{}>{{", self.rig)?;
        for (i, (k, w)) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k} ↦ {}", self.rig.format(w))?;
        }
        f.write_str("}")
    }
}

impl<R: Rig> Dist<R> {
    /// The zero distribution.
    pub fn zero(rig: &R) -> Self {
        Dist {
            rig: rig.clone(),
            weights: BTreeMap::new(),
            carrier: None,
        }
    }

    /// The unit of the monad: weight one at `x`.
    pub fn dirac(rig: &R, x: Element) -> Self {
        let mut weights = BTreeMap::new();
        weights.insert(x, rig.one());
        Dist {
            rig: rig.clone(),
            weights,
            carrier: None,
        }
    }

    /// Sums repeated keys and drops zero weights.
    pub fn from_weights(rig: &R, entries: impl IntoIterator<Item = (Element, R::Elem)>) -> Self {
        let mut weights: BTreeMap<Element, R::Elem> = BTreeMap::new();
        for (k, w) in entries {
            match weights.get_mut(&k) {
                Some(acc) => *acc = rig.add(acc, &w),
                None => {
                    weights.insert(k, w);
                }
            }
        }
        weights.retain(|_, w| !rig.is_zero(w));
        Dist {
            rig: rig.clone(),
            weights,
            carrier: None,
        }
    }

    /// Like [`Dist::from_weights`] but with weights in text form.
    pub fn parse_weights<K, S>(rig: &R, entries: impl IntoIterator<Item = (K, S)>) -> Result<Self>
    where
        K: Into<Element>,
        S: AsRef<str>,
    {
        let parsed = entries
            .into_iter()
            .map(|(k, s)| Ok((k.into(), rig.parse(s.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Dist::from_weights(rig, parsed))
    }

    /// Attaches a carrier, checking that it covers the support.
    pub fn with_carrier(mut self, carrier: FinSpace) -> Result<Self> {
        if let Some(k) = self.weights.keys().find(|k| !carrier.contains(k)) {
            return Err(Error::CarrierMismatch(k.clone()));
        }
        self.carrier = Some(carrier);
        Ok(self)
    }

    pub fn rig(&self) -> &R {
        &self.rig
    }

    pub fn carrier(&self) -> Option<&FinSpace> {
        self.carrier.as_ref()
    }

    pub fn weight(&self, x: &Element) -> R::Elem {
        self.weights.get(x).cloned().unwrap_or_else(|| self.rig.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, &R::Elem)> {
        self.weights.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Element> {
        self.weights.keys()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    /// Same weights, no carrier. Equality compares carriers too, so this
    /// is what law checks compare.
    pub fn without_carrier(mut self) -> Self {
        self.carrier = None;
        self
    }

    pub(crate) fn check_rig(&self, other: &R) -> Result<()> {
        if self.rig == *other {
            Ok(())
        } else {
            Err(Error::rig_mismatch(&self.rig, other))
        }
    }

    /// The total weight, i.e. the pushforward to the one-point space.
    pub fn total(&self) -> R::Elem {
        self.rig.sum(self.weights.values())
    }

    /// Functorial action: the weight at `y` is the sum of the weights of
    /// its preimage.
    pub fn pushforward<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&Element) -> Option<Element>,
    {
        let mut mapped = Vec::with_capacity(self.len());
        for (k, w) in &self.weights {
            let y = f(k).ok_or_else(|| Error::MapIncomplete(k.clone()))?;
            mapped.push((y, w.clone()));
        }
        Ok(Dist::from_weights(&self.rig, mapped))
    }

    /// [`Dist::pushforward`] along a total map.
    pub fn map<F>(&self, f: F) -> Self
    where
        F: Fn(&Element) -> Element,
    {
        Dist::from_weights(&self.rig, self.weights.iter().map(|(k, w)| (f(k), w.clone())))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        other.check_rig(&self.rig)?;
        let merged = self
            .weights
            .iter()
            .chain(other.weights.iter())
            .map(|(k, w)| (k.clone(), w.clone()));
        Ok(Dist::from_weights(&self.rig, merged))
    }

    /// Right scalar action: every weight `w` becomes `w * lambda`.
    pub fn scale(&self, lambda: &R::Elem) -> Self {
        let rig = &self.rig;
        Dist::from_weights(rig, self.weights.iter().map(|(k, w)| (k.clone(), rig.mul(w, lambda))))
    }

    /// Encodes the distribution as a table element so that it can itself
    /// be a point of a space.
    pub fn to_element(&self) -> Element {
        Element::FnTable(
            self.weights
                .iter()
                .map(|(k, w)| (k.clone(), self.rig.format(w)))
                .collect(),
        )
    }

    pub fn from_element(rig: &R, e: &Element) -> Result<Self> {
        let rows = e
            .as_table()
            .ok_or_else(|| Error::Parse(format!("{e} does not encode a distribution")))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for (k, text) in rows {
            let w = rig.parse(text).map_err(|_| Error::rig_mismatch(rig, format!("coefficient {text:?}")))?;
            parsed.push((k.clone(), w));
        }
        Ok(Dist::from_weights(rig, parsed))
    }

    /// Monad multiplication. Keys of `self` must encode distributions;
    /// the result weighs `x` by the sum over `Q` of `self(Q) * Q(x)`.
    pub fn flatten(&self) -> Result<Self> {
        let rig = &self.rig;
        let mut acc = Vec::new();
        for (key, outer) in &self.weights {
            let inner = Dist::from_element(rig, key)?;
            acc.extend(inner.weights.into_iter().map(|(x, w)| (x, rig.mul(outer, &w))));
        }
        Ok(Dist::from_weights(rig, acc))
    }

    /// Kleisli extension: pushforward along `k` followed by flattening.
    pub fn bind<F>(&self, k: F) -> Result<Self>
    where
        F: Fn(&Element) -> Option<Dist<R>>,
    {
        let rig = &self.rig;
        let mut acc = Vec::new();
        for (x, outer) in &self.weights {
            let inner = k(x).ok_or_else(|| Error::MapIncomplete(x.clone()))?;
            inner.check_rig(rig)?;
            acc.extend(inner.weights.into_iter().map(|(y, w)| (y, rig.mul(outer, &w))));
        }
        Ok(Dist::from_weights(rig, acc))
    }

    /// Splits a distribution on a coproduct into its two restrictions.
    pub fn phi_split(&self) -> Result<(Self, Self)> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (k, w) in &self.weights {
            match k.as_tag() {
                Some((Side::Left, e)) => left.push((e.clone(), w.clone())),
                Some((Side::Right, e)) => right.push((e.clone(), w.clone())),
                None => return Err(Error::UntaggedElement(k.clone())),
            }
        }
        Ok((Dist::from_weights(&self.rig, left), Dist::from_weights(&self.rig, right)))
    }

    /// Inverse of [`Dist::phi_split`].
    pub fn phi_merge(left: &Self, right: &Self) -> Result<Self> {
        right.check_rig(&left.rig)?;
        let tagged = left
            .weights
            .iter()
            .map(|(k, w)| (Element::left(k.clone()), w.clone()))
            .chain(right.weights.iter().map(|(k, w)| (Element::right(k.clone()), w.clone())));
        Ok(Dist::from_weights(&left.rig, tagged))
    }
}
