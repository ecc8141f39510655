//! Naive summation formulas over raw weight lists.
//!
//! Nothing here calls into `dist`, `strength`, `integration` or
//! `schwartz`: lists may hold repeated keys and zero weights, and are only
//! collapsed when compared.

use std::collections::BTreeMap;

use crate::rig::Rig;
use crate::space::Element;

pub(crate) type Weights<K, C> = Vec<(K, C)>;
pub(crate) type Nested<K, C> = Vec<(Weights<K, C>, C)>;

/// Sums repeated keys and drops zeros.
pub(crate) fn collapse<R: Rig, K: Ord + Clone>(rig: &R, w: &[(K, R::Elem)]) -> BTreeMap<K, R::Elem> {
    let mut out: BTreeMap<K, R::Elem> = BTreeMap::new();
    for (k, c) in w {
        let acc = out.entry(k.clone()).or_insert_with(|| rig.zero());
        *acc = rig.add(acc, c);
    }
    out.retain(|_, c| !rig.is_zero(c));
    out
}

pub(crate) fn same<R: Rig, K: Ord + Clone>(rig: &R, a: &[(K, R::Elem)], b: &[(K, R::Elem)]) -> bool {
    collapse(rig, a) == collapse(rig, b)
}

pub(crate) fn show<R: Rig>(rig: &R, w: &[(Element, R::Elem)]) -> String {
    let rows: Vec<String> = collapse(rig, w)
        .iter()
        .map(|(k, c)| format!("[{k},\"{}\"]", rig.format(c)))
        .collect();
    format!("[{}]", rows.join(","))
}

pub(crate) fn total<R: Rig, K>(rig: &R, w: &[(K, R::Elem)]) -> R::Elem {
    w.iter().fold(rig.zero(), |acc, (_, c)| rig.add(&acc, c))
}

pub(crate) fn dirac<R: Rig, K>(rig: &R, k: K) -> Weights<K, R::Elem> {
    vec![(k, rig.one())]
}

pub(crate) fn push<C: Clone, K, L>(w: &[(K, C)], f: impl Fn(&K) -> L) -> Weights<L, C> {
    w.iter().map(|(k, c)| (f(k), c.clone())).collect()
}

pub(crate) fn flatten<R: Rig, K: Clone>(rig: &R, m: &Nested<K, R::Elem>) -> Weights<K, R::Elem> {
    let mut out = Vec::new();
    for (inner, outer) in m {
        for (k, c) in inner {
            out.push((k.clone(), rig.mul(outer, c)));
        }
    }
    out
}

pub(crate) fn add<C: Clone, K: Clone>(a: &[(K, C)], b: &[(K, C)]) -> Weights<K, C> {
    a.iter().chain(b).cloned().collect()
}

/// Right scalar action.
pub(crate) fn scale<R: Rig, K: Clone>(rig: &R, w: &[(K, R::Elem)], lambda: &R::Elem) -> Weights<K, R::Elem> {
    w.iter().map(|(k, c)| (k.clone(), rig.mul(c, lambda))).collect()
}

pub(crate) fn pair(a: &Element, b: &Element) -> Element {
    Element::Pair(Box::new(a.clone()), Box::new(b.clone()))
}

/// `P(x) * Q(y)`.
pub(crate) fn psi<R: Rig>(rig: &R, p: &[(Element, R::Elem)], q: &[(Element, R::Elem)]) -> Weights<Element, R::Elem> {
    let mut out = Vec::new();
    for (x, a) in p {
        for (y, b) in q {
            out.push((pair(x, y), rig.mul(a, b)));
        }
    }
    out
}

/// `Q(y) * P(x)`.
pub(crate) fn psi_tilde<R: Rig>(rig: &R, p: &[(Element, R::Elem)], q: &[(Element, R::Elem)]) -> Weights<Element, R::Elem> {
    let mut out = Vec::new();
    for (x, a) in p {
        for (y, b) in q {
            out.push((pair(x, y), rig.mul(b, a)));
        }
    }
    out
}

/// `Σ P(x) * φ(x)`.
pub(crate) fn integrate<R: Rig>(rig: &R, p: &[(Element, R::Elem)], phi: impl Fn(&Element) -> R::Elem) -> R::Elem {
    p.iter()
        .fold(rig.zero(), |acc, (x, c)| rig.add(&acc, &rig.mul(c, &phi(x))))
}

/// `x ↦ P(x) * φ(x)`.
pub(crate) fn act<R: Rig>(rig: &R, p: &[(Element, R::Elem)], phi: impl Fn(&Element) -> R::Elem) -> Weights<Element, R::Elem> {
    p.iter().map(|(x, c)| (x.clone(), rig.mul(c, &phi(x)))).collect()
}

/// Reads a table element's rows back as weights.
pub(crate) fn decode<R: Rig>(rig: &R, e: &Element) -> Weights<Element, R::Elem> {
    match e {
        Element::FnTable(rows) => rows
            .iter()
            .map(|(k, s)| (k.clone(), rig.parse(s).expect("table written by this rig")))
            .collect(),
        _ => panic!("not a table element: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::Natural;
    use num_bigint::BigUint;

    fn n(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn collapse_sums_and_prunes() {
        let w = vec![("a", n(1)), ("b", n(0)), ("a", n(2))];
        let c = collapse(&Natural, &w);
        assert_eq!(c.len(), 1);
        assert_eq!(c["a"], n(3));
    }

    #[test]
    fn double_sum_flatten() {
        let inner = vec![(Element::atom("a"), n(2))];
        let m = vec![(inner, n(3))];
        assert_eq!(flatten(&Natural, &m), vec![(Element::atom("a"), n(6))]);
    }
}
