//! Points and finite carrier spaces.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::integration::TestFn;
use crate::rig::Rig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A point of some finite space. The derived order is the canonical one:
/// atoms before pairs before tags before tables, each compared
/// lexicographically on its parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Atom(String),
    Pair(Box<Element>, Box<Element>),
    Tag(Side, Box<Element>),
    /// A finite table of coefficient text, sorted by key. Encodes both
    /// test functions and distributions used as points.
    FnTable(Vec<(Element, String)>),
}

impl Element {
    pub fn atom(name: impl Into<String>) -> Self {
        Element::Atom(name.into())
    }

    pub fn pair(a: Element, b: Element) -> Self {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn left(e: Element) -> Self {
        Element::Tag(Side::Left, Box::new(e))
    }

    pub fn right(e: Element) -> Self {
        Element::Tag(Side::Right, Box::new(e))
    }

    /// The point of the one-element space.
    pub fn point() -> Self {
        Element::atom("*")
    }

    /// Builds a table, sorting by key. Later duplicates win.
    pub fn table(entries: impl IntoIterator<Item = (Element, String)>) -> Self {
        let map: std::collections::BTreeMap<_, _> = entries.into_iter().collect();
        Element::FnTable(map.into_iter().collect())
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Element::Atom(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_tag(&self) -> Option<(Side, &Element)> {
        match self {
            Element::Tag(s, e) => Some((*s, e)),
            _ => None,
        }
    }

    pub fn as_table(&self) -> Option<&[(Element, String)]> {
        match self {
            Element::FnTable(t) => Some(t),
            _ => None,
        }
    }

    /// Looks up `key` in a table element.
    pub fn lookup(&self, key: &Element) -> Option<&str> {
        let table = self.as_table()?;
        table
            .binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|i| table[i].1.as_str())
    }

    pub fn to_json(&self) -> Value {
        match self {
            Element::Atom(s) => Value::String(s.clone()),
            Element::Pair(a, b) => Value::Array(vec!["pair".into(), a.to_json(), b.to_json()]),
            Element::Tag(side, e) => {
                let tag = match side {
                    Side::Left => "L",
                    Side::Right => "R",
                };
                Value::Array(vec![tag.into(), e.to_json()])
            }
            Element::FnTable(rows) => Value::Array(vec![
                "fn".into(),
                Value::Array(
                    rows.iter()
                        .map(|(k, c)| Value::Array(vec![k.to_json(), Value::String(c.clone())]))
                        .collect(),
                ),
            ]),
        }
    }

    /// Parses the JSON element forms. Table rows must have distinct keys.
    pub fn from_json(v: &Value) -> Result<Element> {
        let bad = || Error::Parse(format!("malformed element {v}"));
        match v {
            Value::String(s) => Ok(Element::Atom(s.clone())),
            Value::Array(items) => {
                let head = items.first().and_then(Value::as_str).ok_or_else(bad)?;
                match (head, items.len()) {
                    ("pair", 3) => Ok(Element::pair(
                        Element::from_json(&items[1])?,
                        Element::from_json(&items[2])?,
                    )),
                    ("L", 2) => Ok(Element::left(Element::from_json(&items[1])?)),
                    ("R", 2) => Ok(Element::right(Element::from_json(&items[1])?)),
                    ("fn", 2) => {
                        let rows = items[1].as_array().ok_or_else(bad)?;
                        let mut parsed = Vec::with_capacity(rows.len());
                        for row in rows {
                            let (k, c) = json_row(row).ok_or_else(bad)?;
                            parsed.push((Element::from_json(k)?, coefficient_text(c).ok_or_else(bad)?));
                        }
                        let n = parsed.len();
                        let table = Element::table(parsed);
                        if table.as_table().map(<[_]>::len) != Some(n) {
                            return Err(Error::Parse(format!("duplicate keys in table {v}")));
                        }
                        Ok(table)
                    }
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}

pub(crate) fn json_row(row: &Value) -> Option<(&Value, &Value)> {
    match row.as_array()?.as_slice() {
        [k, c] => Some((k, c)),
        _ => None,
    }
}

/// Coefficients are written as JSON strings; bare numbers and booleans are
/// accepted on input.
pub(crate) fn coefficient_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        _ => None,
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl From<&str> for Element {
    fn from(s: &str) -> Self {
        Element::atom(s)
    }
}

/// A finite set of elements in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FinSpace {
    elements: Vec<Element>,
}

impl FinSpace {
    pub fn new(elements: impl IntoIterator<Item = Element>) -> Self {
        let set: BTreeSet<Element> = elements.into_iter().collect();
        FinSpace {
            elements: set.into_iter().collect(),
        }
    }

    pub fn atoms<S: AsRef<str>>(names: &[S]) -> Self {
        FinSpace::new(names.iter().map(|n| Element::atom(n.as_ref())))
    }

    pub fn empty() -> Self {
        FinSpace::default()
    }

    /// The one-point space `{*}`.
    pub fn unit() -> Self {
        FinSpace::new([Element::point()])
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.elements.iter()
    }

    /// Cartesian product, pairs in lexicographic order.
    pub fn product(&self, other: &FinSpace) -> FinSpace {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in &self.elements {
            for b in &other.elements {
                out.push(Element::pair(a.clone(), b.clone()));
            }
        }
        FinSpace { elements: out }
    }

    /// Disjoint union: left-tagged copies of `self`, then right-tagged
    /// copies of `other`.
    pub fn coproduct(&self, other: &FinSpace) -> FinSpace {
        let elements = self
            .elements
            .iter()
            .map(|e| Element::left(e.clone()))
            .chain(other.elements.iter().map(|e| Element::right(e.clone())))
            .collect();
        FinSpace { elements }
    }
}

impl<'a> IntoIterator for &'a FinSpace {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

pub const DEFAULT_FUNCTION_CAP: usize = 10_000;

/// All total functions `domain -> values`, as test functions, in canonical
/// order. Fails when `|values|^|domain|` exceeds `cap`.
pub fn enumerate_functions<R: Rig>(
    rig: &R,
    domain: &FinSpace,
    values: &[R::Elem],
    cap: usize,
) -> Result<Vec<TestFn<R>>> {
    let count = (values.len() as u128)
        .checked_pow(domain.len() as u32)
        .unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::CapExceeded { count, cap });
    }
    let mut sorted: Vec<R::Elem> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out = Vec::with_capacity(count as usize);
    if sorted.is_empty() && !domain.is_empty() {
        return Ok(out);
    }
    // Odometer over value indices, last domain point varying fastest.
    let n = domain.len();
    let mut idx = vec![0usize; n];
    loop {
        let table = domain
            .iter()
            .zip(&idx)
            .map(|(x, &i)| (x.clone(), sorted[i].clone()));
        out.push(TestFn::from_pairs(rig, table));
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < sorted.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
