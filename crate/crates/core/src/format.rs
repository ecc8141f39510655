//! JSON file formats for distributions, test functions and maps.
//!
//! ```text
//! dist: {"version":1, "rig":"rational", "weights":[[element, "1/2"], ...]}
//! fn:   {"version":1, "rig":"rational", "fn":[[element, "1"], ...], "carrier":[element, ...]}
//! map:  {"version":1, "map":[[element, element], ...]}
//! ```
//!
//! Output is always canonical: weights sorted by element, zero weights
//! dropped, coefficients in their canonical text form.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::dist::Dist;
use crate::error::{Error, Result};
use crate::integration::TestFn;
use crate::rig::{Rig, RigName};
use crate::space::{coefficient_text, json_row, Element, FinSpace};

pub const FORMAT_VERSION: u64 = 1;

/// Whether parsing rejects non-canonical input or normalizes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Duplicate keys and zero weights are errors.
    #[default]
    Strict,
    /// Duplicate keys are summed and zero weights dropped.
    Lenient,
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn object(v: &Value) -> Result<&serde_json::Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    match obj.get("version").and_then(Value::as_u64) {
        Some(FORMAT_VERSION) => Ok(obj),
        _ => Err(Error::Parse(format!("missing or unsupported version (expected {FORMAT_VERSION})"))),
    }
}

fn array<'a>(obj: &'a serde_json::Map<String, Value>, field: &str) -> Result<&'a Vec<Value>> {
    obj.get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing array field {field:?}")))
}

/// The rig named by a dist or fn document.
pub fn rig_of(v: &Value) -> Result<RigName> {
    let obj = object(v)?;
    obj.get("rig")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing field \"rig\"".into()))?
        .parse()
}

fn check_rig<R: Rig>(rig: &R, v: &Value) -> Result<()> {
    let named = rig_of(v)?;
    if named.to_string() == rig.to_string() {
        Ok(())
    } else {
        Err(Error::rig_mismatch(rig, named))
    }
}

fn parse_rows<R: Rig>(rig: &R, rows: &[Value]) -> Result<Vec<(Element, R::Elem)>> {
    rows.iter()
        .map(|row| {
            let (k, c) = json_row(row).ok_or_else(|| Error::Parse(format!("malformed row {row}")))?;
            let text = coefficient_text(c).ok_or_else(|| Error::Parse(format!("malformed coefficient {c}")))?;
            Ok((Element::from_json(k)?, rig.parse(&text)?))
        })
        .collect()
}

fn parse_carrier(v: Option<&Value>) -> Result<Option<FinSpace>> {
    let Some(v) = v else { return Ok(None) };
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("carrier must be an array".into()))?;
    let elems = items.iter().map(Element::from_json).collect::<Result<Vec<_>>>()?;
    let n = elems.len();
    let space = FinSpace::new(elems);
    if space.len() != n {
        return Err(Error::Parse("carrier has duplicate elements".into()));
    }
    Ok(Some(space))
}

fn reject_duplicates(keys: impl IntoIterator<Item = Element>) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for k in keys {
        if !seen.insert(k.clone()) {
            return Err(Error::Parse(format!("duplicate key {k}")));
        }
    }
    Ok(())
}

pub fn read_dist<R: Rig>(rig: &R, v: &Value, mode: Mode) -> Result<Dist<R>> {
    check_rig(rig, v)?;
    let obj = object(v)?;
    let rows = parse_rows(rig, array(obj, "weights")?)?;
    if mode == Mode::Strict {
        reject_duplicates(rows.iter().map(|(k, _)| k.clone()))?;
        if let Some((k, _)) = rows.iter().find(|(_, w)| rig.is_zero(w)) {
            return Err(Error::Parse(format!("zero weight at {k}")));
        }
    }
    let dist = Dist::from_weights(rig, rows);
    match parse_carrier(obj.get("carrier"))? {
        Some(c) => dist.with_carrier(c),
        None => Ok(dist),
    }
}

#[derive(Serialize)]
struct DistDoc {
    version: u64,
    rig: String,
    weights: Vec<(Value, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    carrier: Option<Vec<Value>>,
}

pub fn dist_to_json<R: Rig>(p: &Dist<R>) -> String {
    let doc = DistDoc {
        version: FORMAT_VERSION,
        rig: p.rig().to_string(),
        weights: p.iter().map(|(k, w)| (k.to_json(), p.rig().format(w))).collect(),
        carrier: p.carrier().map(|c| c.iter().map(Element::to_json).collect()),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn read_fn<R: Rig>(rig: &R, v: &Value, mode: Mode) -> Result<TestFn<R>> {
    check_rig(rig, v)?;
    let obj = object(v)?;
    let rows = parse_rows(rig, array(obj, "fn")?)?;
    if mode == Mode::Strict {
        reject_duplicates(rows.iter().map(|(k, _)| k.clone()))?;
    }
    let phi = TestFn::from_pairs(rig, rows);
    if let Some(carrier) = parse_carrier(obj.get("carrier"))? {
        if let Some(k) = phi.iter().map(|(k, _)| k).find(|k| !carrier.contains(k)) {
            return Err(Error::CarrierMismatch(k.clone()));
        }
        if let Some(x) = carrier.iter().find(|x| phi.get(x).is_none()) {
            return Err(Error::MapIncomplete(x.clone()));
        }
    }
    Ok(phi)
}

#[derive(Serialize)]
struct FnDoc {
    version: u64,
    rig: String,
    #[serde(rename = "fn")]
    table: Vec<(Value, String)>,
    carrier: Vec<Value>,
}

pub fn fn_to_json<R: Rig>(phi: &TestFn<R>) -> String {
    let doc = FnDoc {
        version: FORMAT_VERSION,
        rig: phi.rig().to_string(),
        table: phi.iter().map(|(k, v)| (k.to_json(), phi.rig().format(v))).collect(),
        carrier: phi.carrier().iter().map(Element::to_json).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

/// A finite total map between element spaces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ElementMap {
    table: BTreeMap<Element, Element>,
}

impl ElementMap {
    pub fn new(pairs: impl IntoIterator<Item = (Element, Element)>) -> Self {
        ElementMap {
            table: pairs.into_iter().collect(),
        }
    }

    pub fn get(&self, x: &Element) -> Option<Element> {
        self.table.get(x).cloned()
    }

    /// Looks up the pair `(x, y)`, for binary maps.
    pub fn get2(&self, x: &Element, y: &Element) -> Option<Element> {
        self.get(&Element::pair(x.clone(), y.clone()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, &Element)> {
        self.table.iter()
    }
}

pub fn read_map(v: &Value) -> Result<ElementMap> {
    let obj = object(v)?;
    let rows = array(obj, "map")?
        .iter()
        .map(|row| {
            let (a, b) = json_row(row).ok_or_else(|| Error::Parse(format!("malformed row {row}")))?;
            Ok((Element::from_json(a)?, Element::from_json(b)?))
        })
        .collect::<Result<Vec<_>>>()?;
    reject_duplicates(rows.iter().map(|(k, _)| k.clone()))?;
    Ok(ElementMap::new(rows))
}

#[derive(Serialize)]
struct MapDoc {
    version: u64,
    map: Vec<(Value, Value)>,
}

pub fn map_to_json(m: &ElementMap) -> String {
    let doc = MapDoc {
        version: FORMAT_VERSION,
        map: m.iter().map(|(a, b)| (a.to_json(), b.to_json())).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

/// A scalar result, written as a JSON string.
pub fn scalar_to_json<R: Rig>(rig: &R, c: &R::Elem) -> String {
    Value::String(rig.format(c)).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rig::{Natural, Rational};

    #[test]
    fn dist_round_trip_is_canonical() {
        let text = r#"{"version":1,"rig":"rational","weights":[["b","2/4"],[["pair","a","c"],"1"],["a","-3"]]}"#;
        let v = parse_json(text).unwrap();
        let p = read_dist(&Rational, &v, Mode::Strict).unwrap();
        let out = dist_to_json(&p);
        assert_eq!(
            out,
            r#"{"version":1,"rig":"rational","weights":[["a","-3"],["b","1/2"],[["pair","a","c"],"1"]]}"#
        );
        let again = read_dist(&Rational, &parse_json(&out).unwrap(), Mode::Strict).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn strict_and_lenient_modes() {
        let dup = parse_json(r#"{"version":1,"rig":"nat","weights":[["a","1"],["a","2"],["b","0"]]}"#).unwrap();
        assert!(read_dist(&Natural, &dup, Mode::Strict).is_err());
        let p = read_dist(&Natural, &dup, Mode::Lenient).unwrap();
        assert_eq!(dist_to_json(&p), r#"{"version":1,"rig":"nat","weights":[["a","3"]]}"#);
    }

    #[test]
    fn wrong_rig_or_version() {
        let v = parse_json(r#"{"version":1,"rig":"nat","weights":[]}"#).unwrap();
        assert!(matches!(read_dist(&Rational, &v, Mode::Strict), Err(Error::RigMismatch { .. })));
        let v = parse_json(r#"{"version":2,"rig":"nat","weights":[]}"#).unwrap();
        assert!(matches!(read_dist(&Natural, &v, Mode::Strict), Err(Error::Parse(_))));
    }

    #[test]
    fn fn_documents() {
        let v = parse_json(r#"{"version":1,"rig":"rational","fn":[["a","1"],["b","0"]],"carrier":["a","b"]}"#).unwrap();
        let phi = read_fn(&Rational, &v, Mode::Strict).unwrap();
        assert_eq!(fn_to_json(&phi), r#"{"version":1,"rig":"rational","fn":[["a","1"],["b","0"]],"carrier":["a","b"]}"#);
        let partial = parse_json(r#"{"version":1,"rig":"rational","fn":[["a","1"]],"carrier":["a","b"]}"#).unwrap();
        assert_eq!(read_fn(&Rational, &partial, Mode::Strict).unwrap_err(), Error::MapIncomplete("b".into()));
    }

    #[test]
    fn map_documents() {
        let v = parse_json(r#"{"version":1,"map":[["b","y"],["a","x"]]}"#).unwrap();
        let m = read_map(&v).unwrap();
        assert_eq!(m.get(&"a".into()), Some("x".into()));
        assert_eq!(map_to_json(&m), r#"{"version":1,"map":[["a","x"],["b","y"]]}"#);
        let dup = parse_json(r#"{"version":1,"map":[["a","x"],["a","y"]]}"#).unwrap();
        assert!(read_map(&dup).is_err());
    }
}
