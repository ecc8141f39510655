//! Coefficient rigs (commutative semirings, plus one deliberately
//! noncommutative matrix semiring).
//!
//! A [`Rig`] is a value, not just a type: `Modular` and `Mat2` carry their
//! modulus / saturation cap at runtime so that rig names read from files
//! (`"mod:3"`, `"mat2:1"`) map onto instances directly.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub trait Rig: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Canonical text form, e.g. `"1/2"`, `"inf"`, `"[[1,0],[0,1]]"`.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, text: &str) -> Result<Self::Elem>;

    fn is_commutative(&self) -> bool {
        true
    }

    /// Every coefficient, when the carrier is finite.
    fn enumerate(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn try_invert(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Finite pool used for seeded sampling. Enumerable rigs return
    /// everything; the others return a small grid of exact values.
    fn sample_grid(&self) -> Vec<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

fn parse_err(rig: &dyn fmt::Display, text: &str) -> Error {
    Error::Parse(format!("{text:?} is not a {rig} coefficient"))
}

/// Natural numbers under `+` and `*`; the free commutative monoid rig.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Natural;

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("nat")
    }
}

impl Rig for Natural {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn format(&self, a: &BigUint) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<BigUint> {
        let t = text.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(self, text));
        }
        t.parse().map_err(|_| parse_err(self, text))
    }
    fn try_invert(&self, a: &BigUint) -> Option<BigUint> {
        a.is_one().then(BigUint::one)
    }
    fn sample_grid(&self) -> Vec<BigUint> {
        (0u32..=3).map(BigUint::from).collect()
    }
}

/// The field of rationals, exact and arbitrary precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rational;

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("rational")
    }
}

pub(crate) fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Numerators in -3..=3 over denominators 1..=3, deduplicated and sorted.
fn small_rational_grid(nonnegative: bool) -> Vec<BigRational> {
    let lo = if nonnegative { 0 } else { -3 };
    let mut grid: Vec<BigRational> = (lo..=3i64)
        .flat_map(|n| (1..=3i64).map(move |d| BigRational::new(n.into(), d.into())))
        .collect();
    grid.sort();
    grid.dedup();
    grid
}

impl Rig for Rational {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<BigRational> {
        parse_rational(text).ok_or_else(|| parse_err(self, text))
    }
    fn try_invert(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn sample_grid(&self) -> Vec<BigRational> {
        small_rational_grid(false)
    }
}

/// Booleans under `or` / `and`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Boolean;

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("bool")
    }
}

impl Rig for Boolean {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn format(&self, a: &bool) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<bool> {
        match text.trim() {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(parse_err(self, text)),
        }
    }
    fn enumerate(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
    fn try_invert(&self, a: &bool) -> Option<bool> {
        a.then_some(true)
    }
    fn sample_grid(&self) -> Vec<bool> {
        vec![false, true]
    }
}

/// A tropical weight: a nonnegative rational or `+inf`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tropical {
    Finite(BigRational),
    Infinity,
}

impl Tropical {
    pub fn finite(n: i64) -> Self {
        Tropical::Finite(BigRational::from_integer(n.into()))
    }
}

/// Min-plus rig over nonnegative rationals: `add = min`, `mul = +`,
/// zero is `+inf` and one is `0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MinPlus;

impl fmt::Display for MinPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tropical")
    }
}

impl Rig for MinPlus {
    type Elem = Tropical;

    fn zero(&self) -> Tropical {
        Tropical::Infinity
    }
    fn one(&self) -> Tropical {
        Tropical::Finite(BigRational::zero())
    }
    fn add(&self, a: &Tropical, b: &Tropical) -> Tropical {
        a.min(b).clone()
    }
    fn mul(&self, a: &Tropical, b: &Tropical) -> Tropical {
        match (a, b) {
            (Tropical::Finite(x), Tropical::Finite(y)) => Tropical::Finite(x + y),
            _ => Tropical::Infinity,
        }
    }
    fn format(&self, a: &Tropical) -> String {
        match a {
            Tropical::Finite(x) => x.to_string(),
            Tropical::Infinity => "inf".to_string(),
        }
    }
    fn parse(&self, text: &str) -> Result<Tropical> {
        if text.trim() == "inf" {
            return Ok(Tropical::Infinity);
        }
        match parse_rational(text) {
            Some(x) if !x.is_negative() => Ok(Tropical::Finite(x)),
            _ => Err(parse_err(self, text)),
        }
    }
    fn try_invert(&self, a: &Tropical) -> Option<Tropical> {
        (*a == self.one()).then(|| self.one())
    }
    fn sample_grid(&self) -> Vec<Tropical> {
        let mut grid: Vec<Tropical> = small_rational_grid(true)
            .into_iter()
            .map(Tropical::Finite)
            .collect();
        grid.push(Tropical::Infinity);
        grid
    }
}

/// Integers modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modular {
    modulus: u64,
}

impl Modular {
    /// Panics if `modulus < 2`.
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2, got {modulus}");
        Modular { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl fmt::Display for Modular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod:{}", self.modulus)
    }
}

impl Rig for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<u64> {
        match text.trim().parse::<u64>() {
            Ok(v) if v < self.modulus => Ok(v),
            _ => Err(parse_err(self, text)),
        }
    }
    fn enumerate(&self) -> Option<Vec<u64>> {
        Some((0..self.modulus).collect())
    }
    fn try_invert(&self, a: &u64) -> Option<u64> {
        let ext = BigInt::from(*a).extended_gcd(&BigInt::from(self.modulus));
        if !ext.gcd.is_one() {
            return None;
        }
        let inv = ext.x.mod_floor(&BigInt::from(self.modulus));
        u64::try_from(inv).ok()
    }
    fn sample_grid(&self) -> Vec<u64> {
        (0..self.modulus).collect()
    }
}

/// A 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2(pub [[u64; 2]; 2]);

/// 2x2 matrices over the naturals truncated at `cap` (sums and products
/// saturate at `cap`). Noncommutative, finite, and used only to exhibit
/// laws that need a commutative rig.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2Nat {
    cap: u64,
}

impl Mat2Nat {
    /// Panics if `cap == 0`.
    pub fn new(cap: u64) -> Self {
        assert!(cap >= 1, "matrix entry cap must be at least 1");
        Mat2Nat { cap }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn clamp(&self, v: u64) -> u64 {
        v.min(self.cap)
    }
}

impl fmt::Display for Mat2Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mat2:{}", self.cap)
    }
}

impl Rig for Mat2Nat {
    type Elem = Mat2;

    fn zero(&self) -> Mat2 {
        Mat2([[0, 0], [0, 0]])
    }
    fn one(&self) -> Mat2 {
        Mat2([[1, 0], [0, 1]])
    }
    fn add(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.clamp(a.0[i][j].saturating_add(b.0[i][j]));
            }
        }
        Mat2(out)
    }
    fn mul(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let s = (0..2).fold(0u64, |acc, k| {
                    acc.saturating_add(a.0[i][k].saturating_mul(b.0[k][j]))
                });
                *cell = self.clamp(s);
            }
        }
        Mat2(out)
    }
    fn format(&self, a: &Mat2) -> String {
        let m = a.0;
        format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
    fn parse(&self, text: &str) -> Result<Mat2> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| parse_err(self, text))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(parse_err(self, text));
        }
        let mut out = [[0u64; 2]; 2];
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(parse_err(self, text));
            }
            for (j, cell) in cells.iter().enumerate() {
                match cell.parse::<u64>() {
                    Ok(v) if v <= self.cap => out[i][j] = v,
                    _ => return Err(parse_err(self, text)),
                }
            }
        }
        Ok(Mat2(out))
    }
    fn is_commutative(&self) -> bool {
        false
    }
    fn enumerate(&self) -> Option<Vec<Mat2>> {
        let vals = 0..=self.cap;
        let mut out = Vec::new();
        for a in vals.clone() {
            for b in vals.clone() {
                for c in vals.clone() {
                    for d in vals.clone() {
                        out.push(Mat2([[a, b], [c, d]]));
                    }
                }
            }
        }
        Some(out)
    }
    fn try_invert(&self, a: &Mat2) -> Option<Mat2> {
        // Over a saturating natural semiring only permutation matrices
        // are units.
        let swap = Mat2([[0, 1], [1, 0]]);
        (*a == self.one() || *a == swap).then_some(*a)
    }
    fn sample_grid(&self) -> Vec<Mat2> {
        self.enumerate().unwrap_or_default()
    }
}

/// A rig named in a file or on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigName {
    Natural,
    Rational,
    Boolean,
    Tropical,
    Modular(u64),
    Mat2(u64),
}

impl FromStr for RigName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown rig {s:?}"));
        match s {
            "nat" => Ok(RigName::Natural),
            "rational" => Ok(RigName::Rational),
            "bool" => Ok(RigName::Boolean),
            "tropical" => Ok(RigName::Tropical),
            _ => {
                let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
                let n: u64 = arg.parse().map_err(|_| bad())?;
                match kind {
                    "mod" if n >= 2 => Ok(RigName::Modular(n)),
                    "mat2" if n >= 1 => Ok(RigName::Mat2(n)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl fmt::Display for RigName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigName::Natural => f.write_str("nat"),
            RigName::Rational => f.write_str("rational"),
            RigName::Boolean => f.write_str("bool"),
            RigName::Tropical => f.write_str("tropical"),
            RigName::Modular(n) => write!(f, "mod:{n}"),
            RigName::Mat2(c) => write!(f, "mat2:{c}"),
        }
    }
}

/// Runs `$body` with `$rig` bound to the concrete instance named by
/// `$name`. Every arm must produce the same type.
#[macro_export]
macro_rules! with_rig {
    ($name:expr, |$rig:ident| $body:expr) => {
        match $name {
            $crate::rig::RigName::Natural => {
                let $rig = $crate::rig::Natural;
                $body
            }
            $crate::rig::RigName::Rational => {
                let $rig = $crate::rig::Rational;
                $body
            }
            $crate::rig::RigName::Boolean => {
                let $rig = $crate::rig::Boolean;
                $body
            }
            $crate::rig::RigName::Tropical => {
                let $rig = $crate::rig::MinPlus;
                $body
            }
            $crate::rig::RigName::Modular(n) => {
                let $rig = $crate::rig::Modular::new(n);
                $body
            }
            $crate::rig::RigName::Mat2(c) => {
                let $rig = $crate::rig::Mat2Nat::new(c);
                $body
            }
        }
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    /// Every triple of coefficients, when the rig is enumerable and small
    /// enough; otherwise falls back to 1000 samples.
    Exhaustive,
    Sampled(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub witness: Vec<String>,
}

const EXHAUSTIVE_TRIPLES: usize = 1_000_000;

/// Checks the rig axioms on triples of coefficients, reporting at most one
/// witness per failed axiom. Multiplicative commutativity is always
/// checked, so noncommutative instances report it.
pub fn check_rig_axioms<R: Rig>(rig: &R, budget: Budget, seed: u64) -> Vec<AxiomViolation> {
    let triples: Vec<[R::Elem; 3]> = match (budget, rig.enumerate()) {
        (Budget::Exhaustive, Some(all)) if all.len().pow(3) <= EXHAUSTIVE_TRIPLES => {
            let mut v = Vec::with_capacity(all.len().pow(3));
            for a in &all {
                for b in &all {
                    for c in &all {
                        v.push([a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
            v
        }
        (budget, _) => {
            let n = match budget {
                Budget::Sampled(n) => n.max(1),
                Budget::Exhaustive => 1000,
            };
            let grid = rig.sample_grid();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pick = || grid[rng.random_range(0..grid.len())].clone();
            (0..n).map(|_| [pick(), pick(), pick()]).collect()
        }
    };

    let mut found: Vec<AxiomViolation> = Vec::new();
    let mut report = |axiom: &'static str, witness: &[&R::Elem]| {
        if !found.iter().any(|v| v.axiom == axiom) {
            found.push(AxiomViolation {
                axiom,
                witness: witness.iter().map(|w| rig.format(w)).collect(),
            });
        }
    };
    let (zero, one) = (rig.zero(), rig.one());
    for [a, b, c] in &triples {
        let add = |x: &R::Elem, y: &R::Elem| rig.add(x, y);
        let mul = |x: &R::Elem, y: &R::Elem| rig.mul(x, y);
        if add(&add(a, b), c) != add(a, &add(b, c)) {
            report("add_associative", &[a, b, c]);
        }
        if add(a, b) != add(b, a) {
            report("add_commutative", &[a, b]);
        }
        if add(a, &zero) != *a {
            report("add_unit", &[a]);
        }
        if mul(&mul(a, b), c) != mul(a, &mul(b, c)) {
            report("mul_associative", &[a, b, c]);
        }
        if mul(a, &one) != *a || mul(&one, a) != *a {
            report("mul_unit", &[a]);
        }
        if mul(a, &add(b, c)) != add(&mul(a, b), &mul(a, c)) {
            report("distributive_left", &[a, b, c]);
        }
        if mul(&add(a, b), c) != add(&mul(a, c), &mul(b, c)) {
            report("distributive_right", &[a, b, c]);
        }
        if mul(a, &zero) != zero || mul(&zero, a) != zero {
            report("annihilation", &[a]);
        }
        if mul(a, b) != mul(b, a) {
            report("mul_commutative", &[a, b]);
        }
        if let Some(inv) = rig.try_invert(a) {
            if mul(a, &inv) != one {
                report("inverse", &[a, &inv]);
            }
        }
    }
    found
}
