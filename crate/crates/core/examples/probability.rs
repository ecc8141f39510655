//! Two dice: marginals, expectations, conditioning.
//!
//! Run with `cargo run --example probability`.

use rigdist::integration::{convolve, integrate};
use rigdist::probability::{condition, expectation, expectation_of_sum, is_probability, marginals, moment};
use rigdist::strength::psi;
use rigdist::{Dist, Element, FinSpace, Rational, TestFn};

fn die() -> Dist<Rational> {
    Dist::parse_weights(&Rational, (1..=6).map(|i| (Element::atom(i.to_string()), "1/6"))).unwrap()
}

fn main() {
    let d = die();
    println!("E(die) = {}, E(die^2) = {}", expectation(&d).unwrap(), moment(&d, 2).unwrap());

    let pair = psi(&d, &d).unwrap();
    assert!(is_probability(&pair));
    let (first, second) = marginals(&pair).unwrap();
    assert_eq!((first, second), (d.clone(), d.clone()));

    let (lhs, rhs) = expectation_of_sum(&pair).unwrap();
    println!("E(X + Y) = {lhs} = E(X) + E(Y) = {rhs}");

    let sum = convolve(&d, &d, |a, b| {
        let (a, b): (u32, u32) = (a.as_atom()?.parse().ok()?, b.as_atom()?.parse().ok()?);
        Some(Element::atom((a + b).to_string()))
    })
    .unwrap();
    let totals = FinSpace::new((2..=12).map(|i| Element::atom(i.to_string())));
    println!("P(sum = 7) = {}", sum.weight(&"7".into()));

    // Given the sum is at least 10, how likely is a double?
    let high = TestFn::indicator(&Rational, &FinSpace::new(pair.support().cloned()), |k| {
        let (a, b) = k.as_pair().unwrap();
        let (a, b): (u32, u32) = (a.as_atom().unwrap().parse().unwrap(), b.as_atom().unwrap().parse().unwrap());
        a + b >= 10
    });
    let given = condition(&pair, &high).unwrap();
    let doubles = TestFn::indicator(&Rational, &FinSpace::new(given.support().cloned()), |k| {
        let (a, b) = k.as_pair().unwrap();
        a == b
    });
    println!("P(double | sum >= 10) = {}", integrate(&given, &doubles).unwrap());

    let seven_or_more = TestFn::indicator(&Rational, &totals, |k| k.as_atom().unwrap().parse::<u32>().unwrap() >= 7);
    println!("P(sum >= 7) = {}", integrate(&sum, &seven_or_more).unwrap());
}
