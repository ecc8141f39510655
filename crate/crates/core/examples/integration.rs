//! Integration against test functions and the action of functions on
//! distributions.
//!
//! Run with `cargo run --example integration`.

use rigdist::integration::{act, act_via_strength, integrate, integrate_via_monad, ScalarMonoid};
use rigdist::{Dist, FinSpace, Rational, Rig, TestFn};

fn main() {
    let rooms = FinSpace::atoms(&["hall", "kitchen", "study"]);
    let people = Dist::parse_weights(&Rational, [("hall", "3"), ("kitchen", "2"), ("study", "1")]).unwrap();
    let heat = TestFn::parse_pairs(&Rational, [("hall", "1/2"), ("kitchen", "2"), ("study", "1")]).unwrap();

    let total = integrate(&people, &heat).unwrap();
    println!("integral          {total}");
    assert_eq!(total, integrate_via_monad(&people, &heat).unwrap());

    let weighted = act(&people, &heat).unwrap();
    println!("P |- phi          {weighted:?}");
    assert_eq!(weighted, act_via_strength(&people, &heat).unwrap());
    assert_eq!(weighted.total(), total);

    // Acting twice is acting by the product.
    let bonus = TestFn::constant(&Rational, &rooms, "3/2".parse().unwrap());
    let twice = act(&weighted, &bonus).unwrap();
    assert_eq!(twice, act(&people, &heat.mul(&bonus).unwrap()).unwrap());
    println!("(P |- phi) |- 3/2 {twice:?}");

    let indicator = TestFn::indicator(&Rational, &rooms, |r| r.as_atom() != Some("study"));
    println!("mass off study    {}", integrate(&people, &indicator).unwrap());

    let m = ScalarMonoid::new(&Rational);
    let (a, b) = (Rational.parse("2/3").unwrap(), Rational.parse("-3").unwrap());
    println!("scalar product    {} = {} = {}", m.mul(&a, &b), m.mul_via_psi(&a, &b), m.mul_via_strength(&a, &b));
}
