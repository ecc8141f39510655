//! Distributions as linear functionals on test functions.
//!
//! Run with `cargo run --example functionals`.

use rigdist::schwartz::{
    check_functional_linearity, dirac_functional, expectation_via_ev_id, functional_psi, quadratic_functional, tau,
};
use rigdist::strength::psi;
use rigdist::{Dist, Element, FinSpace, Modular, Rational, TestFn};

fn main() {
    let x = FinSpace::atoms(&["a", "b"]);
    let p = Dist::parse_weights(&Rational, [("a", "1/4"), ("b", "3/4")]).unwrap();
    let f = tau(&p, &x).unwrap();
    let phi = TestFn::parse_pairs(&Rational, [("a", "4"), ("b", "-1")]).unwrap();
    println!("tau(p)(phi)                = {}", f.eval(&phi).unwrap());
    println!("tau(p) linear              = {}", check_functional_linearity(&f));

    let at_a = Element::atom("a");
    let delta = dirac_functional(&Rational, &at_a, &x).unwrap();
    let unit = tau(&Dist::dirac(&Rational, at_a.clone()), &x).unwrap();
    println!("tau(dirac a) = delta_a     = {}", unit.extensionally_equal(&delta));

    let square = quadratic_functional(&Rational, &at_a, &x);
    println!("phi -> phi(a)^2 linear     = {}", check_functional_linearity(&square));
    let square3 = quadratic_functional(&Modular::new(3), &at_a, &x);
    println!("  ... over mod:3           = {}", check_functional_linearity(&square3));

    // Tensor of functionals agrees with the functional of the tensor.
    let y = FinSpace::atoms(&["u", "v"]);
    let q = Dist::parse_weights(&Rational, [("u", "2"), ("v", "-1/2")]).unwrap();
    let g = tau(&q, &y).unwrap();
    let both = functional_psi(&f, &g).unwrap();
    let joint = tau(&psi(&p, &q).unwrap(), &x.product(&y)).unwrap();
    println!("psi(tau p, tau q) = tau psi = {}", both.extensionally_equal(&joint));

    let scores = Dist::parse_weights(&Rational, [("1", "1/2"), ("5", "1/2")]).unwrap();
    println!("expectation via ev_id      = {}", expectation_via_ev_id(&scores).unwrap());
}
