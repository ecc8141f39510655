//! Strengths and the two tensor products, which only agree when the rig
//! is commutative.
//!
//! Run with `cargo run --example tensor`.

use rigdist::strength::{psi, psi_tilde, psi_via_strength, strength_left, strength_right};
use rigdist::{Dist, Element, Mat2Nat, Rational};

fn main() {
    let p = Dist::parse_weights(&Rational, [("a", "1/3"), ("b", "2/3")]).unwrap();
    let q = Dist::parse_weights(&Rational, [("c", "1/4"), ("d", "3/4")]).unwrap();

    println!("t'(p, y)   {:?}", strength_left(&p, &Element::atom("y")));
    println!("t''(x, q)  {:?}", strength_right(&Element::atom("x"), &q));

    let joint = psi(&p, &q).unwrap();
    println!("psi(p, q)  {joint:?}");
    assert_eq!(joint, psi_tilde(&p, &q).unwrap());
    assert_eq!(joint, psi_via_strength(&p, &q).unwrap());
    println!("rational: psi = psi~ = mu . T(t'') . t'");

    // 2x2 matrices over {0, 1} (saturating): multiplication does not commute.
    let m = Mat2Nat::new(1);
    let a = Dist::parse_weights(&m, [("x", "[[1,1],[0,0]]")]).unwrap();
    let b = Dist::parse_weights(&m, [("y", "[[0,0],[1,0]]")]).unwrap();
    println!("mat2:1 psi(a, b)   {:?}", psi(&a, &b).unwrap());
    println!("mat2:1 psi~(a, b)  {:?}", psi_tilde(&a, &b).unwrap());
    assert_ne!(psi(&a, &b).unwrap(), psi_tilde(&a, &b).unwrap());
}
