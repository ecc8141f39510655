//! The coefficient rigs and a brute-force check of their axioms.
//!
//! Run with `cargo run --example rigs`.

use rigdist::rig::{check_rig_axioms, Budget};
use rigdist::{Boolean, Mat2Nat, MinPlus, Modular, Natural, Rational, Rig};

fn show<R: Rig>(rig: &R, samples: &[&str]) {
    let parsed: Vec<R::Elem> = samples.iter().map(|s| rig.parse(s).unwrap()).collect();
    let sum = parsed.iter().fold(rig.zero(), |acc, x| rig.add(&acc, x));
    let product = parsed.iter().fold(rig.one(), |acc, x| rig.mul(&acc, x));
    println!(
        "{rig}: zero={} one={} sum{samples:?}={} product={} commutative={}",
        rig.format(&rig.zero()),
        rig.format(&rig.one()),
        rig.format(&sum),
        rig.format(&product),
        rig.is_commutative()
    );
    let violations = check_rig_axioms(rig, Budget::Exhaustive, 0);
    for v in &violations {
        println!("  violates {} at {:?}", v.axiom, v.witness);
    }
}

fn main() {
    show(&Natural, &["2", "3", "4"]);
    show(&Rational, &["1/2", "-2/3", "3"]);
    show(&Boolean, &["true", "false"]);
    show(&MinPlus, &["3", "1/2", "inf"]);
    show(&Modular::new(5), &["3", "4"]);
    show(&Mat2Nat::new(1), &["[[1,1],[0,0]]", "[[0,0],[1,0]]"]);

    let rational = Rational;
    let half = rational.parse("1/2").unwrap();
    println!("inverse of 1/2 in rational: {:?}", rational.try_invert(&half).map(|x| rational.format(&x)));
    let m5 = Modular::new(5);
    println!("inverse of 3 in mod:5: {:?}", m5.try_invert(&3).map(|x| m5.format(&x)));
    println!("inverse of 2 in nat: {:?}", Natural.try_invert(&2u32.into()));
}
