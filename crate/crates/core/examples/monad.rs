//! Unit, pushforward and flattening, and the monad laws they satisfy.
//!
//! Run with `cargo run --example monad`.

use rigdist::{Dist, Element, Natural, Rational};

fn main() {
    // Multisets are distributions with natural-number weights.
    let bag = Dist::parse_weights(&Natural, [("apple", "2"), ("pear", "1"), ("plum", "3")]).unwrap();
    let colour = |fruit: &Element| {
        Some(Element::atom(match fruit.as_atom()? {
            "apple" | "plum" => "red",
            _ => "green",
        }))
    };
    println!("bag          {bag:?}");
    println!("by colour    {:?}", bag.pushforward(colour).unwrap());
    println!("size         {}", bag.total());

    // A distribution over distributions flattens to a mixture.
    let fair = Dist::parse_weights(&Rational, [("h", "1/2"), ("t", "1/2")]).unwrap();
    let biased = Dist::parse_weights(&Rational, [("h", "9/10"), ("t", "1/10")]).unwrap();
    let which = Dist::from_weights(
        &Rational,
        [
            (fair.to_element(), "2/3".parse().unwrap()),
            (biased.to_element(), "1/3".parse().unwrap()),
        ],
    );
    println!("mixture      {:?}", which.flatten().unwrap());

    // The same mixture by bind: pick a coin, then toss it.
    let coin = Dist::parse_weights(&Rational, [("fair", "2/3"), ("biased", "1/3")]).unwrap();
    let tossed = coin
        .bind(|c| match c.as_atom()? {
            "fair" => Some(fair.clone()),
            _ => Some(biased.clone()),
        })
        .unwrap();
    println!("by bind      {tossed:?}");
    assert_eq!(tossed, which.flatten().unwrap());

    // Unit laws.
    assert_eq!(Dist::dirac(&Rational, fair.to_element()).flatten().unwrap(), fair);
    assert_eq!(fair.bind(|x| Some(Dist::dirac(&Rational, x.clone()))).unwrap(), fair);
    println!("unit laws hold");
}
