//! Min-plus weights turn bind into path relaxation: after k rounds the
//! weight at each node is the cheapest route using at most k edges.
//!
//! Run with `cargo run --example shortest_paths`.

use std::collections::BTreeMap;

use rigdist::{Dist, Element, MinPlus, Rig, Tropical};

fn main() {
    let rig = MinPlus;
    let edges: BTreeMap<&str, Vec<(&str, i64)>> = BTreeMap::from([
        ("s", vec![("a", 4), ("b", 1)]),
        ("a", vec![("t", 1)]),
        ("b", vec![("a", 2), ("t", 6)]),
        ("t", vec![]),
    ]);

    // Staying put costs nothing, so each round keeps the best so far.
    let step = |node: &Element| {
        let name = node.as_atom()?;
        let mut out = vec![(node.clone(), rig.one())];
        for (to, cost) in &edges[name] {
            out.push((Element::atom(*to), Tropical::finite(*cost)));
        }
        Some(Dist::from_weights(&rig, out))
    };

    let mut reach = Dist::dirac(&rig, Element::atom("s"));
    for round in 1..=3 {
        reach = reach.bind(step).unwrap();
        let costs: Vec<String> = reach.iter().map(|(k, w)| format!("{}={}", k.as_atom().unwrap(), rig.format(w))).collect();
        println!("round {round}: {}", costs.join(" "));
    }
    assert_eq!(reach.weight(&Element::atom("t")), Tropical::finite(4));
    println!("cheapest s -> t: {}", rig.format(&reach.weight(&Element::atom("t"))));
}
