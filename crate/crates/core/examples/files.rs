//! Reading and writing the JSON documents the command line uses.
//!
//! Run with `cargo run --example files`.

use rigdist::format::{dist_to_json, fn_to_json, map_to_json, parse_json, read_dist, read_fn, read_map, Mode};
use rigdist::integration::integrate;
use rigdist::Rational;

fn main() {
    let messy = r#"{"version":1,"rig":"rational","weights":[["b","2/4"],["a","1/4"],["a","1/4"],["c","0"]]}"#;
    let v = parse_json(messy).unwrap();
    println!("strict read:  {:?}", read_dist(&Rational, &v, Mode::Strict).unwrap_err().to_string());
    let p = read_dist(&Rational, &v, Mode::Lenient).unwrap();
    println!("canonical:    {}", dist_to_json(&p));

    let f = parse_json(r#"{"version":1,"rig":"rational","fn":[["a","2"],["b","4"]],"carrier":["a","b"]}"#).unwrap();
    let phi = read_fn(&Rational, &f, Mode::Strict).unwrap();
    println!("fn:           {}", fn_to_json(&phi));
    println!("integral:     {}", integrate(&p, &phi).unwrap());

    let m = read_map(&parse_json(r#"{"version":1,"map":[["b","y"],["a","x"]]}"#).unwrap()).unwrap();
    println!("map:          {}", map_to_json(&m));
    println!("pushed:       {}", dist_to_json(&p.pushforward(|k| m.get(k)).unwrap()));
}
