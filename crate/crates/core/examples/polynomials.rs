//! Convolution along addition multiplies polynomials: a natural-weighted
//! distribution on exponents is a polynomial.
//!
//! Run with `cargo run --example polynomials`.

use rigdist::integration::{convolve, natural_sum};
use rigdist::{Dist, Element, Natural};

fn poly(coeffs: &[u32]) -> Dist<Natural> {
    Dist::from_weights(
        &Natural,
        coeffs.iter().enumerate().map(|(i, c)| (Element::atom(i.to_string()), (*c).into())),
    )
}

fn render(p: &Dist<Natural>) -> String {
    let mut terms: Vec<(usize, String)> = p
        .iter()
        .map(|(k, c)| (k.as_atom().unwrap().parse().unwrap(), c.to_string()))
        .collect();
    terms.sort();
    let shown: Vec<String> = terms
        .into_iter()
        .map(|(e, c)| match e {
            0 => c,
            1 => format!("{c}x"),
            _ => format!("{c}x^{e}"),
        })
        .collect();
    shown.join(" + ")
}

fn main() {
    let one_plus_x = poly(&[1, 1]);
    let mut power = poly(&[1]);
    for n in 1..=5 {
        power = convolve(&power, &one_plus_x, natural_sum).unwrap();
        println!("(1 + x)^{n} = {}", render(&power));
    }

    let a = poly(&[3, 0, 2]);
    let b = poly(&[1, 4]);
    println!("({}) * ({}) = {}", render(&a), render(&b), render(&convolve(&a, &b, natural_sum).unwrap()));
}
