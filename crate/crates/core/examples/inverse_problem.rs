//! Recasting a commutator as the simplest equivalent quommutator.

use qoscil::exact::{frac, rat};
use qoscil::inverse::{simplest_q, to_unit_quommutator};
use qoscil::ExpPoly;

pub fn run_example() -> qoscil::Result<()> {
    let beta = to_unit_quommutator(&ExpPoly::exp(rat(3)), 8)?;
    println!("[a, a†] = 3^n  is  a a† - {} a† a = 1", beta.as_constant().unwrap());

    // Calogero-Vasiliev: 1 + 2ν(-1)^n becomes an anticommutator
    let nu = frac(3, 2);
    let cv = ExpPoly::one() + ExpPoly::exp(rat(-1)).scale(&(rat(2) * &nu));
    for c in simplest_q(&cv) {
        println!("φ = {cv}: Q = {}, Φ = {}", c.q, c.phi);
    }

    let two = ExpPoly::exp(rat(2)).scale(&frac(2, 3)) + ExpPoly::exp(frac(1, 2)).scale(&frac(1, 3));
    for c in simplest_q(&two) {
        println!("φ = {two}: Q = {}, Φ = {} (complexity {})", c.q, c.phi, c.phi.complexity());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("inverse problem");
}
