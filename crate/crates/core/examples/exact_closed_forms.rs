//! Exponential polynomials: closed-form sums and partial-fraction weights.

use qoscil::exact::{frac, omega, rat, residue_sum};
use qoscil::{ExpPoly, WeightVector};

pub fn run_example() -> qoscil::Result<()> {
    // n 2^n + (-1)^n
    let e = ExpPoly::monomial(rat(1), 1, rat(2)) + ExpPoly::exp(rat(-1));
    let s = e.prefix_sum();
    println!("f(n)            = {e}");
    println!("Σ_{{i<n}} f(i)    = {s}");
    assert_eq!(s.difference(), e);
    println!("first values    = {:?}", s.table(0..6).iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let params = [rat(2), frac(1, 2), rat(-3)];
    let w = WeightVector::new(&params)?;
    for (i, q) in params.iter().enumerate() {
        println!("ω_{} (q = {q}) = {}", i + 1, omega(&params, i)?);
    }
    println!("Σ ω = {}", w.total());
    for ell in 0..3 {
        println!("residue sum at ℓ = {ell}: {}", residue_sum(&params, ell)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact closed forms");
}
