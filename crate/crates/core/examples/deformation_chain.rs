//! Iterating the minimal deformation from the undeformed oscillator and from
//! a linear start.

use qoscil::deform::{chain, coefficients::linear_first_step, polynomial_start};
use qoscil::exact::{frac, rat};
use qoscil::ExpPoly;

pub fn run_example() -> qoscil::Result<()> {
    let c = chain(&ExpPoly::one(), &[rat(2), frac(1, 2), rat(3)])?;
    for (j, step) in c.steps().iter().enumerate() {
        println!("step {} (q = {}):", j + 1, step.param);
        println!("  f = {}", step.commutator);
        println!("  F = {}", step.structure);
    }

    // f_0 = a00 + a01 n deforms into α10 + α11 q1^n
    let (a00, a01, q1) = (rat(3), rat(1), frac(1, 3));
    let lin = polynomial_start(&[a00.clone(), a01.clone()], &[q1.clone()])?;
    let (alpha10, alpha11) = linear_first_step(&a00, &a01, &q1)?;
    println!("linear start: f_1 = {}", lin.last_commutator());
    println!("closed form : {alpha10} + {alpha11}*q1^n");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("deformation chain");
}
