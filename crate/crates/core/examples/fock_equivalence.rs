//! A quommutator and its equivalent commutator agree exactly on a truncated
//! Fock space.

use std::sync::Arc;

use qoscil::deform::chain;
use qoscil::exact::{frac, rat};
use qoscil::opalg::{FockWindow, Operator};
use qoscil::ExpPoly;

pub fn run_example() -> qoscil::Result<()> {
    let c = chain(&ExpPoly::one(), &[rat(2), frac(-1, 3)])?;
    let last = &c.steps()[1];
    let window = Arc::new(FockWindow::from_structure(&last.structure, 16)?);
    let a = Operator::annihilation(&window);
    let ad = Operator::creation(&window);

    let deformed = a.quommutator(&ad, &last.param)?;
    let v = deformed.verify_eq(&Operator::diag(&window, c.commutator(1).unwrap()))?;
    println!("[a, a†]_q2 = f_1 : holds = {}, entries = {}", v.complete(), v.checked);

    let plain = a.commutator(&ad)?;
    let v = plain.verify_eq(&Operator::diag(&window, &last.commutator))?;
    println!("[a, a†]    = f_2 : holds = {}, entries = {}", v.complete(), v.checked);

    // a deliberately wrong right-hand side reports a witness
    let v = plain.verify_eq(&Operator::diag(&window, &ExpPoly::exp(rat(2))))?;
    if let Some(d) = v.discrepancy {
        println!("[a, a†]    = 2^n : fails, {d}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fock equivalence");
}
