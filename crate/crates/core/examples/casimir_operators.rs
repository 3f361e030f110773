//! Casimir operators of the commutator and quommutator forms.

use std::sync::Arc;

use qoscil::casimir::{
    casimir_commutator, casimir_quommutator, verify_casimir_relation, verify_centrality,
};
use qoscil::deform::chain;
use qoscil::exact::{frac, rat};
use qoscil::opalg::FockWindow;
use qoscil::ExpPoly;

pub fn run_example() -> qoscil::Result<()> {
    let c = chain(&ExpPoly::one(), &[rat(2), frac(1, 2), rat(-3)])?;
    for j in 0..c.depth() {
        let pair = casimir_quommutator(c.commutator(j).unwrap(), &c.steps()[j].param)?;
        println!("step {j}: μ = {}, ν = {}", pair.mu, pair.nu);
        println!("  recurrences hold: {}", pair.recurrences_hold(c.commutator(j).unwrap()));
        println!("  C̃ = q^-n C_next : {}", verify_casimir_relation(&c, j, 16)?.complete());
        println!("  μ at offset 1   : {}", pair.offset_value(1));
    }

    let structure = c.last_structure();
    let window = Arc::new(FockWindow::from_structure(&structure, 16)?);
    let casimir = casimir_commutator(&structure, &window)?;
    println!("C = F(n) - a†a central and zero: {}", verify_centrality(&casimir)?.complete());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("casimir operators");
}
