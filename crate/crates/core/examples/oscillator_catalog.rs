//! The named oscillators and their equivalent commutators.

use qoscil::deform::{
    arik_coon, bem, calogero_vasiliev, chakrabarti_jagannathan, macfarlane_biedenharn, qcv,
    QcvParams, QcvSign,
};
use qoscil::exact::{frac, rat};

pub fn run_example() -> qoscil::Result<()> {
    let q = rat(2);
    let qcv_params = QcvParams::from_nu(q.clone(), &frac(1, 2), QcvSign::Upper)?;
    let catalog = [
        arik_coon(&q)?,
        macfarlane_biedenharn(&q)?,
        chakrabarti_jagannathan(&frac(1, 3), &q)?,
        calogero_vasiliev(&frac(1, 4))?,
        bem(&frac(1, 4), &q)?,
        qcv(&qcv_params, &q),
    ];
    for osc in &catalog {
        println!("{}", osc.name);
        println!("  [a, a†]_{} = {}", osc.deformation, osc.quommutator_rhs);
        println!("  [a, a†]   = {}", osc.commutator);
        let values: Vec<String> = osc.structure.table(0..6).iter().map(|v| v.to_string()).collect();
        println!("  F         = {}", values.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oscillator catalog");
}
