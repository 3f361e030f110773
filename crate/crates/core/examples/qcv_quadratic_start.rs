//! The q-deformed Calogero-Vasiliev oscillator recovered from a quadratic
//! start deformed by (1/q, -q, -1/q, q).

use qoscil::deform::family::qcv_quadratic_start;
use qoscil::deform::{qcv, QcvParams, QcvSign};
use qoscil::exact::{frac, rat};

pub fn run_example() -> qoscil::Result<()> {
    let params = QcvParams::new(rat(3), frac(2, 5), QcvSign::Upper)?;
    let (start, chain) = qcv_quadratic_start(&params)?;
    let start: Vec<String> = start.iter().map(ToString::to_string).collect();
    println!("start coefficients (1, n, n^2): {}", start.join(", "));
    println!("step-4 structure  F = {}", chain.last_structure());
    let target = qcv(&params, &params.q);
    println!("qcv structure     F = {}", target.structure);
    println!("equal: {}", chain.last_structure() == target.structure);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("qcv quadratic start");
}
