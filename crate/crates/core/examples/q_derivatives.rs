//! Jackson and multi-parameter q-derivatives.

use qoscil::deform::chain;
use qoscil::exact::{frac, rat};
use qoscil::qcalc::{jackson_derivative, mb_weights, multi_q_derivative, Poly};
use qoscil::ExpPoly;

pub fn run_example() -> qoscil::Result<()> {
    let g = Poly::new(vec![rat(1), rat(0), rat(-2), rat(1)]);
    println!("g            = {g}");
    println!("D_2 g        = {}", jackson_derivative(&rat(2), &g));
    println!("D_1 g        = {}", jackson_derivative(&rat(1), &g));

    let params = [rat(2), frac(1, 2)];
    println!("D_(2,1/2) g  = {}", multi_q_derivative(&params, &g)?);
    let f = chain(&ExpPoly::one(), &params)?.last_structure();
    println!("F_2 on 1..4  = {:?}", f.table(1..5).iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let (w1, w2) = mb_weights(&rat(3));
    println!("weights of (3, 1/3): {w1}, {w2}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("q derivatives");
}
