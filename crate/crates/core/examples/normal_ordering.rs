//! Normal-ordered expansions of (a†a)^m in the quommutator and commutator
//! forms.

use std::sync::Arc;

use qoscil::deform::arik_coon;
use qoscil::exact::rat;
use qoscil::ordering::{normal_order_table, normal_order_table_bar, verify_normal_order};
use qoscil::ExpPoly;

pub fn run_example() -> qoscil::Result<()> {
    let q = rat(2);
    let quom = normal_order_table(&ExpPoly::one(), &q, 4);
    let bar = normal_order_table_bar(&ExpPoly::exp(q.clone()), 4);
    for m in 1..=4 {
        let row: Vec<String> = quom.row(m).iter().map(ToString::to_string).collect();
        println!("q-Stirling    m = {m}: {}", row.join(", "));
    }
    for m in 1..=3 {
        let row: Vec<String> = bar.row(m).iter().map(ToString::to_string).collect();
        println!("operator form m = {m}: {}", row.join(", "));
    }

    let window = Arc::new(arik_coon(&q)?.window(16)?);
    println!("quommutator table verified: {}", verify_normal_order(&quom, &window)?.complete());
    println!("commutator table verified : {}", verify_normal_order(&bar, &window)?.complete());

    let classical = normal_order_table(&ExpPoly::one(), &rat(1), 5);
    let row: Vec<String> = classical.row(5).iter().map(ToString::to_string).collect();
    println!("Stirling row m = 5: {}", row.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("normal ordering");
}
