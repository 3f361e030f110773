//! Text and JSON forms of exponential polynomials.

use qoscil::cli::parse_exppoly;
use qoscil::cli::wire::{from_json_str, to_json_string};
use qoscil::exact::rat;

pub fn run_example() -> qoscil::Result<()> {
    let e = parse_exppoly("1 + 2*(-1)^n - 3/2*n*q^n + (1/2)^n", Some(&rat(5)))?;
    println!("parsed : {e}");
    let json = to_json_string(&e);
    println!("json   : {json}");
    assert_eq!(from_json_str(&json)?, e);
    assert_eq!(parse_exppoly(&e.to_string(), None)?, e);
    println!("both round trips are lossless");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("serialization");
}
