//! Exact scalars, q-numbers and the exponential-polynomial closed-form class.

mod exppoly;
mod linalg;
mod qnumbers;

pub use exppoly::ExpPoly;
pub use linalg::solve;
pub use qnumbers::{
    basic_number, binomial, omega, phi, phi_partial_fraction, q_integer, residue_sum,
    WeightVector,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Displays as `p/q`, or `p` when the denominator is one.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` reduced. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer power with negative exponents allowed (`base` must then be nonzero).
pub fn powi(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

/// Parses `p`, `-p`, `p/q` (whitespace tolerated).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}
