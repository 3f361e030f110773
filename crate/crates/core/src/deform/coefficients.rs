//! Closed-form step coefficients for linear and quadratic polynomial starts.
//!
//! These express the coefficients of `f_j` directly in terms of the start
//! coefficients `α_{0,j}` and the parameters, independently of the general
//! [`ExpPoly`](crate::ExpPoly) recursion, which they are tested against.

use num_traits::{One, Zero};

use crate::exact::{rat, Rational};
use crate::{Error, Result};

fn nonzero(x: Rational, what: &str) -> Result<Rational> {
    if x.is_zero() {
        Err(Error::DegenerateParameters(format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

/// Start `f_0 = α_{0,1} n + α_{0,0}`, first step `f_1 = α_{1,0} + α_{1,1} q_1^n`.
///
/// Returns `(α_{1,0}, α_{1,1})`.
pub fn linear_first_step(a00: &Rational, a01: &Rational, q1: &Rational) -> Result<(Rational, Rational)> {
    let d = nonzero(Rational::one() - q1, "1 - q_1")?;
    let a10 = a01 / &d;
    let a11 = a00 - &a10;
    Ok((a10, a11))
}

/// Second step of the linear start, `f_2 = α_{2,1} q_1^n + α_{2,2} q_2^n`.
///
/// Returns `(α_{2,1}, α_{2,2})`.
pub fn linear_second_step(
    a10: &Rational,
    a11: &Rational,
    q1: &Rational,
    q2: &Rational,
) -> Result<(Rational, Rational)> {
    let d = nonzero(q1 - q2, "q_1 - q_2")?;
    let one = Rational::one();
    let a21 = a11 * (q1 - &one) / &d;
    let a22 = a10 - a11 * (q2 - &one) / &d;
    Ok((a21, a22))
}

/// Third step, `f_3 = α_{3,1} q_1^n + α_{3,2} q_2^n + α_{3,3} q_3^n`.
pub fn linear_third_step(
    a21: &Rational,
    a22: &Rational,
    q1: &Rational,
    q2: &Rational,
    q3: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    let one = Rational::one();
    let d13 = nonzero(q1 - q3, "q_1 - q_3")?;
    let d23 = nonzero(q2 - q3, "q_2 - q_3")?;
    let a31 = a21 * (q1 - &one) / &d13;
    let a32 = a22 * (q2 - &one) / &d23;
    let a33 = ((q3 - q2) * a21 + (q3 - q1) * a22) / ((q3 - q1) * (q3 - q2)) * (q3 - &one);
    Ok((a31, a32, a33))
}

/// Start `f_0 = α_{0,2} n² + α_{0,1} n + α_{0,0}`, first step
/// `f_1 = α_{1,1} q_1^n + α_{1,2} n + α_{1,3}`.
///
/// With `X = (q_1(α_{0,2}+α_{0,1}) + α_{0,2} - α_{0,1}) / (q_1-1)²` the
/// coefficients are `α_{1,1} = X + α_{0,0}`, `α_{1,2} = 2α_{0,2}/(1-q_1)` and
/// `α_{1,3} = -X`, so that `f_1(0) = α_{0,0}`.
pub fn quadratic_first_step(
    a00: &Rational,
    a01: &Rational,
    a02: &Rational,
    q1: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    let one = Rational::one();
    let d = nonzero(&one - q1, "1 - q_1")?;
    let x = (q1 * (a02 + a01) + (a02 - a01)) / (&d * &d);
    let a11 = &x + a00;
    let a12 = rat(2) * a02 / &d;
    let a13 = -x;
    Ok((a11, a12, a13))
}
