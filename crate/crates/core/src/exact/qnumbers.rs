//! Jackson integers, two-base basic numbers, the complete-homogeneous sums
//! `Φ_k(ℓ)` and their partial-fraction weights.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{powi, rat, Rational};
use crate::{Error, Result};

/// Jackson integer `[ℓ]_q = 1 + q + … + q^{ℓ-1}`.
pub fn q_integer(q: &Rational, ell: u32) -> Rational {
    if q.is_one() {
        return rat(ell as i64);
    }
    (powi(q, ell as i64) - Rational::one()) / (q - Rational::one())
}

/// Two-base number `[[ℓ]]_{q1,q2} = Σ_{i+j=ℓ-1} q1^i q2^j`.
pub fn basic_number(q1: &Rational, q2: &Rational, ell: u32) -> Rational {
    if ell == 0 {
        return Rational::zero();
    }
    if q1 == q2 {
        return rat(ell as i64) * powi(q1, ell as i64 - 1);
    }
    (powi(q1, ell as i64) - powi(q2, ell as i64)) / (q1 - q2)
}

pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `Φ_k(ℓ)`: the sum of `q_1^{i_1}⋯q_k^{i_k}` over all compositions
/// `i_1+…+i_k = ℓ-k+1` with `i_j ≥ 0`; zero when `ℓ-k+1 < 0`.
///
/// Coincident parameters are fine here.
pub fn phi(params: &[Rational], ell: i64) -> Rational {
    let k = params.len() as i64;
    let total = ell - k + 1;
    if total < 0 || params.is_empty() {
        return Rational::zero();
    }
    let total = total as usize;
    // h[m] = complete homogeneous sum of degree m over the variables seen so far
    let mut h = vec![Rational::zero(); total + 1];
    h[0] = Rational::one();
    for q in params {
        for m in 1..=total {
            let carry = q * &h[m - 1];
            h[m] += carry;
        }
    }
    h.swap_remove(total)
}

/// `Φ_k(ℓ) = Σ_i q_i^ℓ / Π'_m (q_i - q_m)`, valid for pairwise distinct
/// nonzero parameters and `ℓ ≥ 0`.
pub fn phi_partial_fraction(params: &[Rational], ell: i64) -> Result<Rational> {
    check_distinct(params)?;
    let mut acc = Rational::zero();
    for (i, qi) in params.iter().enumerate() {
        acc += powi(qi, ell) / vandermonde_row(params, i);
    }
    Ok(acc)
}

/// Weight `ω_{k,i} = Π'_m (q_i - 1)/(q_i - q_m)` for the zero-based index `i`.
pub fn omega(params: &[Rational], i: usize) -> Result<Rational> {
    check_distinct(params)?;
    check_not_one(params)?;
    if i >= params.len() {
        return Err(Error::InvalidParameter(format!(
            "weight index {i} out of range for {} parameters",
            params.len()
        )));
    }
    let qi = &params[i];
    let k = params.len() as i64;
    Ok(powi(&(qi - Rational::one()), k - 1) / vandermonde_row(params, i))
}

/// `Σ_i (q_i - 1)^ℓ / Π'_m (q_i - q_m)`: equals 1 for `ℓ = k-1` and 0 for
/// `0 ≤ ℓ < k-1`.
pub fn residue_sum(params: &[Rational], ell: u32) -> Result<Rational> {
    check_distinct(params)?;
    let mut acc = Rational::zero();
    for (i, qi) in params.iter().enumerate() {
        acc += powi(&(qi - Rational::one()), ell as i64) / vandermonde_row(params, i);
    }
    Ok(acc)
}

fn vandermonde_row(params: &[Rational], i: usize) -> Rational {
    let qi = &params[i];
    params
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != i)
        .fold(Rational::one(), |acc, (_, qm)| acc * (qi - qm))
}

fn check_distinct(params: &[Rational]) -> Result<()> {
    for (i, a) in params.iter().enumerate() {
        if params[i + 1..].contains(a) {
            return Err(Error::DegenerateParameters(format!(
                "parameter {a} appears more than once"
            )));
        }
    }
    Ok(())
}

fn check_not_one(params: &[Rational]) -> Result<()> {
    if params.iter().any(|q| q.is_one()) {
        return Err(Error::DegenerateParameters(
            "a deformation parameter equals 1".into(),
        ));
    }
    Ok(())
}

/// Partial-fraction weights of a set of deformation parameters.
///
/// The parameters are pairwise distinct, nonzero and different from 1, and
/// the weights sum to exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    params: Vec<Rational>,
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(params: &[Rational]) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidParameter("no parameters".into()));
        }
        if params.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParameter("zero deformation parameter".into()));
        }
        let weights = (0..params.len())
            .map(|i| omega(params, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params: params.to_vec(),
            weights,
        })
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// `Σ_i ω_i [ℓ]_{q_i}`.
    pub fn average_q_integer(&self, ell: u32) -> Rational {
        self.params
            .iter()
            .zip(&self.weights)
            .map(|(q, w)| w * q_integer(q, ell))
            .sum()
    }
}
