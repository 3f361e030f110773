//! The recursive minimal deformation and the oscillator catalog.
//!
//! A commutator `[a, a†] = f(n̂)` is deformed into `[a, a†]_q = f(n̂)`; in the
//! Fock representation that quommutator has structure function
//! `F(ℓ) = Σ_{i<ℓ} q^i f(ℓ-1-i)` and is equivalent to the new commutator
//! `[a, a†] = F(n̂+1) - F(n̂)`. Iterating from `f = 1` produces the
//! Arik-Coon, Macfarlane-Biedenharn and multi-parameter oscillators;
//! polynomial starts add free linear coefficients.

pub mod coefficients;
pub mod family;

pub use family::{
    arik_coon, bem, calogero_vasiliev, chakrabarti_jagannathan, macfarlane_biedenharn, qcv,
    FamilyName, Oscillator, QcvParams, QcvSign,
};

use num_traits::{One, Zero};

use crate::exact::{ExpPoly, Rational};
use crate::{Error, Result};

/// One deformation step: `[a, a†]_param = f_prev` with structure function
/// `F` and equivalent commutator `f = F(n+1) - F(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub param: Rational,
    pub structure: ExpPoly,
    pub commutator: ExpPoly,
}

/// Deforms `[a, a†] = f` by the parameter `q`.
pub fn minimal_deform(f: &ExpPoly, q: &Rational) -> Result<Step> {
    if q.is_zero() {
        return Err(Error::InvalidParameter(
            "deformation parameter must be nonzero".into(),
        ));
    }
    // Σ_{j<ℓ} q^{ℓ-1-j} f(j) = q^{ℓ-1} · Σ_{j<ℓ} q^{-j} f(j)
    let inv = q.recip();
    let structure = f.times_exp(&inv).prefix_sum().times_exp(q).scale(&inv);
    let commutator = structure.difference();
    Ok(Step {
        param: q.clone(),
        structure,
        commutator,
    })
}

/// An initial commutator `f_0` (zero at negative levels) together with every
/// intermediate step of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationChain {
    start: ExpPoly,
    steps: Vec<Step>,
}

impl DeformationChain {
    pub fn new(start: ExpPoly, params: &[Rational]) -> Result<Self> {
        let mut chain = Self {
            start,
            steps: Vec::with_capacity(params.len()),
        };
        for q in params {
            chain.extend(q)?;
        }
        Ok(chain)
    }

    /// Appends one more minimal deformation.
    pub fn extend(&mut self, q: &Rational) -> Result<&Step> {
        let step = minimal_deform(self.last_commutator(), q)?;
        self.steps.push(step);
        Ok(self.steps.last().expect("just pushed"))
    }

    pub fn start(&self) -> &ExpPoly {
        &self.start
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn params(&self) -> Vec<Rational> {
        self.steps.iter().map(|s| s.param.clone()).collect()
    }

    /// `f_j`, with `f_0` the start.
    pub fn commutator(&self, j: usize) -> Option<&ExpPoly> {
        match j {
            0 => Some(&self.start),
            _ => self.steps.get(j - 1).map(|s| &s.commutator),
        }
    }

    /// `F_j` for `1 ≤ j ≤ depth`.
    pub fn structure(&self, j: usize) -> Option<&ExpPoly> {
        j.checked_sub(1)
            .and_then(|i| self.steps.get(i))
            .map(|s| &s.structure)
    }

    pub fn last_commutator(&self) -> &ExpPoly {
        self.steps.last().map_or(&self.start, |s| &s.commutator)
    }

    /// Structure function of the last step, or `Σ_{i<n} f_0(i)` for an empty
    /// chain.
    pub fn last_structure(&self) -> ExpPoly {
        match self.steps.last() {
            Some(s) => s.structure.clone(),
            None => self.start.prefix_sum(),
        }
    }
}

/// Iterates [`minimal_deform`] from `f0`.
pub fn chain(f0: &ExpPoly, params: &[Rational]) -> Result<DeformationChain> {
    DeformationChain::new(f0.clone(), params)
}

/// Starts the recursion from the polynomial `Σ_j coeffs[j] n^j`.
///
/// The closed-form step coefficients divide by `1 - q_1`, so `q_1 = 1` is
/// rejected for non-constant starts.
pub fn polynomial_start(coeffs: &[Rational], params: &[Rational]) -> Result<DeformationChain> {
    if coeffs.is_empty() {
        return Err(Error::InvalidParameter("empty polynomial start".into()));
    }
    if coeffs.len() > 1 && params.first().is_some_and(One::is_one) {
        return Err(Error::DegenerateParameters(
            "q_1 = 1 with a non-constant polynomial start".into(),
        ));
    }
    chain(&ExpPoly::poly(coeffs.to_vec()), params)
}
