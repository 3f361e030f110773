//! Casimir operators of the commutator and quommutator forms.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::deform::DeformationChain;
use crate::exact::{ExpPoly, Rational};
use crate::opalg::{Discrepancy, FockWindow, Operator, Verdict};
use crate::{Error, Result};

/// `C = F(n̂) - a†a` for `[a, a†] = F(n̂+1) - F(n̂)`.
pub fn casimir_commutator(structure: &ExpPoly, window: &Arc<FockWindow>) -> Result<Operator> {
    let a = Operator::annihilation(window);
    let ad = Operator::creation(window);
    Operator::diag(window, structure).sub(&ad.mul(&a)?)
}

/// `[C, a†] = 0`, `[C, a] = 0` and `C = 0` on the window.
pub fn verify_centrality(c: &Operator) -> Result<Verdict> {
    let window = c.window();
    let zero = Operator::zero(window);
    let with_creation = c.commutator(&Operator::creation(window))?.verify_eq(&zero)?;
    let with_annihilation = c.commutator(&Operator::annihilation(window))?.verify_eq(&zero)?;
    // level by level, so that an exactly vanishing operator still counts
    let vanishes = match c.diagonal() {
        Some(values) => {
            let witness = values.iter().position(|v| !v.is_zero());
            Verdict {
                holds: witness.is_none(),
                checked: values.len(),
                uncovered: 0,
                discrepancy: witness.map(|level| Discrepancy {
                    degree: 0,
                    level,
                    lhs: values[level].clone(),
                    rhs: Rational::zero(),
                }),
            }
        }
        None => c.verify_eq(&zero)?,
    };
    Ok(with_creation.and(with_annihilation).and(vanishes))
}

/// `C̃ = μ(n̂) - ν(n̂) a†a` for `[a, a†]_q = f(n̂)`, normalised by
/// `μ(0) = 0` and `ν(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirPair {
    pub mu: ExpPoly,
    pub nu: ExpPoly,
    pub q: Rational,
}

impl CasimirPair {
    pub fn operator(&self, window: &Arc<FockWindow>) -> Result<Operator> {
        let a = Operator::annihilation(window);
        let ad = Operator::creation(window);
        let number_part = Operator::diag(window, &self.nu).mul(&ad.mul(&a)?)?;
        Operator::diag(window, &self.mu).sub(&number_part)
    }

    /// Both defining recurrences as identities of closed forms:
    /// `μ(n) - μ(n-1) = ν(n) f(n-1)` and `ν(n) = ν(n-1) / q`.
    pub fn recurrences_hold(&self, f: &ExpPoly) -> bool {
        let first = &self.mu - &self.mu.shift(-1) == &self.nu * &f.shift(-1);
        let second = self.nu == self.nu.shift(-1).scale(&self.q.recip());
        first && second && self.mu.eval(0).is_zero() && self.nu.eval(0).is_one()
    }

    /// `μ(c)`: the value the Casimir takes on a lowest-weight state whose
    /// number eigenvalue is shifted to `c`.
    pub fn offset_value(&self, offset: i64) -> Rational {
        self.mu.eval(offset)
    }
}

/// `F(c)` for the commutator form, the counterpart of
/// [`CasimirPair::offset_value`].
pub fn commutator_offset_value(structure: &ExpPoly, offset: i64) -> Rational {
    structure.eval(offset)
}

/// `ν(n) = q^{-n}`, `μ(n) = Σ_{i=1}^{n} q^{-i} f(i-1)`.
pub fn casimir_quommutator(f: &ExpPoly, q: &Rational) -> Result<CasimirPair> {
    if q.is_zero() {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    let inv = q.recip();
    let mu = f.times_exp(&inv).scale(&inv).prefix_sum();
    Ok(CasimirPair {
        mu,
        nu: ExpPoly::exp(inv),
        q: q.clone(),
    })
}

/// For `j < depth`: `C̃_j = q_{j+1}^{-n̂} C_{j+1}` on the window of `F_{j+1}`,
/// together with the centrality of `C̃_j` and its vanishing on Fock states.
pub fn verify_casimir_relation(
    chain: &DeformationChain,
    j: usize,
    size: usize,
) -> Result<Verdict> {
    let (Some(f), Some(structure)) = (chain.commutator(j), chain.structure(j + 1)) else {
        return Err(Error::InvalidParameter(format!(
            "step {j} is outside a chain of depth {}",
            chain.depth()
        )));
    };
    let q = &chain.steps()[j].param;
    let window = Arc::new(FockWindow::from_structure(structure, size)?);
    let pair = casimir_quommutator(f, q)?;
    let tilde = pair.operator(&window)?;
    let c_next = casimir_commutator(structure, &window)?;
    let scaled = Operator::diag(&window, &pair.nu).mul(&c_next)?;
    Ok(tilde.verify_eq(&scaled)?.and(verify_centrality(&tilde)?))
}
