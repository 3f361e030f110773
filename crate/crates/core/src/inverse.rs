//! Rewriting a commutator `[a, a†] = φ(n̂)` as an equivalent quommutator.

use num_traits::{One, Zero};

use crate::exact::{ExpPoly, Rational};
use crate::opalg::{LevelFn, QuommutatorSpec};
use crate::{Error, Result};

/// `a a† - a† β(n̂) a = γ₀` with `β(n) = numerator(n) / denominator(n)`.
///
/// `β` is generally not itself an [`ExpPoly`]; it is kept as a quotient and
/// also tabulated on the requested levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaForm {
    pub numerator: ExpPoly,
    pub denominator: ExpPoly,
    pub gamma: Rational,
    pub table: Vec<Rational>,
}

impl BetaForm {
    pub fn quommutator(&self) -> QuommutatorSpec {
        QuommutatorSpec::new(
            LevelFn::constant(Rational::one()),
            LevelFn::Table(self.table.clone()),
            ExpPoly::constant(self.gamma.clone()),
        )
    }

    /// `Some(c)` when `β` is the constant `c` on every tabulated level.
    pub fn as_constant(&self) -> Option<Rational> {
        let first = self.table.first()?;
        self.table.iter().all(|b| b == first).then(|| first.clone())
    }
}

/// `[a, a†]_Q = Φ(n̂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiForm {
    pub q: Rational,
    pub phi: ExpPoly,
}

/// `β(n) = Σ_{i=1}^{n+1} φ(i) / Σ_{i=0}^{n} φ(i)` for `φ(0) = 1`, tabulated
/// for `n < levels`.
pub fn to_unit_quommutator(phi: &ExpPoly, levels: usize) -> Result<BetaForm> {
    let ground = phi.eval(0);
    if !ground.is_one() {
        return Err(Error::PreconditionViolated(format!(
            "φ(0) = {ground}, expected 1"
        )));
    }
    with_ground(phi, ground, levels)
}

/// `β(n) = (Σ_{i=0}^{n+1} φ(i) - γ₀) / Σ_{i=0}^{n} φ(i)` for the relation
/// `a a† - a† β(n̂) a = γ₀`; the ground level forces `γ₀ = φ(0)`.
pub fn to_quommutator_with_ground(
    phi: &ExpPoly,
    gamma0: &Rational,
    levels: usize,
) -> Result<BetaForm> {
    let ground = phi.eval(0);
    if &ground != gamma0 {
        return Err(Error::PreconditionViolated(format!(
            "γ₀ = {gamma0} but φ(0) = {ground}"
        )));
    }
    if gamma0.is_zero() {
        return Err(Error::DivisionByZeroAtLevel(0));
    }
    with_ground(phi, ground, levels)
}

fn with_ground(phi: &ExpPoly, gamma: Rational, levels: usize) -> Result<BetaForm> {
    let partial = phi.prefix_sum();
    let numerator = partial.shift(2) - ExpPoly::constant(gamma.clone());
    let denominator = partial.shift(1);
    let table = (0..levels as i64)
        .map(|n| {
            let d = denominator.eval(n);
            if d.is_zero() {
                Err(Error::DivisionByZeroAtLevel(n as usize))
            } else {
                Ok(numerator.eval(n) / d)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BetaForm {
        numerator,
        denominator,
        gamma,
        table,
    })
}

/// `Φ(n) = φ(n) + (1 - Q) Σ_{i<n} φ(i)`.
pub fn to_q_quommutator(phi: &ExpPoly, q: &Rational) -> PhiForm {
    let tail = phi.prefix_sum().scale(&(Rational::one() - q));
    PhiForm {
        q: q.clone(),
        phi: phi + &tail,
    }
}

/// Tries every exponential base of `φ` as `Q` (each removes one term of
/// `Φ`) and ranks the results by [`ExpPoly::complexity`], simplest first.
/// Equal-complexity candidates keep increasing-base order.
pub fn simplest_q(phi: &ExpPoly) -> Vec<PhiForm> {
    let mut out: Vec<PhiForm> = phi
        .bases()
        .filter(|b| !b.is_one())
        .map(|b| to_q_quommutator(phi, b))
        .collect();
    out.sort_by_key(|c| c.phi.complexity());
    out
}

/// The candidates of [`simplest_q`] that tie for the lowest complexity.
pub fn best_q(phi: &ExpPoly) -> Vec<PhiForm> {
    let all = simplest_q(phi);
    let Some(best) = all.first().map(|c| c.phi.complexity()) else {
        return all;
    };
    all.into_iter()
        .take_while(|c| c.phi.complexity() == best)
        .collect()
}
