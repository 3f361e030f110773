//! Truncated Fock windows and the weighted-shift operator algebra.
//!
//! A window stores the structure function `F(k)` (with `F(0) = 0`) for the
//! levels it covers. Operators never carry square roots: they are kept in the
//! normal form `Σ_{d≥0} (a†)^d h_d(n̂) + Σ_{d<0} h_d(n̂) a^{|d|}` and multiplied
//! by the rewriting rules `a a† = F(n̂+1)`, `a† a = F(n̂)`,
//! `a h(n̂) = h(n̂+1) a` and `h(n̂) a† = a† h(n̂+1)`.

mod operator;

pub use operator::{verify_relation, Discrepancy, Operator, Verdict};

use num_traits::{One, Signed, Zero};

use crate::exact::{rat, ExpPoly, Rational};
use crate::{Error, Result};

pub const DEFAULT_WINDOW: usize = 16;

/// Extra structure-function levels stored beyond the window, so that
/// products of moderate degree stay fully determined on the window.
pub const DEFAULT_MARGIN: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockWindow {
    size: usize,
    values: Vec<Rational>,
}

impl FockWindow {
    /// `values[k] = F(k)`; must start with `F(0) = 0` and cover `size` levels.
    pub fn from_values(values: Vec<Rational>, size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::InvalidParameter("window needs at least 2 levels".into()));
        }
        if values.len() < size {
            return Err(Error::InvalidParameter(format!(
                "{} structure values cannot cover {size} levels",
                values.len()
            )));
        }
        if !values[0].is_zero() {
            return Err(Error::PreconditionViolated(format!(
                "F(0) = {} but the ground state requires F(0) = 0",
                values[0]
            )));
        }
        Ok(Self { size, values })
    }

    pub fn from_structure(structure: &ExpPoly, size: usize) -> Result<Self> {
        Self::from_structure_with_margin(structure, size, DEFAULT_MARGIN)
    }

    pub fn from_structure_with_margin(
        structure: &ExpPoly,
        size: usize,
        margin: usize,
    ) -> Result<Self> {
        let cap = (size + margin) as i64;
        Self::from_values(structure.table(0..cap), size)
    }

    /// Window whose plain commutator is `f`, i.e. `F = Σ_{i<n} f(i)`.
    pub fn from_commutator(f: &ExpPoly, size: usize) -> Result<Self> {
        Self::from_structure(&f.prefix_sum(), size)
    }

    /// Number of Fock levels `0..size` on which identities are asserted.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of stored structure values (window plus margin).
    pub fn capacity(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, k: i64) -> Option<&Rational> {
        usize::try_from(k).ok().and_then(|k| self.values.get(k))
    }

    /// `F(k) > 0` for `1 ≤ k < size`, as a unitary Fock representation needs.
    pub fn is_fock_valid(&self) -> bool {
        self.values[1..self.size].iter().all(Signed::is_positive)
    }
}

/// A level-indexed scalar function `α(n̂)`, `β(n̂)` or `γ(n̂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelFn {
    Closed(ExpPoly),
    /// Quotient of two closed forms; undefined where the denominator vanishes.
    Ratio(ExpPoly, ExpPoly),
    /// Values for levels `0..len`.
    Table(Vec<Rational>),
}

impl LevelFn {
    pub fn constant(c: Rational) -> Self {
        LevelFn::Closed(ExpPoly::constant(c))
    }

    pub fn at(&self, n: i64) -> Option<Rational> {
        match self {
            LevelFn::Closed(f) => Some(f.eval(n)),
            LevelFn::Ratio(num, den) => {
                let d = den.eval(n);
                (!d.is_zero()).then(|| num.eval(n) / d)
            }
            LevelFn::Table(t) => usize::try_from(n).ok().and_then(|i| t.get(i)).cloned(),
        }
    }
}

impl From<ExpPoly> for LevelFn {
    fn from(f: ExpPoly) -> Self {
        LevelFn::Closed(f)
    }
}

/// The relation `a α(n̂) a† - a† β(n̂) a = γ(n̂)`.
///
/// A relation written as `a a† - X(n̂) a† a = γ(n̂)` has `β(n) = X(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuommutatorSpec {
    pub alpha: LevelFn,
    pub beta: LevelFn,
    pub gamma: LevelFn,
}

impl QuommutatorSpec {
    pub fn new(alpha: impl Into<LevelFn>, beta: impl Into<LevelFn>, gamma: impl Into<LevelFn>) -> Self {
        Self {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
        }
    }

    /// `a a† - Q a† a = rhs(n̂)`.
    pub fn scalar(q: Rational, rhs: ExpPoly) -> Self {
        Self::new(LevelFn::constant(Rational::one()), LevelFn::constant(q), rhs)
    }

    fn value(&self, which: &LevelFn, n: i64) -> Result<Rational> {
        which
            .at(n)
            .ok_or_else(|| Error::DivisionByZeroAtLevel(n.max(0) as usize))
    }
}

/// `F(0) = 0`, `F(k+1) = (γ(k) + β(k-1) F(k)) / α(k+1)`, tabulated over the
/// window plus the default margin.
pub fn structure_from_quommutator(spec: &QuommutatorSpec, size: usize) -> Result<FockWindow> {
    let values = structure_values(spec, size + DEFAULT_MARGIN)?;
    FockWindow::from_values(values, size)
}

pub fn structure_values(spec: &QuommutatorSpec, count: usize) -> Result<Vec<Rational>> {
    let mut values = Vec::with_capacity(count);
    values.push(Rational::zero());
    for k in 0..count.saturating_sub(1) as i64 {
        let alpha = spec.value(&spec.alpha, k + 1)?;
        if alpha.is_zero() {
            return Err(Error::AlphaVanishes { level: k as usize + 1 });
        }
        let mut next = spec.value(&spec.gamma, k)?;
        if k > 0 {
            next += spec.value(&spec.beta, k - 1)? * &values[k as usize];
        }
        values.push(next / alpha);
    }
    Ok(values)
}

/// Closed-form sum for the structure function,
/// `F(k) = Σ_{i<k} γ(i) β(i)⋯β(k-2) / (α(i+1)⋯α(k))`.
pub fn structure_closed_form(spec: &QuommutatorSpec, k: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 0..k as i64 {
        let mut term = spec.value(&spec.gamma, i)?;
        for j in i..=(k as i64 - 2) {
            term *= spec.value(&spec.beta, j)?;
        }
        for j in i + 1..=k as i64 {
            let alpha = spec.value(&spec.alpha, j)?;
            if alpha.is_zero() {
                return Err(Error::AlphaVanishes { level: j as usize });
            }
            term /= alpha;
        }
        acc += term;
    }
    Ok(acc)
}

/// Level sequence of `[a, a†]_Q = F(n+1) - Q F(n)` for `n < size`.
pub fn general_quommutator_rhs(
    spec: &QuommutatorSpec,
    size: usize,
    q: &Rational,
) -> Result<Vec<Rational>> {
    let values = structure_values(spec, size + 1)?;
    Ok((0..size)
        .map(|n| &values[n + 1] - q * &values[n])
        .collect())
}

/// Termwise expansion of `[a, a†]_Q` at level `n` in terms of `α`, `β`, `γ`:
/// `γ(n)/α(n+1) + Σ_{i<n} γ(i)β(i)⋯β(n-1)/(α(i+1)⋯α(n)) · (1/α(n+1) - Q/β(n-1))`.
pub fn quommutator_rhs_closed_form(
    spec: &QuommutatorSpec,
    n: usize,
    q: &Rational,
) -> Result<Rational> {
    let n = n as i64;
    let alpha_next = spec.value(&spec.alpha, n + 1)?;
    if alpha_next.is_zero() {
        return Err(Error::AlphaVanishes { level: n as usize + 1 });
    }
    let mut acc = spec.value(&spec.gamma, n)? / &alpha_next;
    if n == 0 {
        return Ok(acc);
    }
    let beta_prev = spec.value(&spec.beta, n - 1)?;
    if beta_prev.is_zero() {
        return Err(Error::DivisionByZeroAtLevel(n as usize - 1));
    }
    let bracket = alpha_next.recip() - q / &beta_prev;
    for i in 0..n {
        let mut term = spec.value(&spec.gamma, i)?;
        for j in i..n {
            term *= spec.value(&spec.beta, j)?;
        }
        for j in i + 1..=n {
            term /= spec.value(&spec.alpha, j)?;
        }
        acc += term * &bracket;
    }
    Ok(acc)
}

/// Harmonic-oscillator window, `F(n) = n`.
pub fn harmonic_window(size: usize) -> FockWindow {
    FockWindow::from_structure(&ExpPoly::poly(vec![rat(0), rat(1)]), size)
        .expect("F(n) = n vanishes at the ground state")
}
