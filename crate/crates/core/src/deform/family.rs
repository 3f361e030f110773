//! Named oscillators and the quommutator presentations they come from.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{chain, polynomial_start, DeformationChain};
use crate::exact::{powi, rat, ExpPoly, Rational};
use crate::opalg::{FockWindow, LevelFn, QuommutatorSpec};
use crate::{Error, Result};

/// A deformed oscillator `[a, a†]_Q = rhs(n̂)` together with its equivalent
/// commutator `[a, a†] = f(n̂)` and the shared structure function `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oscillator {
    pub name: FamilyName,
    pub deformation: Rational,
    pub quommutator_rhs: ExpPoly,
    pub commutator: ExpPoly,
    pub structure: ExpPoly,
    /// Recursion that produces the oscillator at its last step, when known.
    pub chain: Option<DeformationChain>,
}

impl Oscillator {
    fn from_chain(name: FamilyName, chain: DeformationChain) -> Self {
        let depth = chain.depth();
        let last = &chain.steps()[depth - 1];
        Self {
            name,
            deformation: last.param.clone(),
            quommutator_rhs: chain.commutator(depth - 1).expect("depth ≥ 1").clone(),
            commutator: last.commutator.clone(),
            structure: last.structure.clone(),
            chain: Some(chain),
        }
    }

    pub fn window(&self, size: usize) -> Result<FockWindow> {
        FockWindow::from_structure(&self.structure, size)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyName {
    ArikCoon,
    MacfarlaneBiedenharn,
    ChakrabartiJagannathan,
    CalogeroVasiliev,
    Bem,
    Qcv,
}

impl FamilyName {
    pub const ALL: [FamilyName; 6] = [
        FamilyName::ArikCoon,
        FamilyName::MacfarlaneBiedenharn,
        FamilyName::ChakrabartiJagannathan,
        FamilyName::CalogeroVasiliev,
        FamilyName::Bem,
        FamilyName::Qcv,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FamilyName::ArikCoon => "arik-coon",
            FamilyName::MacfarlaneBiedenharn => "mb",
            FamilyName::ChakrabartiJagannathan => "cj",
            FamilyName::CalogeroVasiliev => "cv",
            FamilyName::Bem => "bem",
            FamilyName::Qcv => "qcv",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|n| n.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

fn require_nonzero(q: &Rational, what: &str) -> Result<()> {
    if q.is_zero() {
        Err(Error::InvalidParameter(format!("{what} must be nonzero")))
    } else {
        Ok(())
    }
}

fn require_not_unit_modulus(q: &Rational, what: &str) -> Result<()> {
    require_nonzero(q, what)?;
    if q.is_one() || *q == -Rational::one() {
        Err(Error::DegenerateParameters(format!("{what} = ±1 collapses the bases")))
    } else {
        Ok(())
    }
}

/// `[a, a†]_q = 1`, equivalent to `[a, a†] = q^n̂`.
pub fn arik_coon(q: &Rational) -> Result<Oscillator> {
    require_nonzero(q, "q")?;
    Ok(Oscillator::from_chain(
        FamilyName::ArikCoon,
        chain(&ExpPoly::one(), std::slice::from_ref(q))?,
    ))
}

/// `[a, a†]_q = q^{-n̂}`, equivalent to
/// `[a, a†] = (q^{n̂+1} + q^{-n̂}) / (q + 1)`.
pub fn macfarlane_biedenharn(q: &Rational) -> Result<Oscillator> {
    require_not_unit_modulus(q, "q")?;
    Ok(Oscillator::from_chain(
        FamilyName::MacfarlaneBiedenharn,
        chain(&ExpPoly::one(), &[q.recip(), q.clone()])?,
    ))
}

/// `[a, a†]_{q2} = q1^n̂`.
pub fn chakrabarti_jagannathan(q1: &Rational, q2: &Rational) -> Result<Oscillator> {
    require_nonzero(q1, "q1")?;
    require_nonzero(q2, "q2")?;
    if q1 == q2 {
        return Err(Error::DegenerateParameters("q1 = q2".into()));
    }
    Ok(Oscillator::from_chain(
        FamilyName::ChakrabartiJagannathan,
        chain(&ExpPoly::one(), &[q1.clone(), q2.clone()])?,
    ))
}

/// `{a, a†} = 2n̂ + 1 + 2ν`, equivalent to `[a, a†] = 1 + 2ν(-1)^n̂`.
pub fn calogero_vasiliev(nu: &Rational) -> Result<Oscillator> {
    let start = [Rational::one() + rat(2) * nu, rat(2)];
    Ok(Oscillator::from_chain(
        FamilyName::CalogeroVasiliev,
        polynomial_start(&start, &[rat(-1)])?,
    ))
}

/// Linear start `(α_{0,0}, α_{0,1})` whose second step with parameters
/// `(q^{-1}, -q^{-1})` is `q^{-n}(1 + 2ν(-1)^n)`.
pub fn bem_start(nu: &Rational, q: &Rational) -> Result<[Rational; 2]> {
    require_not_unit_modulus(q, "q")?;
    let one = Rational::one();
    let q1 = q.recip();
    let q2 = -q.recip();
    let a11 = (&q1 - &q2) / (&q1 - &one);
    let a10 = rat(2) * nu + (&q2 - &one) / (&q1 - &one);
    Ok([&a10 + &a11, &a10 * (&one - &q1)])
}

/// `[a, a†]_q = q^{-n̂}(1 + 2ν(-1)^n̂)`, reached as the third step of a
/// linear start with parameters `(q^{-1}, -q^{-1}, q)`.
pub fn bem(nu: &Rational, q: &Rational) -> Result<Oscillator> {
    let start = bem_start(nu, q)?;
    let params = [q.recip(), -q.recip(), q.clone()];
    Ok(Oscillator::from_chain(
        FamilyName::Bem,
        polynomial_start(&start, &params)?,
    ))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QcvSign {
    /// `a a† - q^{1+2νK} a† a = [[1+2νK]] q^{-(n̂+ν-νK)}`
    #[default]
    Upper,
    /// `a a† - q^{-(1+2νK)} a† a = [[1+2νK]] q^{n̂+ν-νK}`
    Lower,
}

/// Parameters of the q-deformed Calogero-Vasiliev oscillator.
///
/// `t = q^{2ν}` is carried instead of `ν`, which keeps every coefficient
/// rational for any `(q, t)`; [`QcvParams::from_nu`] covers `2ν ∈ ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcvParams {
    pub q: Rational,
    pub t: Rational,
    pub sign: QcvSign,
}

impl QcvParams {
    pub fn new(q: Rational, t: Rational, sign: QcvSign) -> Result<Self> {
        require_not_unit_modulus(&q, "q")?;
        require_nonzero(&t, "q^{2ν}")?;
        Ok(Self { q, t, sign })
    }

    pub fn from_nu(q: Rational, nu: &Rational, sign: QcvSign) -> Result<Self> {
        let two_nu = rat(2) * nu;
        if !two_nu.is_integer() {
            return Err(Error::InvalidParameter(format!(
                "q^(2ν) is irrational for 2ν = {two_nu}; pass q^(2ν) directly"
            )));
        }
        let exponent: i64 = two_nu
            .to_integer()
            .try_into()
            .map_err(|_| Error::InvalidParameter("2ν out of range".into()))?;
        require_nonzero(&q, "q")?;
        let t = powi(&q, exponent);
        Self::new(q, t, sign)
    }

    /// `(q, t)` of the equivalent upper-sign relation.
    fn effective(&self) -> (Rational, Rational) {
        match self.sign {
            QcvSign::Upper => (self.q.clone(), self.t.clone()),
            QcvSign::Lower => (self.q.recip(), self.t.recip()),
        }
    }
}

/// Four-exponential right-hand side of `[a, a†]_Q` for the q-deformed
/// Calogero-Vasiliev oscillator; three terms when `Q ∈ {±q, ±q^{-1}}`.
pub fn qcv_rhs(params: &QcvParams, big_q: &Rational) -> ExpPoly {
    let (q, t) = params.effective();
    let qi = q.recip();
    let ti = t.recip();
    let one = Rational::one();
    let pre = (rat(2) * (&q - &qi)).recip();
    let terms = [
        (q.clone(), (&q - big_q) * (&t + &one)),
        (qi.clone(), (big_q - &qi) * (&ti + &one)),
        (-&q, (big_q + &q) * (&t - &one)),
        (-&qi, (big_q + &qi) * (&one - &ti)),
    ];
    ExpPoly::from_terms(terms.into_iter().map(|(b, c)| (b, vec![c * &pre])))
}

/// The defining quommutator in `α, β, γ` form.
pub fn qcv_quommutator(params: &QcvParams) -> QuommutatorSpec {
    let (q, t) = params.effective();
    let qi = q.recip();
    let half = Rational::new(1.into(), 2.into());
    let parity = ExpPoly::exp(rat(-1));
    // β(n) = X(n+1) with X(m) = q^{1+2ν(-1)^m}
    let (b_even, b_odd) = (&q / &t, &q * &t);
    let beta = ExpPoly::constant((&b_even + &b_odd) * &half)
        + parity.scale(&((&b_even - &b_odd) * &half));
    let qn = |x: Rational| (&x - x.recip()) / (&q - &qi);
    let even = qn(&q * &t);
    let odd = qn(&q / &t) / &t;
    let gamma = ExpPoly::exp(qi.clone()).scale(&((&even + &odd) * &half))
        + ExpPoly::exp(-&qi).scale(&((&even - &odd) * &half));
    QuommutatorSpec::new(LevelFn::constant(Rational::one()), beta, gamma)
}

pub fn qcv(params: &QcvParams, big_q: &Rational) -> Oscillator {
    let commutator = qcv_rhs(params, &Rational::one());
    Oscillator {
        name: FamilyName::Qcv,
        deformation: big_q.clone(),
        quommutator_rhs: qcv_rhs(params, big_q),
        structure: commutator.prefix_sum(),
        commutator,
        chain: None,
    }
}

/// Quadratic start whose third step with parameters `(q^{-1}, -q, -q^{-1})`
/// equals the three-exponential `Q = q` form of [`qcv_rhs`], found by an
/// exact linear solve. Returns the start coefficients and the chain extended
/// by a fourth step with parameter `q`.
pub fn qcv_quadratic_start(params: &QcvParams) -> Result<([Rational; 3], DeformationChain)> {
    let (q, _) = params.effective();
    let bases = [q.recip(), -&q, -q.recip()];
    let target = qcv_rhs(params, &q);
    let basis_steps = (0..3)
        .map(|deg| {
            let mut coeffs = vec![Rational::zero(); deg + 1];
            coeffs[deg] = Rational::one();
            polynomial_start(&coeffs, &bases).map(|c| c.last_commutator().clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let coeff = |f: &ExpPoly, b: &Rational| {
        f.coefficients(b)
            .and_then(|c| c.first().cloned())
            .unwrap_or_else(Rational::zero)
    };
    let matrix = bases
        .iter()
        .map(|b| basis_steps.iter().map(|f| coeff(f, b)).collect())
        .collect();
    let rhs = bases.iter().map(|b| coeff(&target, b)).collect();
    let solution = crate::exact::solve(matrix, rhs)?;
    let start: [Rational; 3] = solution.try_into().expect("three unknowns");
    let mut params4 = bases.to_vec();
    params4.push(q);
    let chain = polynomial_start(&start, &params4)?;
    if chain.commutator(3) != Some(&target) {
        return Err(Error::PreconditionViolated(
            "three-exponential target is not reachable from a quadratic start".into(),
        ));
    }
    Ok((start, chain))
}

/// `a a† - a† q^{n̂+1} a = 1`.
pub fn shifted_power_quommutator(q: &Rational) -> QuommutatorSpec {
    QuommutatorSpec::new(
        LevelFn::constant(Rational::one()),
        ExpPoly::exp(q.clone()).scale(q),
        ExpPoly::one(),
    )
}

/// The equivalent commutator of [`shifted_power_quommutator`] at level `n`,
/// `1 + (q^n - 1) Σ_{j<n} q^{j(2n-j-1)/2}`.
pub fn shifted_power_commutator(q: &Rational, n: u32) -> Rational {
    let n = n as i64;
    let sum: Rational = (0..n).map(|j| powi(q, j * (2 * n - j - 1) / 2)).sum();
    Rational::one() + (powi(q, n) - Rational::one()) * sum
}

/// `a a† - (q^{n̂+2}+1)/(q(q^{n̂}+1)) a† a = 1`.
pub fn exotic_quommutator(q: &Rational) -> QuommutatorSpec {
    let num = ExpPoly::exp(q.clone()).scale(&powi(q, 3)) + ExpPoly::one();
    let den = ExpPoly::exp(q.clone()).scale(&(q * q)) + ExpPoly::constant(q.clone());
    QuommutatorSpec::new(
        LevelFn::constant(Rational::one()),
        LevelFn::Ratio(num, den),
        ExpPoly::one(),
    )
}

/// `[a, a†]_Q` for [`exotic_quommutator`]:
/// `1 + (q^{n+1}(q-Q) + 1 - qQ)/(q²-1) · (1 - q^{-n})`.
pub fn exotic_rhs(q: &Rational, big_q: &Rational) -> Result<ExpPoly> {
    require_not_unit_modulus(q, "q")?;
    let c = (q * q - Rational::one()).recip();
    let inner = ExpPoly::exp(q.clone()).scale(&(q * (q - big_q)))
        + ExpPoly::constant(Rational::one() - q * big_q);
    let tail = ExpPoly::one() - ExpPoly::exp(q.recip());
    Ok(ExpPoly::one() + (inner * tail).scale(&c))
}
