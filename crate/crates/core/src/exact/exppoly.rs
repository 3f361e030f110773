use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{binomial, powi, rat, Rational};

/// A closed-form function of an integer argument,
/// `f(n) = Σ_t (Σ_j c_{t,j} n^j) · b_t^n`.
///
/// Terms are keyed by their (nonzero, pairwise distinct) base in increasing
/// order and every stored coefficient list has a nonzero leading entry, so
/// structural equality coincides with equality as functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpPoly {
    terms: BTreeMap<Rational, Vec<Rational>>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(vec![c])
    }

    /// Polynomial in `n`, coefficients in increasing degree.
    pub fn poly(coeffs: Vec<Rational>) -> Self {
        Self::term(Rational::one(), coeffs)
    }

    /// `n ↦ base^n`.
    pub fn exp(base: Rational) -> Self {
        Self::term(base, vec![Rational::one()])
    }

    /// `n ↦ p(n)·base^n`. Panics on a zero base.
    pub fn term(base: Rational, coeffs: Vec<Rational>) -> Self {
        assert!(!base.is_zero(), "exponential base must be nonzero");
        let mut out = Self::zero();
        out.insert(base, coeffs);
        out
    }

    /// `n ↦ c·n^degree·base^n`.
    pub fn monomial(c: Rational, degree: usize, base: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::term(base, coeffs)
    }

    /// Builds a canonical value from arbitrary `(base, coeffs)` pairs, merging
    /// equal bases.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<Rational>)>,
    {
        let mut out = Self::zero();
        for (base, coeffs) in terms {
            assert!(!base.is_zero(), "exponential base must be nonzero");
            out.insert(base, coeffs);
        }
        out
    }

    fn insert(&mut self, base: Rational, coeffs: Vec<Rational>) {
        let merged = match self.terms.remove(&base) {
            Some(existing) => poly_add(&existing, &coeffs),
            None => poly_trim(coeffs),
        };
        if !merged.is_empty() {
            self.terms.insert(base, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(base, coefficients)` in increasing base order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &[Rational])> {
        self.terms.iter().map(|(b, c)| (b, c.as_slice()))
    }

    pub fn bases(&self) -> impl Iterator<Item = &Rational> {
        self.terms.keys()
    }

    pub fn coefficients(&self, base: &Rational) -> Option<&[Rational]> {
        self.terms.get(base).map(Vec::as_slice)
    }

    /// The polynomial multiplying `1^n`.
    pub fn polynomial_part(&self) -> &[Rational] {
        self.coefficients(&Rational::one()).unwrap_or(&[])
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Each term weighs its polynomial degree plus one.
    pub fn complexity(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// `Some(c)` when the function is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let c = self.terms.get(&Rational::one())?;
                (c.len() == 1).then(|| c[0].clone())
            }
            _ => None,
        }
    }

    pub fn eval(&self, n: i64) -> Rational {
        let x = rat(n);
        self.terms
            .iter()
            .map(|(base, coeffs)| poly_eval(coeffs, &x) * powi(base, n))
            .sum()
    }

    pub fn table(&self, levels: std::ops::Range<i64>) -> Vec<Rational> {
        levels.map(|n| self.eval(n)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(b, p)| (b.clone(), p.iter().map(|x| x * c).collect()))
                .collect(),
        }
    }

    /// Multiplies by `base^n`.
    pub fn times_exp(&self, base: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, p)| (b * base, p.clone())))
    }

    /// `n ↦ f(n + d)`.
    pub fn shift(&self, d: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, p)| {
            let factor = powi(b, d);
            let shifted = poly_shift(p, &rat(d));
            (b.clone(), shifted.into_iter().map(|c| c * &factor).collect())
        }))
    }

    /// Forward difference `n ↦ f(n+1) - f(n)`.
    pub fn difference(&self) -> Self {
        &self.shift(1) - self
    }

    /// `n ↦ Σ_{i=0}^{n-1} f(i)` in closed form; zero at `n = 0`.
    ///
    /// Base-one terms gain one polynomial degree; every other base `b`
    /// contributes `b^n R(n) - R(0)` with `b R(n+1) - R(n) = p(n)`.
    pub fn prefix_sum(&self) -> Self {
        let mut out = Self::zero();
        for (base, p) in &self.terms {
            if base.is_one() {
                out.insert(base.clone(), poly_antidifference(p));
            } else {
                let r = poly_geometric_antidifference(p, base);
                let r0 = r.first().cloned().unwrap_or_else(Rational::zero);
                out.insert(base.clone(), r);
                out.insert(Rational::one(), vec![-r0]);
            }
        }
        out
    }
}

impl fmt::Display for ExpPoly {
    /// Renders as `c*n^j*b^n` monomials joined by ` + ` / ` - `, readable by
    /// the CLI expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (base, coeffs) in &self.terms {
            for (deg, c) in coeffs.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let magnitude = c.abs();
                if first {
                    if c.is_negative() {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if c.is_negative() { " - " } else { " + " })?;
                }
                first = false;
                let mut factors: Vec<String> = Vec::new();
                let unit = magnitude.is_one() && (deg > 0 || !base.is_one());
                if !unit {
                    factors.push(magnitude.to_string());
                }
                match deg {
                    0 => {}
                    1 => factors.push("n".into()),
                    _ => factors.push(format!("n^{deg}")),
                }
                if !base.is_one() {
                    if base.is_integer() && base.is_positive() {
                        factors.push(format!("{base}^n"));
                    } else {
                        factors.push(format!("({base})^n"));
                    }
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = self.clone();
        for (b, p) in &rhs.terms {
            out.insert(b.clone(), p.clone());
        }
        out
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        self.scale(&-Rational::one())
    }
}

impl Sub for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        self + &(-rhs)
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        let mut out = ExpPoly::zero();
        for (b1, p1) in &self.terms {
            for (b2, p2) in &rhs.terms {
                out.insert(b1 * b2, poly_mul(p1, p2));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExpPoly {
            type Output = ExpPoly;
            fn $m(self, rhs: ExpPoly) -> ExpPoly { (&self).$m(&rhs) }
        }
        impl $tr<&ExpPoly> for ExpPoly {
            type Output = ExpPoly;
            fn $m(self, rhs: &ExpPoly) -> ExpPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        -&self
    }
}

impl std::iter::Sum for ExpPoly {
    fn sum<I: Iterator<Item = ExpPoly>>(iter: I) -> Self {
        iter.fold(ExpPoly::zero(), |acc, x| acc + x)
    }
}

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let zero = Rational::zero();
    poly_trim(
        (0..len)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Coefficients of `p(n + d)`.
fn poly_shift(p: &[Rational], d: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len()];
    for (j, c) in p.iter().enumerate() {
        for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
            *slot += c * binomial(j as u64, i as u64) * powi(d, (j - i) as i64);
        }
    }
    poly_trim(out)
}

/// `R` with `R(n+1) - R(n) = p(n)` and `R(0) = 0`; one degree higher than `p`.
fn poly_antidifference(p: &[Rational]) -> Vec<Rational> {
    if p.is_empty() {
        return Vec::new();
    }
    let deg = p.len() - 1;
    let mut r = vec![Rational::zero(); deg + 2];
    // the n^j coefficient of R(n+1) - R(n) is Σ_{m>j} r_m C(m, j)
    for j in (0..=deg).rev() {
        let tail: Rational = (j + 2..=deg + 1)
            .map(|m| &r[m] * binomial(m as u64, j as u64))
            .sum();
        r[j + 1] = (&p[j] - tail) / rat(j as i64 + 1);
    }
    poly_trim(r)
}

/// `R` of the same degree as `p` with `b·R(n+1) - R(n) = p(n)`, for `b ≠ 1`.
fn poly_geometric_antidifference(p: &[Rational], b: &Rational) -> Vec<Rational> {
    let deg = p.len();
    let mut r = vec![Rational::zero(); deg];
    let denom = b - Rational::one();
    // (b-1)·r_j + b·Σ_{m>j} r_m C(m, j) = p_j
    for j in (0..deg).rev() {
        let tail: Rational = (j + 1..deg)
            .map(|m| &r[m] * binomial(m as u64, j as u64))
            .sum();
        r[j] = (&p[j] - b * tail) / &denom;
    }
    poly_trim(r)
}
