//! Jackson and multi-parameter q-derivatives of polynomials.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{omega, powi, Rational};
use crate::Result;

/// A polynomial in `x`, coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    /// `c x^ℓ`.
    pub fn monomial(c: Rational, ell: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); ell];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^ℓ` (zero beyond the degree).
    pub fn coefficient(&self, ell: usize) -> Rational {
        self.coeffs.get(ell).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }

    /// `g(c x)`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => write!(f, "-")?,
                (true, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{var}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

/// `(g(qx) - g(x)) / (x (q - 1))`, and `g'` at `q = 1`.
pub fn jackson_derivative(q: &Rational, g: &Poly) -> Poly {
    if q.is_one() {
        return g.derivative();
    }
    let numerator = g.dilate(q).add(&g.scale(&-Rational::one()));
    // the constant term of the numerator vanishes, so dividing by x is a shift
    let denom = q - Rational::one();
    Poly::new(numerator.coeffs.iter().skip(1).map(|c| c / &denom).collect())
}

/// `Σ_i ω_i D_{q_i} g`, which sends `x^ℓ` to `F(ℓ) x^{ℓ-1}`.
pub fn multi_q_derivative(params: &[Rational], g: &Poly) -> Result<Poly> {
    let mut acc = Poly::zero();
    for (i, q) in params.iter().enumerate() {
        acc = acc.add(&jackson_derivative(q, g).scale(&omega(params, i)?));
    }
    Ok(acc)
}

/// Weights of the pair `(q, 1/q)`: `(q/(q+1), 1/(q+1))`.
pub fn mb_weights(q: &Rational) -> (Rational, Rational) {
    let denom = q + Rational::one();
    (q / &denom, denom.recip())
}

/// `[ℓ]_q`, the eigenvalue of a single Jackson derivative on `x^ℓ`.
pub fn jackson_eigenvalue(q: &Rational, ell: u32) -> Rational {
    if q.is_one() {
        return Rational::from_integer(ell.into());
    }
    (powi(q, ell as i64) - Rational::one()) / (q - Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::chain;
    use crate::exact::{frac, q_integer, rat, ExpPoly};

    #[test]
    fn jackson_examples() {
        let cube = Poly::monomial(rat(1), 3);
        assert_eq!(jackson_derivative(&rat(2), &cube), Poly::monomial(rat(7), 2));
        assert_eq!(jackson_derivative(&rat(1), &cube), Poly::monomial(rat(3), 2));
        assert!(jackson_derivative(&frac(2, 3), &Poly::new(vec![rat(5)])).is_zero());
        for ell in 0..8u32 {
            let q = frac(-3, 4);
            let d = jackson_derivative(&q, &Poly::monomial(rat(1), ell as usize));
            assert_eq!(d.coefficient(ell.saturating_sub(1) as usize), q_integer(&q, ell));
            assert_eq!(q_integer(&q, ell), jackson_eigenvalue(&q, ell));
        }
    }

    #[test]
    fn multi_examples() {
        let p = [rat(2), frac(1, 2)];
        assert_eq!(
            multi_q_derivative(&p, &Poly::monomial(rat(1), 2)).unwrap(),
            Poly::monomial(frac(5, 2), 1)
        );
        assert_eq!(
            multi_q_derivative(&p, &Poly::monomial(rat(1), 1)).unwrap(),
            Poly::new(vec![rat(1)])
        );
        let q = frac(7, 3);
        assert_eq!(
            multi_q_derivative(&[q.clone()], &Poly::monomial(rat(1), 5)).unwrap(),
            Poly::monomial(q_integer(&q, 5), 4)
        );
        assert!(multi_q_derivative(&[rat(2), rat(2)], &Poly::zero()).is_err());
    }

    #[test]
    fn matches_chain_structure() {
        let p = [rat(3), frac(-1, 2), frac(2, 5)];
        let c = chain(&ExpPoly::one(), &p).unwrap();
        let f = c.last_structure();
        for ell in 1..=20usize {
            let d = multi_q_derivative(&p, &Poly::monomial(rat(1), ell)).unwrap();
            assert_eq!(d, Poly::monomial(f.eval(ell as i64), ell - 1));
        }
    }

    #[test]
    fn mb_weight_pair() {
        let q = frac(5, 3);
        let (w1, w2) = mb_weights(&q);
        let p = [q.clone(), q.recip()];
        assert_eq!(omega(&p, 0).unwrap(), w1);
        assert_eq!(omega(&p, 1).unwrap(), w2);
        // ω_q = (q - 1)/(q - q⁻¹)
        assert_eq!(w1, (&q - rat(1)) / (&q - q.recip()));
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![rat(-1), rat(0), frac(5, 2), rat(1)]);
        assert_eq!(p.to_string(), "x^3 + 5/2*x^2 - 1");
    }
}
