//! Normal ordering of `(a† a)^m` and the deformed Stirling coefficients.
//!
//! Under `[a, a†]_q = f(n̂)` one has `[a^ℓ, a†]_{q^ℓ} = {ℓ(n̂)} a^{ℓ-1}` with the
//! bracket `{ℓ(n)} = Σ_{i<ℓ} q^{ℓ-1-i} f(n+i)`, which drives the recurrence
//! `C_{m+1,ℓ}(n) = q^{ℓ-1} C_{m,ℓ-1}(n+1) + {ℓ(n)} C_{m,ℓ}(n)`.
//! The commutator form (`q = 1`, bar variant) uses `Σ_{i<ℓ} f(n+i)` instead.

use std::sync::Arc;

use num_traits::One;

use crate::exact::{powi, ExpPoly, Rational};
use crate::opalg::{FockWindow, Operator, Verdict};
use crate::Result;

/// `{ℓ(n)} = Σ_{i<ℓ} q^{ℓ-1-i} f(n+i)`.
pub fn bracket(f: &ExpPoly, q: &Rational, ell: u32) -> ExpPoly {
    (0..ell as i64)
        .map(|i| f.shift(i).scale(&powi(q, ell as i64 - 1 - i)))
        .sum()
}

/// `Σ_{i<ℓ} f(n+i)`.
pub fn bracket_bar(f: &ExpPoly, ell: u32) -> ExpPoly {
    bracket(f, &Rational::one(), ell)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Expansion under `[a, a†]_q = f`.
    Quommutator,
    /// Expansion under `[a, a†] = f` (the bar coefficients).
    Commutator,
}

/// `C_{m,ℓ}(n̂)` for `1 ≤ ℓ ≤ m ≤ m_max` in
/// `(a† a)^m = Σ_ℓ (a†)^ℓ C_{m,ℓ}(n̂) a^ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalOrderTable {
    pub variant: Variant,
    pub f: ExpPoly,
    pub q: Rational,
    rows: Vec<Vec<ExpPoly>>,
}

impl NormalOrderTable {
    fn build(variant: Variant, f: &ExpPoly, q: &Rational, m_max: usize) -> Self {
        let m_max = m_max.max(1);
        let brackets: Vec<ExpPoly> = (1..=m_max as u32).map(|l| bracket(f, q, l)).collect();
        let mut rows = vec![vec![ExpPoly::one()]];
        for m in 1..m_max {
            let prev = &rows[m - 1];
            let row = (1..=m + 1)
                .map(|l| {
                    let lowered = match l {
                        1 => ExpPoly::zero(),
                        _ => prev[l - 2].shift(1).scale(&powi(q, l as i64 - 1)),
                    };
                    let kept = match prev.get(l - 1) {
                        Some(c) => &brackets[l - 1] * c,
                        None => ExpPoly::zero(),
                    };
                    lowered + kept
                })
                .collect();
            rows.push(row);
        }
        Self {
            variant,
            f: f.clone(),
            q: q.clone(),
            rows,
        }
    }

    pub fn m_max(&self) -> usize {
        self.rows.len()
    }

    /// `C_{m,ℓ}`; zero outside `1 ≤ ℓ ≤ m ≤ m_max`.
    pub fn entry(&self, m: usize, ell: usize) -> ExpPoly {
        if ell == 0 || m == 0 || ell > m {
            return ExpPoly::zero();
        }
        self.rows
            .get(m - 1)
            .and_then(|r| r.get(ell - 1))
            .cloned()
            .unwrap_or_default()
    }

    /// Row `m`, entries `ℓ = 1..=m`.
    pub fn row(&self, m: usize) -> &[ExpPoly] {
        &self.rows[m - 1]
    }

    /// `Σ_ℓ (a†)^ℓ C_{m,ℓ}(n̂) a^ℓ` on a window.
    pub fn expansion(&self, window: &Arc<FockWindow>, m: usize) -> Result<Operator> {
        let mut acc = Operator::zero(window);
        for (i, c) in self.row(m).iter().enumerate() {
            let l = i as u32 + 1;
            acc = acc.add(&Operator::sandwich(window, l, c, l))?;
        }
        Ok(acc)
    }
}

/// Coefficients for `[a, a†]_q = f`.
pub fn normal_order_table(f: &ExpPoly, q: &Rational, m_max: usize) -> NormalOrderTable {
    NormalOrderTable::build(Variant::Quommutator, f, q, m_max)
}

/// Coefficients for `[a, a†] = f`.
pub fn normal_order_table_bar(f: &ExpPoly, m_max: usize) -> NormalOrderTable {
    NormalOrderTable::build(Variant::Commutator, f, &Rational::one(), m_max)
}

/// Checks the table's defining relation on the window and then
/// `(a† a)^m = Σ_ℓ (a†)^ℓ C_{m,ℓ} a^ℓ` for every row.
///
/// An inconsistent window fails at the first step with its witness.
pub fn verify_normal_order(table: &NormalOrderTable, window: &Arc<FockWindow>) -> Result<Verdict> {
    let a = Operator::annihilation(window);
    let ad = Operator::creation(window);
    let relation = a.quommutator(&ad, &table.q)?;
    let mut verdict = relation.verify_eq(&Operator::diag(window, &table.f))?;
    if !verdict.holds {
        return Ok(verdict);
    }
    let number_like = ad.mul(&a)?;
    let mut power = Operator::identity(window);
    for m in 1..=table.m_max() {
        power = power.mul(&number_like)?;
        verdict = verdict.and(power.verify_eq(&table.expansion(window, m)?)?);
    }
    Ok(verdict)
}
