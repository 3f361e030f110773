use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::FockWindow;
use crate::exact::{rat, ExpPoly, Rational};
use crate::{Error, Result};

/// An operator in weighted-shift normal form on a [`FockWindow`].
///
/// Degree `d ≥ 0` stores `h_d` for the term `(a†)^d h_d(n̂)`; degree `d < 0`
/// stores `h_d` for `h_d(n̂) a^{|d|}`. Each sequence is known on a prefix of
/// levels; products shorten prefixes where shifted arguments leave the
/// stored range, and missing degrees are identically zero.
#[derive(Clone, Debug)]
pub struct Operator {
    window: Arc<FockWindow>,
    terms: BTreeMap<i64, Vec<Rational>>,
}

/// First level where two operators differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub degree: i64,
    pub level: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {} level {}: {} != {}",
            self.degree, self.level, self.lhs, self.rhs
        )
    }
}

/// Outcome of comparing two operators on the window interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Number of `(degree, level)` entries compared.
    pub checked: usize,
    /// Interior entries that could not be compared because a sequence was
    /// not determined there.
    pub uncovered: usize,
    pub discrepancy: Option<Discrepancy>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            holds: true,
            checked: 0,
            uncovered: 0,
            discrepancy: None,
        }
    }

    /// True when the relation holds and every interior entry was compared.
    pub fn complete(&self) -> bool {
        self.holds && self.uncovered == 0
    }

    pub fn and(mut self, other: Verdict) -> Verdict {
        self.checked += other.checked;
        self.uncovered += other.uncovered;
        if self.holds && !other.holds {
            self.holds = false;
            self.discrepancy = other.discrepancy;
        }
        self
    }
}

impl Operator {
    pub fn zero(window: &Arc<FockWindow>) -> Self {
        Self {
            window: Arc::clone(window),
            terms: BTreeMap::new(),
        }
    }

    pub fn window(&self) -> &Arc<FockWindow> {
        &self.window
    }

    fn full_sequence(window: &FockWindow, f: impl Fn(i64) -> Rational) -> Vec<Rational> {
        (0..window.capacity() as i64).map(f).collect()
    }

    fn single(window: &Arc<FockWindow>, degree: i64, seq: Vec<Rational>) -> Self {
        let mut op = Self::zero(window);
        op.put(degree, seq);
        op
    }

    pub fn identity(window: &Arc<FockWindow>) -> Self {
        Self::scalar(window, Rational::one())
    }

    pub fn scalar(window: &Arc<FockWindow>, c: Rational) -> Self {
        let seq = Self::full_sequence(window, |_| c.clone());
        Self::single(window, 0, seq)
    }

    /// The annihilation operator `a`.
    pub fn annihilation(window: &Arc<FockWindow>) -> Self {
        let seq = Self::full_sequence(window, |_| Rational::one());
        Self::single(window, -1, seq)
    }

    /// The creation operator `a†`.
    pub fn creation(window: &Arc<FockWindow>) -> Self {
        let seq = Self::full_sequence(window, |_| Rational::one());
        Self::single(window, 1, seq)
    }

    /// The number operator `n̂`.
    pub fn number(window: &Arc<FockWindow>) -> Self {
        Self::diag(window, &ExpPoly::poly(vec![rat(0), rat(1)]))
    }

    /// `h(n̂)` for a closed-form `h`.
    pub fn diag(window: &Arc<FockWindow>, h: &ExpPoly) -> Self {
        let seq = Self::full_sequence(window, |n| h.eval(n));
        Self::single(window, 0, seq)
    }

    /// `h(n̂)` from tabulated values `h(0), h(1), …`.
    pub fn diag_values(window: &Arc<FockWindow>, values: Vec<Rational>) -> Self {
        Self::single(window, 0, values)
    }

    /// `(a†)^p h(n̂) a^r` for a closed-form `h`.
    pub fn sandwich(window: &Arc<FockWindow>, p: u32, h: &ExpPoly, r: u32) -> Self {
        let create = Self::creation(window).pow(p);
        let annihilate = Self::annihilation(window).pow(r);
        create
            .mul(&Self::diag(window, h))
            .and_then(|x| x.mul(&annihilate))
            .expect("operators built on one window")
    }

    fn put(&mut self, degree: i64, seq: Vec<Rational>) {
        if seq.iter().all(Zero::is_zero) {
            self.terms.remove(&degree);
        } else {
            self.terms.insert(degree, seq);
        }
    }

    /// Coefficient sequence of degree `d`, if present.
    pub fn coefficients(&self, degree: i64) -> Option<&[Rational]> {
        self.terms.get(&degree).map(Vec::as_slice)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    fn same_window(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.window, &other.window) || *self.window == *other.window {
            Ok(())
        } else {
            Err(Error::WindowMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self> {
        self.same_window(other)?;
        let zero = Rational::zero();
        let mut out = Self::zero(&self.window);
        let degrees: std::collections::BTreeSet<i64> =
            self.degrees().chain(other.degrees()).collect();
        for d in degrees {
            let seq = match (self.terms.get(&d), other.terms.get(&d)) {
                (Some(x), Some(y)) => x.iter().zip(y).map(|(a, b)| f(a, b)).collect(),
                (Some(x), None) => x.iter().map(|a| f(a, &zero)).collect(),
                (None, Some(y)) => y.iter().map(|b| f(&zero, b)).collect(),
                (None, None) => unreachable!(),
            };
            out.put(d, seq);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.window);
        for (d, seq) in &self.terms {
            out.put(*d, seq.iter().map(|x| x * c).collect());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_window(other)?;
        let mut out = Self::zero(&self.window);
        for (&d1, g1) in &self.terms {
            for (&d2, g2) in &other.terms {
                let (degree, seq) = self.term_product(d1, g1, d2, g2);
                let acc = match out.terms.remove(&degree) {
                    Some(prev) => prev.iter().zip(&seq).map(|(a, b)| a + b).collect(),
                    None => seq,
                };
                out.put(degree, acc);
            }
        }
        Ok(out)
    }

    /// Normal form of `[(a†)^{p1} g1 a^{r1}] · [(a†)^{p2} g2 a^{r2}]`.
    fn term_product(
        &self,
        d1: i64,
        g1: &[Rational],
        d2: i64,
        g2: &[Rational],
    ) -> (i64, Vec<Rational>) {
        let f = &*self.window;
        let (p1, r1) = (d1.max(0), (-d1).max(0));
        let (p2, r2) = (d2.max(0), (-d2).max(0));
        let at = |g: &[Rational], i: i64| usize::try_from(i).ok().and_then(|i| g.get(i)).cloned();
        // Π_{i=1}^{m} F(x+i), from a^m (a†)^m
        let rising = |x: i64, m: i64| -> Option<Rational> {
            (1..=m).try_fold(Rational::one(), |acc, i| f.value(x + i).map(|v| acc * v))
        };
        // a^{r1} (a†)^{p2} is pushed to the middle, leaving (a†)^p G(n̂) a^r
        let (p, r, middle): (i64, i64, Box<dyn Fn(i64) -> Option<Rational>>) = if r1 >= p2 {
            let s = r1 - p2;
            (
                p1,
                s + r2,
                Box::new(move |l| Some(at(g1, l)? * rising(l + s, p2)? * at(g2, l + s)?)),
            )
        } else {
            let s = p2 - r1;
            (
                p1 + s,
                r2,
                Box::new(move |l| Some(at(g1, l + s)? * rising(l + s, r1)? * at(g2, l)?)),
            )
        };
        // (a†)^p G(n̂) a^r = (a†)^{p-m} G(n̂-m) Π_{i<m} F(n̂-i) a^{r-m}, m = min(p, r)
        let m = p.min(r);
        let falling = |x: i64| -> Option<Rational> {
            (0..m).try_fold(Rational::one(), |acc, i| f.value(x - i).map(|v| acc * v))
        };
        let mut seq = Vec::new();
        for l in 0..f.capacity() as i64 {
            let value = if l < m {
                Some(Rational::zero())
            } else {
                middle(l - m).and_then(|g| Some(g * falling(l)?))
            };
            match value {
                Some(v) => seq.push(v),
                None => break,
            }
        }
        (p - r, seq)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::identity(&self.window);
        for _ in 0..e {
            out = out.mul(self).expect("same window");
        }
        out
    }

    /// `A B - Q B A`.
    pub fn quommutator(&self, other: &Self, q: &Rational) -> Result<Self> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        ab.sub(&ba.scale(q))
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.quommutator(other, &Rational::one())
    }

    /// Levels `0..len` at degree `d` that lie inside the window
    /// (`ℓ + |d| < size`).
    fn interior_len(&self, degree: i64) -> usize {
        self.window.size().saturating_sub(degree.unsigned_abs() as usize)
    }

    /// Exact comparison on the window interior.
    pub fn verify_eq(&self, other: &Self) -> Result<Verdict> {
        self.same_window(other)?;
        let degrees: std::collections::BTreeSet<i64> =
            self.degrees().chain(other.degrees()).collect();
        let zero = Rational::zero();
        let mut verdict = Verdict::pass();
        for d in degrees {
            let interior = self.interior_len(d);
            let lhs = self.terms.get(&d);
            let rhs = other.terms.get(&d);
            let known = |s: Option<&Vec<Rational>>| s.map_or(usize::MAX, Vec::len);
            let len = interior.min(known(lhs)).min(known(rhs));
            verdict.uncovered += interior - len;
            for l in 0..len {
                let x = lhs.map_or(&zero, |s| &s[l]);
                let y = rhs.map_or(&zero, |s| &s[l]);
                verdict.checked += 1;
                if x != y && verdict.holds {
                    verdict.holds = false;
                    verdict.discrepancy = Some(Discrepancy {
                        degree: d,
                        level: l,
                        lhs: x.clone(),
                        rhs: y.clone(),
                    });
                }
            }
        }
        Ok(verdict)
    }

    /// Diagonal values on the window when the operator has degree 0 only.
    pub fn diagonal(&self) -> Option<Vec<Rational>> {
        if self.terms.keys().any(|&d| d != 0) {
            return None;
        }
        let size = self.window.size();
        Some(match self.terms.get(&0) {
            Some(seq) => seq.iter().take(size).cloned().collect(),
            None => vec![Rational::zero(); size],
        })
    }

    /// `(degree, level, value)` triples on the window interior, in
    /// lexicographic order.
    pub fn dump(&self) -> Vec<(i64, usize, Rational)> {
        let mut out = Vec::new();
        for (&d, seq) in &self.terms {
            let len = self.interior_len(d).min(seq.len());
            out.extend(seq[..len].iter().enumerate().map(|(l, v)| (d, l, v.clone())));
        }
        out
    }
}

/// `lhs == rhs` on the shared window interior.
pub fn verify_relation(lhs: &Operator, rhs: &Operator) -> Result<Verdict> {
    lhs.verify_eq(rhs)
}
