//! The exact identity battery behind `qoscil verify`.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::casimir::{casimir_commutator, casimir_quommutator, verify_casimir_relation, verify_centrality};
use crate::deform::family::{qcv_quommutator, qcv_rhs};
use crate::deform::{self, DeformationChain, FamilyName, Oscillator, QcvParams, QcvSign};
use crate::exact::{omega, phi, phi_partial_fraction, rat, residue_sum, ExpPoly, Rational, WeightVector};
use crate::inverse::{best_q, to_q_quommutator, to_unit_quommutator};
use crate::opalg::{structure_from_quommutator, FockWindow, Operator, Verdict};
use crate::ordering::{normal_order_table, normal_order_table_bar, verify_normal_order};
use crate::qcalc::{mb_weights, multi_q_derivative, Poly};
use crate::Result;

use super::output::{Cell, Document, Table};
use super::{build_family, FamilyArgs, Outcome, Suite};

/// One line of the report.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

/// Runs `suite` and collects the results sorted by identity id.
pub fn run_checks(suite: Suite, seed: u64, size: usize) -> Vec<CheckResult> {
    let mut b = Battery {
        rng: StdRng::seed_from_u64(seed),
        size,
        results: Vec::new(),
    };
    let all = suite == Suite::All;
    if all || suite == Suite::Exact {
        b.exact();
    }
    if all || suite == Suite::Equivalence {
        b.equivalence();
    }
    if all || suite == Suite::Ordering {
        b.ordering();
    }
    if all || suite == Suite::Inverse {
        b.inverse();
    }
    if all || suite == Suite::Casimir {
        b.casimir();
    }
    if all || suite == Suite::Qcalc {
        b.qcalc();
    }
    b.results.sort_by(|x, y| x.id.cmp(&y.id));
    b.results
}

pub fn run_suite(suite: Suite, seed: u64, size: usize) -> Outcome {
    let results = run_checks(suite, seed, size);
    let holds = results.iter().all(|r| r.holds);
    let mut doc = Document::default();
    doc.field("seed", Cell::int(seed as i64));
    doc.field("window", Cell::int(size as i64));
    doc.field("passed", Cell::int(results.iter().filter(|r| r.holds).count() as i64));
    doc.field("failed", Cell::int(results.iter().filter(|r| !r.holds).count() as i64));
    let mut t = Table::new("identities", &["id", "status", "checked", "identity", "witness"]);
    for r in &results {
        t.push(vec![
            Cell::str(r.id.clone()),
            Cell::str(if r.holds { "PASS" } else { "FAIL" }),
            Cell::int(r.checked as i64),
            Cell::str(r.description.clone()),
            Cell::str(r.witness.clone().unwrap_or_default()),
        ]);
    }
    doc.table(t);
    Outcome { document: doc, holds }
}

struct Battery {
    rng: StdRng,
    size: usize,
    results: Vec<CheckResult>,
}

/// Running tally of one identity over many instances.
struct Tally {
    holds: bool,
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            holds: true,
            checked: 0,
            witness: None,
        }
    }

    fn expect(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.holds {
            self.holds = false;
            self.witness = Some(context());
        }
    }

    fn verdict(&mut self, v: Verdict, context: impl FnOnce() -> String) {
        self.checked += v.checked;
        if !v.complete() && self.holds {
            self.holds = false;
            let detail = v
                .discrepancy
                .map_or_else(|| format!("{} entries uncovered", v.uncovered), |d| d.to_string());
            self.witness = Some(format!("{}: {detail}", context()));
        }
    }
}

fn quommutator_relation(window: &Arc<FockWindow>, q: &Rational, rhs: &ExpPoly) -> Result<Verdict> {
    let a = Operator::annihilation(window);
    let ad = Operator::creation(window);
    a.quommutator(&ad, q)?.verify_eq(&Operator::diag(window, rhs))
}

fn list(params: &[Rational]) -> String {
    params.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl Battery {
    fn record(&mut self, id: &str, description: &str, body: impl FnOnce(&mut Self, &mut Tally) -> Result<()>) {
        let mut tally = Tally::new();
        if let Err(e) = body(self, &mut tally) {
            tally.holds = false;
            tally.witness = Some(format!("error: {e}"));
        }
        self.results.push(CheckResult {
            id: id.into(),
            description: description.into(),
            holds: tally.holds,
            checked: tally.checked,
            witness: tally.witness,
        });
    }

    fn rational(&mut self) -> Rational {
        loop {
            let num: i64 = self.rng.gen_range(-9..=9);
            let den: i64 = self.rng.gen_range(1..=6);
            let r = Rational::new(num.into(), den.into());
            if !r.is_zero() && r.abs_ne_one() {
                return r;
            }
        }
    }

    /// `k` distinct rationals, none of them `0` or `±1`.
    fn distinct(&mut self, k: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        while out.len() < k {
            let r = self.rational();
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    fn random_chain(&mut self, max_depth: usize) -> Result<DeformationChain> {
        let k = self.rng.gen_range(1..=max_depth);
        let params = self.distinct(k);
        deform::chain(&ExpPoly::one(), &params)
    }

    fn catalog(&mut self) -> Result<Vec<Oscillator>> {
        let mut out = Vec::new();
        for name in FamilyName::ALL {
            let q = self.rational();
            let args = FamilyArgs {
                q: Some(q.clone()),
                q1: Some(q.clone()),
                q2: Some(self.rational()).filter(|q2| q2 != &q).or(Some(&q + rat(1))),
                nu: Some(self.rational()),
                t: Some(self.rational()),
                sign: if self.rng.gen_bool(0.5) {
                    super::SignArg::Upper
                } else {
                    super::SignArg::Lower
                },
                big_q: None,
            };
            out.push(build_family(name, &args)?);
        }
        Ok(out)
    }

    fn exact(&mut self) {
        self.record(
            "exact.residue-identity",
            "Σ_i (q_i-1)^ℓ / Π'(q_i-q_m) is 1 for ℓ = k-1 and 0 below; weights sum to 1",
            |b, t| {
                for _ in 0..40 {
                    let k = b.rng.gen_range(1..=6);
                    let params = b.distinct(k);
                    for ell in 0..k as u32 {
                        let expected = if ell as usize == k - 1 { Rational::one() } else { Rational::zero() };
                        t.expect(residue_sum(&params, ell)? == expected, || {
                            format!("params {} at ℓ = {ell}", list(&params))
                        });
                    }
                    t.expect(WeightVector::new(&params)?.total().is_one(), || list(&params));
                }
                Ok(())
            },
        );
        self.record(
            "exact.phi-partial-fractions",
            "complete homogeneous sums equal their partial-fraction expansion",
            |b, t| {
                for _ in 0..20 {
                    let k = b.rng.gen_range(1..=5);
                    let params = b.distinct(k);
                    for ell in 0..12 {
                        t.expect(phi(&params, ell) == phi_partial_fraction(&params, ell)?, || {
                            format!("params {} at ℓ = {ell}", list(&params))
                        });
                    }
                }
                Ok(())
            },
        );
        self.record(
            "exact.structure-is-weighted-average",
            "F_k(ℓ) from the recursion equals Σ_i ω_i [ℓ]_{q_i}",
            |b, t| {
                for _ in 0..20 {
                    let c = b.random_chain(5)?;
                    let w = WeightVector::new(&c.params())?;
                    let f = c.last_structure();
                    for ell in 0..20u32 {
                        t.expect(f.eval(ell as i64) == w.average_q_integer(ell), || {
                            format!("params {} at ℓ = {ell}", list(&c.params()))
                        });
                    }
                }
                Ok(())
            },
        );
    }

    fn equivalence(&mut self) {
        let n = self.size;
        self.record(
            "equivalence.catalog",
            "every catalog oscillator satisfies [a,a†]_Q = rhs and [a,a†] = f on one window",
            |b, t| {
                for osc in b.catalog()? {
                    let w = Arc::new(osc.window(n)?);
                    t.verdict(quommutator_relation(&w, &osc.deformation, &osc.quommutator_rhs)?, || {
                        format!("{} quommutator", osc.name)
                    });
                    t.verdict(quommutator_relation(&w, &Rational::one(), &osc.commutator)?, || {
                        format!("{} commutator", osc.name)
                    });
                }
                Ok(())
            },
        );
        self.record(
            "equivalence.chains",
            "each step j of a random chain: [a,a†]_{q_{j+1}} = f_j and [a,a†] = f_{j+1} on the window of F_{j+1}",
            |b, t| {
                for _ in 0..6 {
                    let c = b.random_chain(4)?;
                    for (j, step) in c.steps().iter().enumerate() {
                        let w = Arc::new(FockWindow::from_structure(&step.structure, n)?);
                        let prev = c.commutator(j).expect("j < depth");
                        let ctx = || format!("params {} step {}", list(&c.params()), j + 1);
                        t.verdict(quommutator_relation(&w, &step.param, prev)?, ctx);
                        t.verdict(quommutator_relation(&w, &Rational::one(), &step.commutator)?, ctx);
                    }
                }
                Ok(())
            },
        );
        self.record(
            "equivalence.simultaneous",
            "with distinct parameters, [a,a†]_{q_i} = f_{k-1}(params without q_i) for every i",
            |b, t| {
                for _ in 0..4 {
                    let k = b.rng.gen_range(2..=4);
                    let params = b.distinct(k);
                    let full = deform::chain(&ExpPoly::one(), &params)?;
                    let w = Arc::new(FockWindow::from_structure(&full.last_structure(), n)?);
                    for i in 0..k {
                        let mut rest = params.clone();
                        let qi = rest.remove(i);
                        let reduced = deform::chain(&ExpPoly::one(), &rest)?;
                        t.verdict(quommutator_relation(&w, &qi, reduced.last_commutator())?, || {
                            format!("params {} without q_{}", list(&params), i + 1)
                        });
                    }
                }
                Ok(())
            },
        );
        self.record(
            "equivalence.known-forms",
            "Arik-Coon gives q^n, q = -1 gives (-1)^n, CJ at q1 = 1/q2 is MB, CV gives 1 + 2ν(-1)^n",
            |b, t| {
                let q = b.rational();
                let ac = deform::arik_coon(&q)?;
                t.expect(ac.commutator == ExpPoly::exp(q.clone()), || format!("arik-coon q = {q}"));
                let parity = deform::chain(&ExpPoly::one(), &[rat(-1)])?;
                t.expect(parity.last_commutator() == &ExpPoly::exp(rat(-1)), || "q = -1".into());
                let cj = deform::chakrabarti_jagannathan(&q.recip(), &q)?;
                let mb = deform::macfarlane_biedenharn(&q)?;
                t.expect(cj.commutator == mb.commutator, || format!("cj vs mb at q = {q}"));
                let expected = ExpPoly::constant((&q + rat(1)).recip())
                    * (ExpPoly::exp(q.clone()).scale(&q) + ExpPoly::exp(q.recip()));
                t.expect(mb.commutator == expected, || format!("mb rational form at q = {q}"));
                let nu = b.rational();
                let cv = deform::calogero_vasiliev(&nu)?;
                let expected = ExpPoly::one() + ExpPoly::exp(rat(-1)).scale(&(rat(2) * &nu));
                t.expect(cv.commutator == expected, || format!("cv ν = {nu}"));
                Ok(())
            },
        );
        self.record(
            "equivalence.qcv-structure",
            "the defining qcv quommutator and its four-exponential commutator give the same F",
            |b, t| {
                for i in 0..10 {
                    let sign = if i % 2 == 0 { QcvSign::Upper } else { QcvSign::Lower };
                    let p = QcvParams::new(b.rational(), b.rational(), sign)?;
                    let from_relation = structure_from_quommutator(&qcv_quommutator(&p), n)?;
                    let closed = qcv_rhs(&p, &Rational::one()).prefix_sum();
                    let table = closed.table(0..n as i64);
                    t.expect(from_relation.values()[..n] == table[..], || {
                        format!("q = {}, t = {}, {:?}", p.q, p.t, p.sign)
                    });
                }
                Ok(())
            },
        );
    }

    fn ordering(&mut self) {
        let n = self.size;
        self.record(
            "ordering.expansions",
            "(a†a)^m equals both normal-ordered expansions for m ≤ 5 on catalog and chain windows",
            |b, t| {
                let mut cases: Vec<(String, ExpPoly, Rational, ExpPoly)> = Vec::new();
                for osc in b.catalog()? {
                    if osc.name == FamilyName::Qcv {
                        continue;
                    }
                    cases.push((
                        osc.name.to_string(),
                        osc.quommutator_rhs.clone(),
                        osc.deformation.clone(),
                        osc.commutator.clone(),
                    ));
                }
                let c = b.random_chain(3)?;
                let last = c.steps().last().expect("depth ≥ 1");
                let prev = c.commutator(c.depth() - 1).expect("depth ≥ 1").clone();
                cases.push((format!("chain {}", list(&c.params())), prev, last.param.clone(), last.commutator.clone()));
                for (name, rhs, q, f) in cases {
                    let structure = f.prefix_sum();
                    let w = Arc::new(FockWindow::from_structure(&structure, n)?);
                    let v = verify_normal_order(&normal_order_table(&rhs, &q, 5), &w)?;
                    t.verdict(v, || format!("{name} quommutator table"));
                    let v = verify_normal_order(&normal_order_table_bar(&f, 5), &w)?;
                    t.verdict(v, || format!("{name} commutator table"));
                }
                Ok(())
            },
        );
        self.record(
            "ordering.stirling-limit",
            "f = 1, q = 1 reproduces Stirling numbers of the second kind for m ≤ 8",
            |_, t| {
                let table = normal_order_table(&ExpPoly::one(), &Rational::one(), 8);
                let mut s = vec![vec![0i64; 10]; 10];
                s[1][1] = 1;
                for m in 1..8 {
                    for l in 1..=m + 1 {
                        s[m + 1][l] = s[m][l - 1] + l as i64 * s[m][l];
                    }
                }
                for m in 1..=8 {
                    for l in 1..=m {
                        t.expect(table.entry(m, l) == ExpPoly::constant(rat(s[m][l])), || {
                            format!("S({m},{l})")
                        });
                    }
                }
                t.expect(s[4][1..=4] == [1, 7, 6, 1], || "row m = 4".into());
                Ok(())
            },
        );
        self.record(
            "ordering.square-of-number",
            "(a†a)² = q(a†)²a² + a†a = (a†)²a² + a† q^n a, reconciled through q^n = (q-1)a†a + 1",
            |b, t| {
                let q = b.rational();
                let table = normal_order_table(&ExpPoly::one(), &q, 2);
                t.expect(table.entry(2, 2) == ExpPoly::constant(q.clone()), || "C_{2,2}".into());
                t.expect(table.entry(2, 1).is_one_poly(), || "C_{2,1}".into());
                let bar = normal_order_table_bar(&ExpPoly::exp(q.clone()), 2);
                t.expect(bar.entry(2, 2).is_one_poly(), || "bar C_{2,2}".into());
                t.expect(bar.entry(2, 1) == ExpPoly::exp(q.clone()), || "bar C_{2,1}".into());
                t.expect(table.entry(2, 1) != bar.entry(2, 1), || "forms coincide".into());
                let osc = deform::arik_coon(&q)?;
                let w = Arc::new(osc.window(n)?);
                let a = Operator::annihilation(&w);
                let ad = Operator::creation(&w);
                let number = ad.mul(&a)?;
                let identity = Operator::diag(&w, &ExpPoly::exp(q.clone()))
                    .verify_eq(&number.scale(&(&q - rat(1))).add(&Operator::identity(&w))?)?;
                t.verdict(identity, || format!("q^n = (q-1)a†a + 1 at q = {q}"));
                let adad_aa = ad.mul(&ad)?.mul(&a)?.mul(&a)?;
                let substituted = ad.mul(&number.scale(&(&q - rat(1))).add(&Operator::identity(&w))?)?.mul(&a)?;
                let lhs = adad_aa.add(&substituted)?;
                let rhs = adad_aa.scale(&q).add(&number)?;
                t.verdict(lhs.verify_eq(&rhs)?, || format!("reconciliation at q = {q}"));
                Ok(())
            },
        );
    }

    fn inverse(&mut self) {
        let n = self.size;
        self.record(
            "inverse.worked-examples",
            "φ = q^n gives β = q and Φ = 1; 1 + 2ν p^n gives 1 + 2ν + (1-p)n; two exponentials tie",
            |b, t| {
                let q = b.rational();
                let beta = to_unit_quommutator(&ExpPoly::exp(q.clone()), n)?;
                t.expect(beta.as_constant() == Some(q.clone()), || format!("β at q = {q}"));
                t.expect(best_q(&ExpPoly::exp(q.clone()))[0].phi.is_one_poly(), || "Φ = 1".into());
                let (nu, p) = (b.rational(), b.rational());
                let phi = ExpPoly::one() + ExpPoly::exp(p.clone()).scale(&(rat(2) * &nu));
                let expected = ExpPoly::poly(vec![rat(1) + rat(2) * &nu, rat(1) - &p]);
                t.expect(to_q_quommutator(&phi, &p).phi == expected, || format!("ν = {nu}, p = {p}"));
                let qs = b.distinct(2);
                let (al, be) = (b.rational(), b.rational());
                let phi = ExpPoly::exp(qs[0].clone()).scale(&al) + ExpPoly::exp(qs[1].clone()).scale(&be);
                let one = Rational::one();
                let expected = ExpPoly::exp(qs[1].clone()).scale(&(&be * (&qs[1] - &qs[0]) / (&qs[1] - &one)))
                    + ExpPoly::constant(&al + &be * (&qs[0] - &one) / (&qs[1] - &one));
                t.expect(to_q_quommutator(&phi, &qs[0]).phi == expected, || "two-exponential Φ".into());
                t.expect(best_q(&phi).len() == 2, || "tie".into());
                Ok(())
            },
        );
        self.record(
            "inverse.round-trips",
            "β from φ rebuilds F = Σ_{i<k} φ(i); [a,a†]_{q_{k+1}} = Φ on the window of F_k",
            |b, t| {
                let q = b.rational();
                let mb = deform::macfarlane_biedenharn(&q)?;
                let nu = b.rational();
                let ground = rat(1) + rat(2) * &nu;
                let mut phis = vec![ExpPoly::exp(q.clone()), mb.commutator.clone()];
                if !ground.is_zero() {
                    phis.push(deform::calogero_vasiliev(&nu)?.commutator.scale(&ground.recip()));
                }
                for phi in phis {
                    let beta = match to_unit_quommutator(&phi, n + crate::opalg::DEFAULT_MARGIN + 1) {
                        Ok(beta) => beta,
                        Err(crate::Error::DivisionByZeroAtLevel(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    let w = structure_from_quommutator(&beta.quommutator(), n)?;
                    t.expect(w.values()[..n] == phi.prefix_sum().table(0..n as i64)[..], || {
                        format!("φ = {phi}")
                    });
                }
                for _ in 0..4 {
                    let c = b.random_chain(4)?;
                    let next = b.rational();
                    let fk = c.last_commutator();
                    let form = to_q_quommutator(fk, &next);
                    let w = Arc::new(FockWindow::from_structure(&c.last_structure(), n)?);
                    t.verdict(quommutator_relation(&w, &next, &form.phi)?, || {
                        format!("params {} then Q = {next}", list(&c.params()))
                    });
                }
                Ok(())
            },
        );
    }

    fn casimir(&mut self) {
        let n = self.size;
        self.record(
            "casimir.commutator-form",
            "C = F(n) - a†a commutes with a and a† and vanishes on every catalog window",
            |b, t| {
                for osc in b.catalog()? {
                    let w = Arc::new(osc.window(n)?);
                    let c = casimir_commutator(&osc.structure, &w)?;
                    t.verdict(verify_centrality(&c)?, || osc.name.to_string());
                }
                Ok(())
            },
        );
        self.record(
            "casimir.quommutator-form",
            "μ, ν satisfy their recurrences as closed forms and C̃_j = q_{j+1}^{-n} C_{j+1} is central",
            |b, t| {
                for _ in 0..4 {
                    let c = b.random_chain(4)?;
                    for j in 0..c.depth() {
                        let f = c.commutator(j).expect("j < depth");
                        let pair = casimir_quommutator(f, &c.steps()[j].param)?;
                        let ctx = || format!("params {} step {j}", list(&c.params()));
                        t.expect(pair.recurrences_hold(f), ctx);
                        t.expect(pair.mu == &pair.nu * c.structure(j + 1).expect("j + 1 ≤ depth"), ctx);
                        t.verdict(verify_casimir_relation(&c, j, n)?, ctx);
                    }
                }
                Ok(())
            },
        );
    }

    fn qcalc(&mut self) {
        self.record(
            "qcalc.monomials",
            "the multi-parameter derivative sends x^ℓ to F_k(ℓ) x^{ℓ-1} for ℓ ≤ 20",
            |b, t| {
                for _ in 0..4 {
                    let c = b.random_chain(4)?;
                    let f = c.last_structure();
                    for ell in 1..=20 {
                        let d = multi_q_derivative(&c.params(), &Poly::monomial(Rational::one(), ell))?;
                        t.expect(d == Poly::monomial(f.eval(ell as i64), ell - 1), || {
                            format!("params {} at ℓ = {ell}", list(&c.params()))
                        });
                    }
                }
                Ok(())
            },
        );
        self.record(
            "qcalc.mb-weights",
            "the pair (q, 1/q) has weights q/(q+1) and 1/(q+1)",
            |b, t| {
                for _ in 0..10 {
                    let q = b.rational();
                    let pair = [q.clone(), q.recip()];
                    let (w1, w2) = mb_weights(&q);
                    t.expect(omega(&pair, 0)? == w1 && omega(&pair, 1)? == w2, || format!("q = {q}"));
                }
                Ok(())
            },
        );
    }
}

trait RationalExt {
    fn abs_ne_one(&self) -> bool;
}

impl RationalExt for Rational {
    fn abs_ne_one(&self) -> bool {
        !self.is_one() && !(-self).is_one()
    }
}

trait ExpPolyExt {
    fn is_one_poly(&self) -> bool;
}

impl ExpPolyExt for ExpPoly {
    fn is_one_poly(&self) -> bool {
        self == &ExpPoly::one()
    }
}
