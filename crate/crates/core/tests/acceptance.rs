//! Acceptance criteria. Each prints one PASS/FAIL line; any failure makes
//! the target exit nonzero. Oracles are written out independently of the
//! library's closed forms wherever possible.

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qoscil::casimir::casimir_quommutator;
use qoscil::cli::parse_exppoly;
use qoscil::cli::wire::{from_json_str, to_json_string};
use qoscil::deform::family::{qcv_quommutator, shifted_power_quommutator};
use qoscil::deform::{
    arik_coon, bem, calogero_vasiliev, chain, chakrabarti_jagannathan, macfarlane_biedenharn, qcv,
    Oscillator, QcvParams, QcvSign,
};
use qoscil::exact::{omega, powi, rat, residue_sum};
use qoscil::inverse::{best_q, to_q_quommutator, to_unit_quommutator};
use qoscil::opalg::{structure_from_quommutator, FockWindow, Operator};
use qoscil::ordering::{normal_order_table, normal_order_table_bar, NormalOrderTable};
use qoscil::qcalc::{mb_weights, multi_q_derivative, Poly};
use qoscil::{ExpPoly, Rational};

const N: usize = 16;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn random_rational(rng: &mut StdRng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-15..=15);
        let q: i64 = rng.gen_range(1..=8);
        let r = Rational::new(p.into(), q.into());
        if !r.is_zero() && r != rat(1) && r != rat(-1) {
            return r;
        }
    }
}

fn random_distinct(rng: &mut StdRng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let r = random_rational(rng);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `F_{j+1}(ℓ) = Σ_{i<ℓ} q_{j+1}^i f_j(ℓ-1-i)` and `f_{j+1}(n) = F(n+1) - F(n)`
/// evaluated level by level from `f_0 = 1`. Returns `F_k` on `0..len`.
fn brute_force_structure(params: &[Rational], len: usize) -> Vec<Rational> {
    let total = len + params.len() + 1;
    let mut f = vec![Rational::one(); total];
    let mut big_f = vec![Rational::zero(); total];
    for (step, q) in params.iter().enumerate() {
        let usable = total - step;
        big_f = (0..usable)
            .map(|l| (0..l).map(|i| powi(q, i as i64) * &f[l - 1 - i]).sum())
            .collect();
        f = (0..usable - 1).map(|n| &big_f[n + 1] - &big_f[n]).collect();
    }
    big_f.truncate(len);
    big_f
}

fn brute_force_commutator(params: &[Rational], len: usize) -> Vec<Rational> {
    if params.is_empty() {
        return vec![Rational::one(); len];
    }
    let big_f = brute_force_structure(params, len + 1);
    (0..len).map(|n| &big_f[n + 1] - &big_f[n]).collect()
}

fn ladder(window: &Arc<FockWindow>) -> (Operator, Operator) {
    (Operator::annihilation(window), Operator::creation(window))
}

fn relation(window: &Arc<FockWindow>, q: &Rational, rhs: &ExpPoly) -> Result<bool, String> {
    let (a, ad) = ladder(window);
    let lhs = lift(a.quommutator(&ad, q))?;
    Ok(lift(lhs.verify_eq(&Operator::diag(window, rhs)))?.complete())
}

fn catalog(rng: &mut StdRng) -> Result<Vec<Oscillator>, String> {
    let q = random_rational(rng);
    let q2 = loop {
        let r = random_rational(rng);
        if r != q {
            break r;
        }
    };
    let nu = random_rational(rng);
    let qcv_params = lift(QcvParams::new(q.clone(), random_rational(rng), QcvSign::Upper))?;
    Ok(vec![
        lift(arik_coon(&q))?,
        lift(macfarlane_biedenharn(&q))?,
        lift(chakrabarti_jagannathan(&q, &q2))?,
        lift(calogero_vasiliev(&nu))?,
        lift(bem(&nu, &q))?,
        qcv(&qcv_params, &q),
    ])
}

fn residue_identity(rng: &mut StdRng) -> Outcome {
    let mut checked = 0;
    for _ in 0..200 {
        let k = rng.gen_range(1..=6);
        let params = random_distinct(rng, k);
        for ell in 0..k as u32 {
            let expected = if ell as usize == k - 1 { rat(1) } else { rat(0) };
            let got = lift(residue_sum(&params, ell))?;
            ensure(got == expected, || format!("params {params:?}, ℓ = {ell}: {got}"))?;
            checked += 1;
        }
        let total: Rational = (0..k).map(|i| omega(&params, i)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?.into_iter().sum();
        ensure(total.is_one(), || format!("weights of {params:?} sum to {total}"))?;
    }
    Ok(format!("200 tuples, {checked} residue sums"))
}

fn recursion_oracle(rng: &mut StdRng) -> Outcome {
    for _ in 0..50 {
        let k = rng.gen_range(1..=5);
        // coincident parameters and q = ±1 are legitimate here
        let params: Vec<Rational> = (0..k)
            .map(|_| if rng.gen_bool(0.15) { rat(1) } else { random_rational(rng) })
            .collect();
        let c = lift(chain(&ExpPoly::one(), &params))?;
        let oracle = brute_force_commutator(&params, 26);
        let closed = c.last_commutator().table(0..26);
        ensure(closed == oracle, || format!("params {params:?}"))?;
    }
    Ok("50 tuples, n ≤ 25".into())
}

fn equivalence_battery(rng: &mut StdRng) -> Outcome {
    let mut relations = 0;
    for osc in catalog(rng)? {
        let w = Arc::new(lift(osc.window(N))?);
        ensure(relation(&w, &osc.deformation, &osc.quommutator_rhs)?, || format!("{} quommutator", osc.name))?;
        ensure(relation(&w, &rat(1), &osc.commutator)?, || format!("{} commutator", osc.name))?;
        relations += 2;
    }
    for _ in 0..10 {
        let k = rng.gen_range(1..=4);
        let params: Vec<Rational> = (0..k).map(|_| random_rational(rng)).collect();
        let c = lift(chain(&ExpPoly::one(), &params))?;
        for j in 0..k {
            let w = Arc::new(lift(FockWindow::from_structure(c.structure(j + 1).unwrap(), N))?);
            ensure(relation(&w, &params[j], c.commutator(j).unwrap())?, || format!("{params:?} step {j}"))?;
            ensure(relation(&w, &rat(1), c.commutator(j + 1).unwrap())?, || format!("{params:?} step {j}"))?;
            relations += 2;
        }
    }
    Ok(format!("{relations} relations on N = {N}"))
}

/// F(n+1) = X(n) F(n) + γ(n) for `a a† - X(n̂) a†a = γ(n̂)`, with
/// `X = q^{±(1+2νK)}` and `γ = [[1+2νK]] q^{∓(n+ν-νK)}`, `t = q^{2ν}`.
fn qcv_oracle(q: &Rational, t: &Rational, sign: QcvSign, len: usize) -> Vec<Rational> {
    let qi = q.recip();
    let bracket = |x: Rational| (&x - x.recip()) / (q - &qi);
    let mut out = vec![Rational::zero()];
    for n in 0..len as i64 - 1 {
        let even = n % 2 == 0;
        let qt = if even { q * t } else { q / t };
        // q^{n+ν-νK}: q^n for even n, q^n t for odd n
        let shift = if even { powi(q, n) } else { powi(q, n) * t };
        let (x, g) = match sign {
            QcvSign::Upper => (qt.clone(), bracket(qt) / shift),
            QcvSign::Lower => (qt.recip(), bracket(qt) * shift),
        };
        let next = &x * out.last().unwrap() + g;
        out.push(next);
    }
    out
}

/// The four-exponential commutator at `Q = 1`, summed.
fn qcv_formula_structure(q: &Rational, t: &Rational, len: usize) -> Vec<Rational> {
    let one = rat(1);
    let qi = q.recip();
    let ti = t.recip();
    let f = |n: i64| {
        (powi(q, n) * (q - &one) * (t + &one)
            + powi(&qi, n) * (&one - &qi) * (&ti + &one)
            + powi(&-q, n) * (&one + q) * (t - &one)
            + powi(&-&qi, n) * (&one + &qi) * (&one - &ti))
            / (rat(2) * (q - &qi))
    };
    let mut out = vec![Rational::zero()];
    for n in 0..len as i64 - 1 {
        let next = out.last().unwrap() + f(n);
        out.push(next);
    }
    out
}

fn known_forms(rng: &mut StdRng) -> Outcome {
    let levels = 0..N as i64;
    for _ in 0..5 {
        let q = random_rational(rng);
        let ac = lift(arik_coon(&q))?;
        let w = Arc::new(lift(ac.window(N))?);
        let powers: Vec<Rational> = levels.clone().map(|n| powi(&q, n)).collect();
        ensure(ac.commutator.table(levels.clone()) == powers, || format!("arik-coon q = {q}"))?;
        ensure(relation(&w, &rat(1), &ac.commutator)?, || "arik-coon window".into())?;

        // (q^{n+1/2} + q^{-(n+1/2)}) / (q^{1/2} + q^{-1/2}) = (q^{n+1} + q^{-n}) / (q + 1)
        let cj = lift(chakrabarti_jagannathan(&q.recip(), &q))?;
        let mb = lift(macfarlane_biedenharn(&q))?;
        let symmetric: Vec<Rational> = levels
            .clone()
            .map(|n| (powi(&q, n + 1) + powi(&q, -n)) / (&q + rat(1)))
            .collect();
        ensure(cj.commutator.table(levels.clone()) == symmetric, || format!("cj at q = {q}"))?;
        ensure(mb.commutator == cj.commutator, || format!("mb at q = {q}"))?;

        let nu = random_rational(rng);
        let cv = lift(calogero_vasiliev(&nu))?;
        let expected: Vec<Rational> = levels
            .clone()
            .map(|n| rat(1) + rat(2) * &nu * powi(&rat(-1), n))
            .collect();
        ensure(cv.commutator.table(levels.clone()) == expected, || format!("cv ν = {nu}"))?;

        // minimal deformation by q of q^{-n} + 2ν(-q^{-1})^n
        let b = lift(bem(&nu, &q))?;
        let second = ExpPoly::exp(q.recip()) + ExpPoly::exp(-q.recip()).scale(&(rat(2) * &nu));
        ensure(b.quommutator_rhs == second && b.deformation == q, || format!("bem ν = {nu}, q = {q}"))?;
        let wb = Arc::new(lift(b.window(N))?);
        ensure(relation(&wb, &q, &second)?, || "bem window".into())?;
    }

    // a a† - a†(-1)^{n+1} a = 1 is equivalent to [a, a†] = (-1)^n
    let w = Arc::new(lift(structure_from_quommutator(&shifted_power_quommutator(&rat(-1)), N))?);
    ensure(relation(&w, &rat(1), &ExpPoly::exp(rat(-1)))?, || "q = -1 identity".into())?;
    for k in 0..10i64 {
        let s: i64 = (0..=2 * k).map(|j| if ((j - 1) * j / 2) % 2 == 0 { 1 } else { -1 }).sum();
        ensure(s == 1, || format!("sign sum at k = {k}"))?;
    }

    for i in 0..10 {
        let q = random_rational(rng);
        let two_nu: i64 = rng.gen_range(-4..=4);
        let t = if i % 2 == 0 { powi(&q, two_nu) } else { random_rational(rng) };
        let p = lift(QcvParams::new(q.clone(), t.clone(), QcvSign::Upper))?;
        let from_relation = lift(structure_from_quommutator(&qcv_quommutator(&p), N))?;
        let oracle = qcv_oracle(&q, &t, QcvSign::Upper, N);
        let formula = qcv_formula_structure(&q, &t, N);
        ensure(oracle == formula, || format!("qcv oracle vs formula at q = {q}, t = {t}"))?;
        ensure(from_relation.values()[..N] == oracle[..], || format!("qcv relation at q = {q}, t = {t}"))?;
        ensure(qcv(&p, &q).structure.table(0..N as i64) == oracle, || format!("qcv closed form q = {q}"))?;
        let lower = lift(QcvParams::new(q.clone(), t.clone(), QcvSign::Lower))?;
        let low_rel = lift(structure_from_quommutator(&qcv_quommutator(&lower), N))?;
        ensure(low_rel.values()[..N] == qcv_oracle(&q, &t, QcvSign::Lower, N)[..], || format!("lower sign q = {q}"))?;
        let big_q = random_rational(rng);
        let wq = Arc::new(lift(qcv(&p, &big_q).window(N))?);
        ensure(relation(&wq, &big_q, &qcv(&p, &big_q).quommutator_rhs)?, || format!("qcv Q = {big_q}"))?;
    }
    Ok("arik-coon, cj/mb, q = -1, cv, bem, 10 qcv pairs".into())
}

fn simultaneity(rng: &mut StdRng) -> Outcome {
    let mut relations = 0;
    for _ in 0..10 {
        let k = rng.gen_range(1..=4);
        let params = random_distinct(rng, k);
        let full = lift(chain(&ExpPoly::one(), &params))?;
        let w = Arc::new(lift(FockWindow::from_structure(&full.last_structure(), N))?);
        ensure(relation(&w, &rat(1), full.last_commutator())?, || format!("{params:?} commutator"))?;
        for i in 0..k {
            let mut rest = params.clone();
            let qi = rest.remove(i);
            let reduced = lift(chain(&ExpPoly::one(), &rest))?;
            ensure(relation(&w, &qi, reduced.last_commutator())?, || format!("{params:?} without {qi}"))?;
            relations += 1;
        }
    }
    Ok(format!("{relations} simultaneous relations"))
}

/// Compares `(a†a)^m` with `Σ_ℓ (a†)^ℓ C_{m,ℓ} a^ℓ` assembled here from
/// the ladder operators.
fn expansion_holds(table: &NormalOrderTable, w: &Arc<FockWindow>) -> Result<bool, String> {
    let (a, ad) = ladder(w);
    let number = lift(ad.mul(&a))?;
    for m in 1..=table.m_max() {
        let mut rhs = Operator::zero(w);
        for l in 1..=m {
            let term = lift(lift(ad.pow(l as u32).mul(&Operator::diag(w, &table.entry(m, l))))?.mul(&a.pow(l as u32)))?;
            rhs = lift(rhs.add(&term))?;
        }
        if !lift(number.pow(m as u32).verify_eq(&rhs))?.complete() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn normal_ordering(rng: &mut StdRng) -> Outcome {
    let families = catalog(rng)?;
    for osc in families.iter().take(5) {
        let w = Arc::new(lift(osc.window(N))?);
        let quom = normal_order_table(&osc.quommutator_rhs, &osc.deformation, 5);
        let bar = normal_order_table_bar(&osc.commutator, 5);
        ensure(expansion_holds(&quom, &w)?, || format!("{} quommutator table", osc.name))?;
        ensure(expansion_holds(&bar, &w)?, || format!("{} commutator table", osc.name))?;
    }

    let classical = normal_order_table(&ExpPoly::one(), &rat(1), 8);
    let mut s = vec![vec![0i64; 10]; 10];
    s[1][1] = 1;
    for m in 1..8 {
        for l in 1..=m + 1 {
            s[m + 1][l] = s[m][l - 1] + l as i64 * s[m][l];
        }
    }
    for m in 1..=8 {
        for l in 1..=m {
            ensure(classical.entry(m, l) == ExpPoly::constant(rat(s[m][l])), || format!("S({m},{l})"))?;
        }
    }

    let q = random_rational(rng);
    let quom = normal_order_table(&ExpPoly::one(), &q, 2);
    let bar = normal_order_table_bar(&ExpPoly::exp(q.clone()), 2);
    ensure(quom.entry(2, 2) == ExpPoly::constant(q.clone()) && quom.entry(2, 1) == ExpPoly::one(), || "C_2".into())?;
    ensure(bar.entry(2, 2) == ExpPoly::one() && bar.entry(2, 1) == ExpPoly::exp(q.clone()), || "bar C_2".into())?;
    let w = Arc::new(lift(lift(arik_coon(&q))?.window(N))?);
    let (a, ad) = ladder(&w);
    let number = lift(ad.mul(&a))?;
    let substitute = lift(number.scale(&(&q - rat(1))).add(&Operator::identity(&w)))?;
    ensure(lift(Operator::diag(&w, &ExpPoly::exp(q.clone())).verify_eq(&substitute))?.complete(), || "q^n".into())?;
    let adad_aa = lift(lift(lift(ad.mul(&ad))?.mul(&a))?.mul(&a))?;
    let bar_form = lift(adad_aa.add(&lift(lift(ad.mul(&substitute))?.mul(&a))?))?;
    let q_form = lift(adad_aa.scale(&q).add(&number))?;
    ensure(lift(bar_form.verify_eq(&q_form))?.complete(), || "reconciliation".into())?;
    Ok("5 families m ≤ 5, Stirling m ≤ 8, (a†a)² reconciled".into())
}

fn inverse_problem(rng: &mut StdRng) -> Outcome {
    for _ in 0..5 {
        let q = random_rational(rng);
        let beta = lift(to_unit_quommutator(&ExpPoly::exp(q.clone()), N))?;
        ensure(beta.table.iter().all(|b| b == &q), || format!("β for q = {q}"))?;

        let (nu, p) = (random_rational(rng), random_rational(rng));
        let phi = ExpPoly::one() + ExpPoly::exp(p.clone()).scale(&(rat(2) * &nu));
        let phi_q = to_q_quommutator(&phi, &p).phi;
        for n in 0..N as i64 {
            let expected = rat(1) + rat(2) * &nu + (rat(1) - &p) * rat(n);
            ensure(phi_q.eval(n) == expected, || format!("Φ for ν = {nu}, p = {p}"))?;
        }

        let qs = random_distinct(rng, 2);
        let (alpha, b) = (random_rational(rng), random_rational(rng));
        let phi = ExpPoly::exp(qs[0].clone()).scale(&alpha) + ExpPoly::exp(qs[1].clone()).scale(&b);
        let got = to_q_quommutator(&phi, &qs[0]).phi;
        let one = rat(1);
        for n in 0..N as i64 {
            let expected = &b * (&qs[1] - &qs[0]) / (&qs[1] - &one) * powi(&qs[1], n)
                + &alpha + &b * (&qs[0] - &one) / (&qs[1] - &one);
            ensure(got.eval(n) == expected, || "two-exponential Φ".into())?;
        }
        ensure(best_q(&phi).len() == 2, || "two equally good choices".into())?;

        let mb = lift(macfarlane_biedenharn(&q))?.commutator;
        let ground = rat(1) + rat(2) * &nu;
        let mut phis = vec![ExpPoly::exp(q.clone()), mb];
        if !ground.is_zero() {
            phis.push((ExpPoly::one() + ExpPoly::exp(rat(-1)).scale(&(rat(2) * &nu))).scale(&ground.recip()));
        }
        for phi in phis {
            let beta = match to_unit_quommutator(&phi, 2 * N) {
                Ok(beta) => beta,
                Err(qoscil::Error::DivisionByZeroAtLevel(_)) => continue,
                Err(e) => return Err(e.to_string()),
            };
            let w = lift(structure_from_quommutator(&beta.quommutator(), N))?;
            let sums: Vec<Rational> = (0..N)
                .map(|k| (0..k as i64).map(|i| phi.eval(i)).sum())
                .collect();
            ensure(w.values()[..N] == sums[..], || format!("round trip for φ = {phi}"))?;
        }
    }
    Ok("worked examples and round trips on N = 16".into())
}

fn casimir(rng: &mut StdRng) -> Outcome {
    let zero_on = |op: &Operator, w: &Arc<FockWindow>| -> Result<bool, String> {
        Ok(lift(op.verify_eq(&Operator::zero(w)))?.complete())
    };
    for osc in catalog(rng)? {
        let w = Arc::new(lift(osc.window(N))?);
        let (a, ad) = ladder(&w);
        let c = lift(Operator::diag(&w, &osc.structure).sub(&lift(ad.mul(&a))?))?;
        ensure(zero_on(&lift(c.commutator(&ad))?, &w)?, || format!("[C, a†] for {}", osc.name))?;
        ensure(zero_on(&lift(c.commutator(&a))?, &w)?, || format!("[C, a] for {}", osc.name))?;
        let eigen: Vec<Rational> = (0..N as i64).map(|n| osc.structure.eval(n) - w.values()[n as usize].clone()).collect();
        ensure(eigen.iter().all(Zero::is_zero), || format!("Fock eigenvalues of C for {}", osc.name))?;
    }
    for _ in 0..10 {
        let k = rng.gen_range(1..=4);
        let params: Vec<Rational> = (0..k).map(|_| random_rational(rng)).collect();
        let c = lift(chain(&ExpPoly::one(), &params))?;
        for j in 0..k {
            let f = c.commutator(j).unwrap();
            let q = &params[j];
            let pair = lift(casimir_quommutator(f, q))?;
            ensure(&pair.mu - &pair.mu.shift(-1) == &pair.nu * &f.shift(-1), || "μ recurrence".into())?;
            ensure(pair.nu == pair.nu.shift(-1).scale(&q.recip()), || "ν recurrence".into())?;
            ensure(pair.mu.eval(0).is_zero() && pair.nu.eval(0).is_one(), || "normalisation".into())?;
            let next = c.structure(j + 1).unwrap();
            let w = Arc::new(lift(FockWindow::from_structure(next, N))?);
            let (a, ad) = ladder(&w);
            let number = lift(ad.mul(&a))?;
            let tilde = lift(Operator::diag(&w, &pair.mu).sub(&lift(Operator::diag(&w, &pair.nu).mul(&number))?))?;
            let c_next = lift(Operator::diag(&w, next).sub(&number))?;
            let scaled = lift(Operator::diag(&w, &ExpPoly::exp(q.recip())).mul(&c_next))?;
            ensure(lift(tilde.verify_eq(&scaled))?.complete(), || format!("C̃ = q^-n C for {params:?}, j = {j}"))?;
            ensure(zero_on(&lift(tilde.commutator(&ad))?, &w)?, || format!("[C̃, a†] for {params:?}"))?;
            for n in 0..N as i64 {
                let e = pair.mu.eval(n) - powi(q, -n) * &w.values()[n as usize];
                ensure(e.is_zero(), || format!("Fock eigenvalue of C̃ at {n}"))?;
            }
        }
    }
    Ok("catalog centrality, 10 chains".into())
}

fn q_calculus(rng: &mut StdRng) -> Outcome {
    for _ in 0..10 {
        let k = rng.gen_range(1..=5);
        let params = random_distinct(rng, k);
        let oracle = brute_force_structure(&params, 21);
        let from_chain = lift(chain(&ExpPoly::one(), &params))?.last_structure();
        for ell in 1..=20usize {
            let d = lift(multi_q_derivative(&params, &Poly::monomial(rat(1), ell)))?;
            ensure(d == Poly::monomial(oracle[ell].clone(), ell - 1), || format!("{params:?} ℓ = {ell}"))?;
            ensure(from_chain.eval(ell as i64) == oracle[ell], || "chain".into())?;
        }
        let q = random_rational(rng);
        let (w1, w2) = mb_weights(&q);
        let pair = [q.clone(), q.recip()];
        ensure(w1 == &q / (&q + rat(1)) && w2 == (&q + rat(1)).recip(), || "weight formula".into())?;
        ensure(lift(omega(&pair, 0))? == w1 && lift(omega(&pair, 1))? == w2, || format!("ω at q = {q}"))?;
        // ω_q = (q - 1)/(q - q⁻¹)
        ensure(w1 == (&q - rat(1)) / (&q - q.recip()), || "half-power form".into())?;
    }
    Ok("10 parameter sets, ℓ ≤ 20".into())
}

fn random_exppoly(rng: &mut StdRng) -> ExpPoly {
    let terms = (0..rng.gen_range(0..=4)).map(|_| {
        let base = if rng.gen_bool(0.3) { rat(1) } else { random_rational(rng) };
        let coeffs = (0..rng.gen_range(0..=3)).map(|_| random_rational(rng)).collect();
        (base, coeffs)
    });
    ExpPoly::from_terms(terms.collect::<Vec<_>>())
}

fn cli_criterion(rng: &mut StdRng) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_qoscil"))
        .args(["verify", "--suite", "all"])
        .env_remove("QOSCIL_WINDOW")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("verify exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    })?;
    for _ in 0..100 {
        let e = random_exppoly(rng);
        ensure(lift(from_json_str(&to_json_string(&e)))? == e, || format!("json round trip of {e}"))?;
        ensure(lift(parse_exppoly(&e.to_string(), None))? == e, || format!("text round trip of {e}"))?;
    }
    Ok("verify --suite all exits 0, 100 round trips".into())
}

fn main() {
    let mut rng = StdRng::seed_from_u64(20_240_611);
    let criteria: [(&str, fn(&mut StdRng) -> Outcome); 10] = [
        ("residue identity", residue_identity),
        ("recursion oracle", recursion_oracle),
        ("equivalence battery", equivalence_battery),
        ("known-form reproductions", known_forms),
        ("simultaneity", simultaneity),
        ("normal ordering", normal_ordering),
        ("inverse problem", inverse_problem),
        ("casimir operators", casimir),
        ("q-calculus", q_calculus),
        ("cli and serialization", cli_criterion),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check(&mut rng);
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
