//! Algebraic invariants checked on random exact inputs.

use std::sync::Arc;

use proptest::prelude::*;

use qoscil::casimir::casimir_quommutator;
use qoscil::cli::parse_exppoly;
use qoscil::cli::wire::{chain_from_json_str, chain_to_json_string, from_json_str, to_json_string};
use qoscil::deform::{arik_coon, calogero_vasiliev, chain};
use qoscil::exact::{binomial, omega, phi, phi_partial_fraction, rat, residue_sum};
use qoscil::inverse::to_q_quommutator;
use qoscil::opalg::{FockWindow, Operator};
use qoscil::ordering::{normal_order_table, normal_order_table_bar};
use qoscil::qcalc::{jackson_derivative, Poly};
use qoscil::{ExpPoly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| r != &rat(0))
}

/// Pairwise distinct, none equal to 0 or 1.
fn distinct(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(nonzero(), 1..=max).prop_filter("distinct, not 1", |v| {
        v.iter().all(|q| q != &rat(1))
            && v.iter().enumerate().all(|(i, a)| v[..i].iter().all(|b| a != b))
    })
}

fn exppoly() -> impl Strategy<Value = ExpPoly> {
    let base = prop_oneof![
        Just(rat(1)),
        Just(rat(-1)),
        Just(rat(2)),
        Just(Rational::new(1.into(), 3.into())),
        Just(Rational::new((-3).into(), 2.into())),
    ];
    prop::collection::vec((base, prop::collection::vec(rational(), 0..=3)), 0..=4)
        .prop_map(ExpPoly::from_terms)
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=6).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residue_table(params in distinct(6)) {
        let k = params.len();
        for ell in 0..k as u32 {
            let expected = if ell as usize == k - 1 { rat(1) } else { rat(0) };
            prop_assert_eq!(residue_sum(&params, ell).unwrap(), expected);
        }
        let total: Rational = (0..k).map(|i| omega(&params, i).unwrap()).sum();
        prop_assert_eq!(total, rat(1));
    }

    #[test]
    fn composition_sum_is_partial_fraction(params in distinct(5)) {
        for ell in 0..=20 {
            prop_assert_eq!(phi(&params, ell), phi_partial_fraction(&params, ell).unwrap());
        }
    }

    #[test]
    fn exppoly_evaluation_is_a_homomorphism(f in exppoly(), g in exppoly(), d in -4i64..=4) {
        let sum = &f + &g;
        let product = &f * &g;
        let shifted = f.shift(d);
        for n in -30..=30 {
            prop_assert_eq!(sum.eval(n), f.eval(n) + g.eval(n));
            prop_assert_eq!(product.eval(n), f.eval(n) * g.eval(n));
            prop_assert_eq!(shifted.eval(n), f.eval(n + d));
        }
        let s = f.prefix_sum();
        prop_assert_eq!(&s.shift(1) - &s, f.clone());
        prop_assert_eq!(s.eval(0), rat(0));
    }

    #[test]
    fn wire_and_text_round_trips(f in exppoly()) {
        prop_assert_eq!(from_json_str(&to_json_string(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse_exppoly(&f.to_string(), None).unwrap(), f);
    }

    #[test]
    fn chain_round_trip(start in exppoly(), params in prop::collection::vec(nonzero(), 0..=3)) {
        let c = chain(&start, &params).unwrap();
        prop_assert_eq!(chain_from_json_str(&chain_to_json_string(&c)).unwrap(), c);
    }

    #[test]
    fn chain_is_symmetric(params in distinct(4), rotate in 0usize..4) {
        let f = chain(&ExpPoly::one(), &params).unwrap().last_commutator().clone();
        let mut reversed = params.clone();
        reversed.reverse();
        let mut rotated = params.clone();
        rotated.rotate_left(rotate % params.len());
        prop_assert_eq!(chain(&ExpPoly::one(), &reversed).unwrap().last_commutator().clone(), f.clone());
        prop_assert_eq!(chain(&ExpPoly::one(), &rotated).unwrap().last_commutator().clone(), f);
    }

    #[test]
    fn third_step_is_second_difference(params in prop::collection::vec(nonzero(), 3)) {
        let c = chain(&ExpPoly::one(), &params).unwrap();
        let f3 = c.last_commutator();
        for n in 0..15 {
            let expected = phi(&params, n + 2) - rat(2) * phi(&params, n + 1) + phi(&params, n);
            prop_assert_eq!(f3.eval(n), expected);
        }
    }

    #[test]
    fn operator_product_is_associative(
        h in prop::collection::vec((exppoly(), 0u32..3, 0u32..3), 3),
        q in nonzero(),
    ) {
        let window = Arc::new(arik_coon(&q).unwrap().window(12).unwrap());
        let ops: Vec<Operator> = h
            .iter()
            .map(|(g, p, r)| Operator::sandwich(&window, *p, g, *r))
            .collect();
        let left = ops[0].mul(&ops[1]).unwrap().mul(&ops[2]).unwrap();
        let right = ops[0].mul(&ops[1].mul(&ops[2]).unwrap()).unwrap();
        prop_assert!(left.verify_eq(&right).unwrap().holds);
    }

    #[test]
    fn jackson_derivative_is_linear(g in poly(), h in poly(), c in rational(), q in rational()) {
        let lhs = jackson_derivative(&q, &g.add(&h.scale(&c)));
        let rhs = jackson_derivative(&q, &g).add(&jackson_derivative(&q, &h).scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_stirling_table_is_constant(q in nonzero()) {
        let t = normal_order_table(&ExpPoly::one(), &q, 6);
        for m in 1..=6 {
            for l in 1..=m {
                prop_assert!(t.entry(m, l).as_constant().is_some());
            }
        }
    }

    #[test]
    fn forms_disagree_off_unity(q in nonzero().prop_filter("q ≠ 1", |q| q != &rat(1))) {
        let quom = normal_order_table(&ExpPoly::one(), &q, 2);
        let bar = normal_order_table_bar(&ExpPoly::exp(q.clone()), 2);
        prop_assert_ne!(quom.entry(2, 1), bar.entry(2, 1));
    }

    #[test]
    fn unit_parameter_keeps_the_commutator(f in exppoly()) {
        prop_assert_eq!(to_q_quommutator(&f, &rat(1)).phi, f);
    }

    #[test]
    fn casimir_mu_is_scaled_structure(params in distinct(4)) {
        let c = chain(&ExpPoly::one(), &params).unwrap();
        for j in 0..c.depth() {
            let f = c.commutator(j).unwrap();
            let pair = casimir_quommutator(f, &c.steps()[j].param).unwrap();
            prop_assert!(pair.recurrences_hold(f));
            prop_assert_eq!(&pair.mu, &(&pair.nu * c.structure(j + 1).unwrap()));
        }
    }

    #[test]
    fn positive_parameters_give_valid_windows(p in 1i64..=12, d in 1i64..=7, nu in rational()) {
        let q = Rational::new(p.into(), d.into());
        prop_assert!(arik_coon(&q).unwrap().window(16).unwrap().is_fock_valid());
        if rat(1) + rat(2) * &nu > rat(0) {
            let w = calogero_vasiliev(&nu).unwrap().window(16).unwrap();
            prop_assert!(w.is_fock_valid());
        }
    }
}

#[test]
fn unit_parameters_give_binomials() {
    let ones = vec![rat(1); 6];
    for k in 1..=6 {
        for ell in 0..=30i64 {
            let expected = if ell >= k as i64 - 1 { binomial(ell as u64, k as u64 - 1) } else { rat(0) };
            assert_eq!(phi(&ones[..k], ell), expected, "k = {k}, ℓ = {ell}");
        }
    }
}

#[test]
fn harmonic_window_is_valid() {
    let w = FockWindow::from_structure(&ExpPoly::poly(vec![rat(0), rat(1)]), 16).unwrap();
    assert!(w.is_fock_valid());
}
