//! Property-based suites over randomized elements: field axioms for the
//! scalars, Lie axioms for the bracket, the derivation and automorphism laws
//! of the enveloping layer, and parser round trips.

use proptest::prelude::*;

use glhat::loopalg::{LieElement, LoopGen};
use glhat::pbw::{self, multiply, UEAElement};
use glhat::scalar::Rational;
use glhat::LoopAlgebra;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_gen(n: i64, max_deg: i64) -> impl Strategy<Value = LoopGen> {
    (1..=n, 1..=n, -max_deg..=max_deg).prop_map(move |(i, j, s)| {
        LoopAlgebra::new(n as usize).e(i, j, s)
    })
}

fn arb_lie(n: i64, max_deg: i64) -> impl Strategy<Value = LieElement> {
    proptest::collection::vec((arb_gen(n, max_deg), arb_rational()), 1..4).prop_map(|terms| {
        let mut out = LieElement::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    })
}

fn arb_word(n: i64, max_deg: i64) -> impl Strategy<Value = UEAElement> {
    proptest::collection::vec(arb_gen(n, max_deg), 1..4)
        .prop_map(|word| pbw::normal_order(&word))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Rational::one());
        }
    }

    #[test]
    fn evaluation_regime_constraint_is_exact(
        e1 in arb_rational(),
        e2 in arb_rational(),
        n in 3usize..8,
    ) {
        use glhat::scalar::ParamPoint;
        match ParamPoint::new(e1.clone(), e2.clone(), n, true) {
            Ok(p) => {
                // hbar * c - n * eps2 = 0, exactly
                let residue = &(&p.hbar * p.c()) - &(&Rational::integer(n as i64) * &p.eps2);
                prop_assert!(residue.is_zero());
            }
            Err(_) => {
                prop_assert!((&e1 + &e2).is_zero() || e2.is_zero());
            }
        }
    }

    #[test]
    fn rational_text_round_trip(a in arb_rational()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn lie_bracket_axioms(a in arb_lie(4, 5), b in arb_lie(4, 5), c in arb_lie(4, 5)) {
        let alg = LoopAlgebra::new(4);
        prop_assert!(alg.bracket(&a, &b).add(&alg.bracket(&b, &a)).is_zero());
        let jacobi = alg
            .bracket(&a, &alg.bracket(&b, &c))
            .add(&alg.bracket(&b, &alg.bracket(&c, &a)))
            .add(&alg.bracket(&c, &alg.bracket(&a, &b)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn element_text_round_trip(a in arb_lie(4, 5)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<LieElement>().unwrap(), a);
    }

    #[test]
    fn product_associativity(a in arb_word(3, 3), b in arb_word(3, 3), c in arb_word(3, 2)) {
        prop_assert_eq!(
            multiply(&multiply(&a, &b), &c),
            multiply(&a, &multiply(&b, &c))
        );
    }

    #[test]
    fn adjoint_is_a_derivation(x in arb_lie(3, 3), a in arb_word(3, 3), b in arb_word(3, 3)) {
        let lhs = pbw::ad_action(&x, &multiply(&a, &b)).unwrap();
        let rhs = multiply(&pbw::ad_action(&x, &a).unwrap(), &b)
            .add(&multiply(&a, &pbw::ad_action(&x, &b).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_ad_multiplicative_and_invertible(
        i in 0i64..3,
        plus in proptest::bool::ANY,
        a in arb_word(3, 2),
        b in arb_word(3, 2),
    ) {
        let alg = LoopAlgebra::new(3);
        let x = if plus { alg.x_plus(i) } else { alg.x_minus(i) };
        let lhs = pbw::exp_ad(&x, &multiply(&a, &b), pbw::DEFAULT_MAX_STEPS).unwrap();
        let rhs = multiply(
            &pbw::exp_ad(&x, &a, pbw::DEFAULT_MAX_STEPS).unwrap(),
            &pbw::exp_ad(&x, &b, pbw::DEFAULT_MAX_STEPS).unwrap(),
        );
        prop_assert_eq!(&lhs, &rhs);
        let back = pbw::exp_ad(&x.neg(), &lhs, pbw::DEFAULT_MAX_STEPS).unwrap();
        prop_assert_eq!(back, multiply(&a, &b));
    }

    #[test]
    fn transpose_and_rotation_laws(a in arb_lie(4, 4), b in arb_lie(4, 4)) {
        let alg = LoopAlgebra::new(4);
        prop_assert_eq!(alg.omega(&alg.omega(&a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(
            alg.omega(&alg.bracket(&a, &b)).unwrap(),
            alg.bracket(&alg.omega(&b).unwrap(), &alg.omega(&a).unwrap())
        );
        prop_assert_eq!(
            alg.rho(&alg.bracket(&a, &b)).unwrap(),
            alg.bracket(&alg.rho(&a).unwrap(), &alg.rho(&b).unwrap())
        );
        prop_assert_eq!(alg.rho_inv(&alg.rho(&a).unwrap()).unwrap(), a.clone());
    }

    #[test]
    fn normal_order_invariant_under_reassociation(
        gens in proptest::collection::vec(arb_gen(3, 3), 2..5),
        split in 1usize..4,
    ) {
        // straightening the whole word equals multiplying straightened halves
        let split = split.min(gens.len() - 1);
        let whole = pbw::normal_order(&gens);
        let left = pbw::normal_order(&gens[..split]);
        let right = pbw::normal_order(&gens[split..]);
        prop_assert_eq!(whole, multiply(&left, &right));
    }
}
