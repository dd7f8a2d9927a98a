//! Algebraic invariants of the free algebra, the evaluation map and the
//! rewriting layer, checked on random inputs.

mod common;

use common::{arb_poly, arb_word};
use proptest::prelude::*;
use quatnorm::freealg::{int, Poly};
use quatnorm::oracle::{all_words, evaluate, qconj, qmul, random_assignment, zero_test};
use quatnorm::rewrite::{is_normal_factorfree, normalize};
use quatnorm::syzygy::gb_vector;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4), c in arb_poly(3, 3, 4)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
    }

    #[test]
    fn reversion_reverses_products(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4)) {
        prop_assert_eq!((&a * &b).reversion(), &b.reversion() * &a.reversion());
        prop_assert_eq!(a.reversion().reversion(), a);
    }

    #[test]
    fn bracket_plus_vector_part(word in arb_word(4, 6)) {
        let p = Poly::word(word.clone());
        prop_assert_eq!(&p.bracket() + &p.vector_part(), p);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4), seed in any::<u64>()) {
        let x = random_assignment(3, seed);
        let lhs = evaluate(&(&a * &b), &x).unwrap();
        let rhs = qmul(&evaluate(&a, &x).unwrap(), &evaluate(&b, &x).unwrap());
        prop_assert_eq!(lhs, rhs);
        let sum = evaluate(&(&a + &b), &x).unwrap();
        prop_assert_eq!(sum, evaluate(&a, &x).unwrap() + evaluate(&b, &x).unwrap());
    }

    #[test]
    fn reversion_is_signed_conjugation(word in arb_word(4, 6), seed in any::<u64>()) {
        let x = random_assignment(4, seed);
        let p = Poly::word(word.clone());
        let sign = int(if word.degree() % 2 == 0 { 1 } else { -1 });
        let lhs = evaluate(&p.reversion(), &x).unwrap();
        let rhs = qconj(&evaluate(&p, &x).unwrap()).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalize_is_idempotent_and_linear(a in arb_poly(3, 5, 5), b in arb_poly(3, 5, 5)) {
        let base = gb_vector(3, 5).unwrap();
        let na = normalize(&a, &base).unwrap();
        prop_assert_eq!(normalize(&na, &base).unwrap(), na.clone());
        prop_assert!(na.terms().all(|(w, _)| is_normal_factorfree(w, &base)));
        let nb = normalize(&b, &base).unwrap();
        prop_assert_eq!(normalize(&(&a + &b.scale(&int(3))), &base).unwrap(), &na + &nb.scale(&int(3)));
    }

    #[test]
    fn normal_form_is_a_two_sided_ideal_quotient(a in arb_poly(3, 2, 3), b in arb_poly(3, 2, 3)) {
        // ab and (nf a)(nf b) agree modulo the ideal
        let base = gb_vector(3, 4).unwrap();
        let na = normalize(&a, &base).unwrap();
        let nb = normalize(&b, &base).unwrap();
        prop_assert_eq!(normalize(&(&a * &b), &base).unwrap(), normalize(&(&na * &nb), &base).unwrap());
    }

    #[test]
    fn normalization_preserves_value(a in arb_poly(4, 5, 6)) {
        let base = gb_vector(4, 5).unwrap();
        let diff = &a - &normalize(&a, &base).unwrap();
        prop_assert!(zero_test(&diff, 10, 7).passed());
    }
}

#[test]
fn bracket_is_real_and_vector_part_pure() {
    let assignments: Vec<_> = (0..50).map(|seed| random_assignment(3, seed)).collect();
    for len in 0..=6 {
        for word in all_words(3, len) {
            let p = Poly::word(word);
            let (s, v) = (p.bracket(), p.vector_part());
            for x in &assignments {
                assert!(evaluate(&s, x).unwrap().is_real(), "{s}");
                assert!(evaluate(&v, x).unwrap().is_pure(), "{v}");
            }
        }
    }
}
