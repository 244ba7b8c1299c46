mod common;

use common::g;
use jacobsthal::genfunc::{expand, multiply_by_denominator, numerator_poly};
use jacobsthal::identities::{cassini, check_partial_sum_telescoping, docagne, jump3, step, window3};
use jacobsthal::omega::{omega, omega_cross};
use jacobsthal::qfamily::{cassini_bridge, geometric_sum, q_term, QIndex};
use jacobsthal::sequence::{negative_binet_forms, real_j_term, term_binet, term_fast, term_recurrence, terms_range};
use jacobsthal::{Error, GaussianRational, Preset, Rational, SeedTriple};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn seed() -> impl Strategy<Value = SeedTriple> {
    (rational(), rational(), rational()).prop_filter_map("all-zero seed", |(a, b, c)| SeedTriple::new(a, b, c).ok())
}

fn integer_seed() -> impl Strategy<Value = SeedTriple> {
    (-30i64..=30, -30i64..=30, -30i64..=30)
        .prop_filter_map("all-zero seed", |(a, b, c)| SeedTriple::from_ints(a, b, c).ok())
}

fn is_power_of_two(d: &BigInt) -> bool {
    let mut d = d.clone();
    while &d % 2u32 == BigInt::from(0) {
        d /= 2u32;
    }
    d.is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluators_agree(s in seed(), n in -40i64..=80) {
        let r = term_recurrence(&s, n);
        prop_assert_eq!(term_binet(&s, n), r.clone());
        prop_assert_eq!(term_fast(&s, n), r);
    }

    #[test]
    fn recurrence_holds_in_both_directions(s in seed(), from in -30i64..=0) {
        let t = terms_range(&s, from, from + 40);
        for w in t.windows(4) {
            prop_assert_eq!(&w[3], &(&(&w[2] + &w[1]) + &w[0].scale_int(2)));
        }
    }

    #[test]
    fn imaginary_part_lags_the_real_sequence(s in seed(), n in 1i64..=40) {
        let t = term_recurrence(&s, n);
        prop_assert_eq!(&t.re, &real_j_term(&s, n));
        prop_assert_eq!(&t.im, &real_j_term(&s, n - 1));
    }

    #[test]
    fn jump_window_and_step(s in seed(), n in 0i64..=40, k in -30i64..=40) {
        let (l, r) = jump3(&s, n);
        prop_assert_eq!(l, r);
        let (l, r) = window3(&s, n);
        prop_assert_eq!(l, r);
        let (l, r) = step(&s, k);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn negative_forms_agree(s in seed(), n in 1i64..=40) {
        let (first, second) = negative_binet_forms(&s, n);
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(first, term_recurrence(&s, -n));
    }

    #[test]
    fn integer_seeds_have_dyadic_negative_terms(s in integer_seed(), n in 1i64..=40) {
        // im(term(−n)) = re(term(−n−1)), so the imaginary part carries one more factor of 2.
        let t = term_recurrence(&s, -n);
        for (part, exp) in [(&t.re, n), (&t.im, n + 1)] {
            prop_assert!(is_power_of_two(part.denom()));
            prop_assert!((&Rational::pow2(exp) * part).is_integer());
        }
        let positive = term_recurrence(&s, n);
        prop_assert!(positive.re.is_integer() && positive.im.is_integer());
    }

    #[test]
    fn sequence_is_linear_in_the_seed(s in seed(), u in seed(), n in -20i64..=30) {
        let [a, b, c] = s.components();
        let [x, y, z] = u.components();
        if let Ok(sum) = SeedTriple::new(a + x, b + y, c + z) {
            prop_assert_eq!(term_recurrence(&sum, n), term_recurrence(&s, n) + term_recurrence(&u, n));
        }
    }

    #[test]
    fn docagne_on_its_domain(s in seed(), m in 0i64..=20, d in 0i64..=20) {
        let (l, r) = docagne(&s, m, m + d);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn cassini_is_docagne_at_adjacent_indices(s in seed(), n in 1i64..=30) {
        let sides = cassini(&s, n);
        prop_assert!(sides.consistent());
        let (_, rhs) = docagne(&s, n - 1, n);
        prop_assert_eq!(&sides.lhs, &rhs);
    }

    #[test]
    fn partial_sum_telescopes(s in seed()) {
        prop_assert!(check_partial_sum_telescoping(&s, 50).holds());
    }

    #[test]
    fn series_matches_recurrence_and_numerator(s in seed(), count in 1usize..=64) {
        let series = expand(&s, count).unwrap();
        prop_assert_eq!(&series.coefficients, &terms_range(&s, 0, count as i64 - 1));
        let product = multiply_by_denominator(&series.coefficients);
        let numerator = numerator_poly(&s);
        for (k, c) in product.iter().enumerate() {
            let want = numerator.get(k).cloned().unwrap_or_else(GaussianRational::zero);
            prop_assert_eq!(c, &want);
        }
    }

    #[test]
    fn q_index_decomposes(q in 1u64..=6, n in 0u64..=200) {
        let idx = QIndex::new(q, n).unwrap();
        prop_assert_eq!(idx.m * q + idx.r, n);
        prop_assert!(idx.r < q);
    }

    #[test]
    fn q_terms_match_direct_products(s in seed(), m in 0u64..=20) {
        let j = |k: u64| term_recurrence(&s, k as i64);
        prop_assert_eq!(q_term(&s, 2, 2 * m + 1).unwrap(), j(m) * j(m + 1));
        prop_assert_eq!(q_term(&s, 3, 3 * m + 2).unwrap(), j(m) * j(m + 1).pow(2));
        prop_assert_eq!(q_term(&s, 4, 4 * m).unwrap(), j(m).pow(4));
        prop_assert_eq!(q_term(&s, 1, m).unwrap(), j(m));
    }

    #[test]
    fn cassini_bridge_holds(s in seed(), n in 1u64..=30) {
        let (l, r) = cassini_bridge(&s, n).unwrap();
        prop_assert_eq!(l, r);
    }
}

#[test]
fn omega_invariants() {
    for n in -100..=100 {
        assert_eq!(omega(n + 3), omega(n));
        assert_eq!(i64::from(omega(-n)), -i64::from(omega(n)));
        assert_eq!(i64::from(omega(n)) + i64::from(omega(n + 1)) + i64::from(omega(n + 2)), 0);
    }
    for m in -30..=30 {
        for n in -30..=30 {
            assert_eq!(omega_cross(m, n), i64::from(omega(n - m)));
        }
    }
}

#[test]
fn degenerate_geometric_ratio_is_reported() {
    let s = SeedTriple::from_ints(1, 1, 4).unwrap();
    match geometric_sum(&s, 3, 0) {
        // Jg(0) = Jg(1) = 1+i, so the sum is 3(1+i)³.
        Err(Error::DegenerateRatio { m: 0, lhs }) => assert_eq!(*lhs, g("-6+6i")),
        other => panic!("expected a degenerate ratio, got {other:?}"),
    }
    assert!(geometric_sum(&Preset::Jg.seed(), 3, 1).is_ok());
}
