mod common;

use basex_core::Polynomial;
use common::{big, poly};
use num_bigint::BigInt;
use proptest::prelude::*;
use rayon::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(f in poly(6, 20), g in poly(6, 20), h in poly(6, 20)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f - &f, Polynomial::zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(8, 50), g in poly(8, 50), n in -1000i64..1000) {
        let n = big(n);
        prop_assert_eq!((&f * &g).evaluate(&n), f.evaluate(&n) * g.evaluate(&n));
        prop_assert_eq!((&f + &g).evaluate(&n), f.evaluate(&n) + g.evaluate(&n));
    }

    #[test]
    fn content_primitive_reconstructs(f in poly(8, 60)) {
        prop_assume!(!f.is_zero());
        let (c, g) = f.content_primitive().unwrap();
        prop_assert_eq!(&g.scale(&c), &f);
        prop_assert_eq!(g.content().unwrap(), BigInt::from(1));
        prop_assert_eq!(g.is_positive(), f.is_positive());
    }

    #[test]
    fn properness_routes_agree_beyond_cubics(f in poly(6, 10)) {
        prop_assume!(!f.is_constant());
        prop_assert_eq!(f.is_proper().unwrap(), f.is_proper_by_primes().unwrap());
    }

    #[test]
    fn text_round_trip(f in poly(10, 1000)) {
        prop_assert_eq!(f.to_string().parse::<Polynomial>().unwrap(), f);
    }

    #[test]
    fn shift_composes(f in poly(6, 20), a in -20i64..20, b in -20i64..20) {
        prop_assert_eq!(f.shift(&big(a)).shift(&big(b)), f.shift(&big(a + b)));
        prop_assert_eq!(f.shift(&big(a)).evaluate(&big(b)), f.evaluate(&big(a + b)));
    }

    #[test]
    fn exact_division_recovers_factor(f in poly(5, 20), g in poly(4, 20)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).div_exact(&g), Some(f));
    }
}

/// Both properness routes on every polynomial of degree 1..=3 with coefficients in -10..=10.
#[test]
fn properness_routes_agree_exhaustively() {
    let coeffs: Vec<i64> = (-10..=10).collect();
    let total = 21usize.pow(4);
    let mismatches: Vec<Polynomial> = (0..total)
        .into_par_iter()
        .filter_map(|mut k| {
            let mut c = Vec::with_capacity(4);
            for _ in 0..4 {
                c.push(coeffs[k % 21]);
                k /= 21;
            }
            let f = Polynomial::from_i64s(&c);
            if f.is_constant() || f.is_proper().unwrap() == f.is_proper_by_primes().unwrap() {
                None
            } else {
                Some(f)
            }
        })
        .collect();
    assert!(mismatches.is_empty(), "{mismatches:?}");
}
