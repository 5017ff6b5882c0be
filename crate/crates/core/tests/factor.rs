mod common;

use basex_core::factor::{candidate_from_pair, default_bases, divisors};
use basex_core::{factor_integer, factorize, gcic_test, kronecker_oracle, mfb_bound, Polynomial};
use common::{big, nonconstant_positive, positive};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn product(ps: &[BigInt]) -> BigInt {
    ps.iter().product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn product_reconstruction(f in positive(5, 12)) {
        prop_assert_eq!(factorize(&f).unwrap().product(), f);
    }

    #[test]
    fn products_split(g in nonconstant_positive(3, 9), h in nonconstant_positive(3, 9)) {
        let f = &g * &h;
        let r = factorize(&f).unwrap();
        prop_assert_eq!(r.product(), f.clone());
        prop_assert!(r.factors.iter().map(|x| x.mult).sum::<u32>() >= 2 || !r.content.is_one());
    }

    #[test]
    fn certificate_validity(f in positive(5, 12)) {
        let r = factorize(&f).unwrap();
        for level in &r.certificate {
            prop_assert_eq!(&level.poly.evaluate(&level.b1), &level.v1);
            prop_assert_eq!(&level.poly.evaluate(&level.b2), &level.v2);
            prop_assert_eq!(product(&level.primes1), level.v1.clone());
            prop_assert_eq!(product(&level.primes2), level.v2.clone());
            prop_assert_eq!((level.b1.clone(), level.b2.clone()), default_bases(&level.poly).unwrap());
            prop_assert_eq!(&level.bound, &mfb_bound(&level.poly).unwrap());
            if let Some(pattern) = &level.pattern {
                let g = pattern.to_polynomial();
                prop_assert!(level.poly.div_exact(&g).is_some());
                prop_assert_eq!(candidate_from_pair(&g.evaluate(&level.b1), &level.b1, &g.evaluate(&level.b2), &level.b2), Some(g));
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_random_sextics(f in positive(6, 50)) {
        prop_assert_eq!(factorize(&f).unwrap().factors, kronecker_oracle(&f).unwrap().factors);
    }

    #[test]
    fn gcic_success_is_irreducible(digits in prop::collection::vec(0i64..10, 1..8), lead in 1i64..10, b in 2i64..12) {
        let mut c: Vec<i64> = digits.into_iter().map(|d| d % b).collect();
        c.push(lead % b + i64::from(lead % b == 0));
        let f = Polynomial::from_i64s(&c);
        if let Some(v) = gcic_test(&f, &big(b)).unwrap() {
            prop_assert_eq!(&v, &f.evaluate(&big(b)));
            prop_assert!(factorize(&f).unwrap().is_irreducible());
        }
    }

    #[test]
    fn integer_factors_multiply_back(n in 1u64..u64::MAX) {
        let n = BigInt::from(n);
        let ps = factor_integer(&n).unwrap();
        prop_assert_eq!(product(&ps), n.clone());
        prop_assert!(ps.iter().all(basex_core::factor::is_prime));
        prop_assert!(ps.windows(2).all(|w| w[0] <= w[1]));
        let ds = divisors(&ps);
        prop_assert!(ds.iter().all(|d| (&n % d) == BigInt::from(0)));
    }
}

#[test]
fn repeated_factors() {
    let f: Polynomial = "x^6+3x^5+6x^4+7x^3+6x^2+3x+1".parse().unwrap(); // (x^2+x+1)^3
    let r = factorize(&f).unwrap();
    assert_eq!(r.factors.len(), 1);
    assert_eq!((r.factors[0].poly.to_string(), r.factors[0].mult), ("x^2+x+1".to_string(), 3));
    assert_eq!(r.product(), f);
}

#[test]
fn large_coefficients() {
    let g: Polynomial = "x^3+1009x+17".parse().unwrap();
    let h: Polynomial = "x^2-997".parse().unwrap();
    let r = factorize(&(&g * &h)).unwrap();
    let shown: Vec<String> = r.factors.iter().map(|f| f.poly.to_string()).collect();
    assert_eq!(shown, ["x^2-997", "x^3+1009x+17"]);
    assert!(BigInt::one() == r.content);
    assert_eq!(mfb_bound(&h).unwrap(), big(3989));
}
