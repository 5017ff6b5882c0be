mod common;

use std::cmp::Ordering;

use basex_core::{compare, digital_add, digital_divmod, digital_mul, digital_sub, monic_divmod, to_base_x};
use basex_core::{BaseXNumeral, Polynomial};
use common::{monic, positive};
use proptest::prelude::*;

fn num(f: &Polynomial) -> BaseXNumeral {
    if f.is_zero() {
        BaseXNumeral::zero()
    } else {
        to_base_x(f).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn digital_matches_coefficients(f in positive(8, 40), g in positive(8, 40)) {
        let (a, b) = (num(&f), num(&g));
        prop_assert_eq!(digital_add(&a, &b), num(&(&f + &g)));
        prop_assert_eq!(digital_mul(&a, &b), num(&(&f * &g)));
        let (hi, lo) = if compare(&f, &g) == Ordering::Less { (&g, &f) } else { (&f, &g) };
        prop_assert_eq!(digital_sub(&num(hi), &num(lo)).unwrap(), num(&(hi - lo)));
    }

    #[test]
    fn add_then_sub(f in positive(8, 40), g in positive(8, 40)) {
        let (a, b) = (num(&f), num(&g));
        prop_assert_eq!(digital_sub(&digital_add(&a, &b), &b).unwrap(), a);
    }

    #[test]
    fn divmod_matches_classical(f in positive(8, 40), g in monic(4, 20)) {
        prop_assume!(g.is_positive());
        let (q, r) = digital_divmod(&num(&f), &num(&g)).unwrap();
        let (pq, pr) = monic_divmod(&f, &g).unwrap();
        prop_assert_eq!((q, r), (num(&pq), num(&pr)));
    }

    #[test]
    fn divmod_reproduces_parts(q in positive(5, 20), g in monic(4, 20), r in positive(5, 20)) {
        prop_assume!(g.is_positive());
        let r = monic_divmod(&r, &g).unwrap().1;
        let a = &(&q * &g) + &r;
        let (dq, dr) = digital_divmod(&num(&a), &num(&g)).unwrap();
        prop_assert_eq!((dq, dr), (num(&q), num(&r)));
    }
}
