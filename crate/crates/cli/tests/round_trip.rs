mod common;

use basex_core::numeral::parse_signed;
use basex_core::Polynomial;
use common::ok;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-60i64..=60, 0..=9).prop_map(|c| Polynomial::from_i64s(&c))
}

/// Factor list text such as `-6(x)(x+1)^2` back to a polynomial.
fn parse_factorization(s: &str) -> Polynomial {
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, s),
    };
    let head_len = rest.find('(').unwrap_or(rest.len());
    let mut acc: Polynomial = if head_len == 0 { Polynomial::one() } else { rest[..head_len].parse().unwrap() };
    let mut tail = &rest[head_len..];
    while let Some(body) = tail.strip_prefix('(') {
        let close = body.find(')').unwrap();
        let factor: Polynomial = body[..close].parse().unwrap();
        tail = &body[close + 1..];
        let mut mult = 1;
        if let Some(exp) = tail.strip_prefix('^') {
            let end = exp.find('(').unwrap_or(exp.len());
            mult = exp[..end].parse().unwrap();
            tail = &exp[end..];
        }
        for _ in 0..mult {
            acc = &acc * &factor;
        }
    }
    if sign < 0 {
        -acc
    } else {
        acc
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tobase_frombase(f in poly()) {
        let numeral = ok(&["tobase", &f.to_string()]);
        prop_assert_eq!(parse_signed(&numeral).unwrap(), f.clone());
        let back = ok(&["frombase", &numeral]);
        prop_assert_eq!(back.parse::<Polynomial>().unwrap(), f);
    }

    #[test]
    fn arithmetic_outputs_reparse(f in poly(), g in poly()) {
        let sum = ok(&["arith", "add", &f.to_string(), &g.to_string()]);
        prop_assert_eq!(sum.parse::<Polynomial>().unwrap(), &f + &g);
        let prod = ok(&["arith", "mul", &format!("{}", basex_core::numeral::format_signed(&f)), &g.to_string()]);
        prop_assert_eq!(parse_signed(&prod).unwrap(), &f * &g);
    }

    #[test]
    fn factorization_text_multiplies_back(f in prop::collection::vec(-9i64..=9, 1..=5)) {
        let f = Polynomial::from_i64s(&f);
        prop_assume!(!f.is_zero());
        let text = ok(&["factor", &f.to_string()]);
        prop_assert_eq!(parse_factorization(text.lines().next().unwrap()), f);
    }

    #[test]
    fn convert_output_reparses(c in 1u64..100_000, b in 2u64..40) {
        let text = ok(&["convert", "--value", &c.to_string(), "--to", &b.to_string()]);
        let g: Polynomial = text.parse().unwrap();
        prop_assert_eq!(g.evaluate(&b.into()), c.into());
    }
}
