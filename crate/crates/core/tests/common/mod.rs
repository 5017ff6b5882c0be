#![allow(dead_code)]

use basex_core::Polynomial;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Any polynomial with degree at most `deg` and coefficients in `-h..=h`.
pub fn poly(deg: usize, h: i64) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-h..=h, 0..=deg + 1).prop_map(|c| Polynomial::from_i64s(&c))
}

/// Positive polynomial: leading coefficient in `1..=h`.
pub fn positive(deg: usize, h: i64) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(-h..=h, 0..=deg), 1..=h).prop_map(|(mut c, lead)| {
        c.push(lead);
        Polynomial::from_i64s(&c)
    })
}

pub fn nonconstant_positive(deg: usize, h: i64) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(-h..=h, 1..=deg), 1..=h).prop_map(|(mut c, lead)| {
        c.push(lead);
        Polynomial::from_i64s(&c)
    })
}

pub fn monic(deg: usize, h: i64) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-h..=h, 0..=deg).prop_map(|mut c| {
        c.push(1);
        Polynomial::from_i64s(&c)
    })
}

/// A runner with a fixed seed, so that counted suites see the same cases on every run.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}
