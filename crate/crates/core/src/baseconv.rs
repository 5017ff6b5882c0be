//! Polynomial representatives of integers and conversion between numeric bases by
//! substitution.
//!
//! The representative of `c` in base `b >= 2` has the base-`b` digits of `c` as its
//! coefficients; in base 1 it is the unary polynomial `x^(c-1) + ... + x + 1`.
//! [`descent`] and [`ascent`] move a representative to a smaller or larger base by
//! substituting `x + a` or `x - a` and rewriting coefficients into digits, without
//! going back through the integer `c`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeral::{to_base_x, BaseXDigit};
use crate::poly::Polynomial;

/// Largest value whose unary (base-1) representative is built by default.
pub const DEFAULT_UNARY_CAP: u64 = 1_000_000;

const MAX_REWRITE_ROUNDS: usize = 100_000;

/// Conversion settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvertOptions {
    pub unary_cap: u64,
}

impl Default for ConvertOptions {
    fn default() -> Self {
        ConvertOptions {
            unary_cap: DEFAULT_UNARY_CAP,
        }
    }
}

/// A value together with its representative in some base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub value: BigInt,
    pub base: BigInt,
    pub poly: Polynomial,
}

impl Representative {
    pub fn new(value: BigInt, base: BigInt) -> Result<Self> {
        let poly = representative(&value, &base)?;
        Ok(Representative { value, base, poly })
    }
}

/// Base-`b` digits of `n >= 0`, least significant first. Empty for zero.
pub(crate) fn digits_le(n: &BigInt, b: &BigInt) -> Vec<BigInt> {
    debug_assert!(b > &BigInt::one());
    if let (Some(n), Some(b)) = (n.to_u64(), b.to_u64()) {
        let mut out = Vec::new();
        let mut n = n;
        while n > 0 {
            out.push(BigInt::from(n % b));
            n /= b;
        }
        return out;
    }
    let mut out = Vec::new();
    let mut n = n.clone();
    while !n.is_zero() {
        let (q, r) = n.div_rem(b);
        out.push(r);
        n = q;
    }
    out
}

fn unary(c: u64) -> Polynomial {
    Polynomial::new(vec![BigInt::one(); c as usize])
}

fn check_unary_cap(c: &BigInt, cap: u64) -> Result<u64> {
    match c.to_u64() {
        Some(v) if v <= cap => Ok(v),
        _ => Err(Error::UnaryCap {
            value: c.clone(),
            cap,
        }),
    }
}

/// `f_c^(b)` with the default unary cap.
pub fn representative(c: &BigInt, b: &BigInt) -> Result<Polynomial> {
    representative_with(c, b, ConvertOptions::default())
}

pub fn representative_with(c: &BigInt, b: &BigInt, opts: ConvertOptions) -> Result<Polynomial> {
    if !c.is_positive() {
        return Err(Error::precondition("representative requires c >= 1"));
    }
    if !b.is_positive() {
        return Err(Error::precondition("representative requires b >= 1"));
    }
    if b.is_one() {
        return Ok(unary(check_unary_cap(c, opts.unary_cap)?));
    }
    Ok(Polynomial::new(digits_le(c, b)))
}

/// Recovers `c` from a claimed base-`b` representative, or reports that it is not one.
pub fn representative_value(f: &Polynomial, b: &BigInt) -> Result<BigInt> {
    let not_rep = || Error::NotRepresentative(b.clone());
    if !b.is_positive() || f.is_zero() {
        return Err(not_rep());
    }
    let c = f.evaluate(b);
    if !c.is_positive() {
        return Err(not_rep());
    }
    let ok = if b.is_one() {
        f.coeffs().iter().all(One::is_one)
    } else {
        f.coeffs().iter().all(|a| !a.is_negative() && a < b)
    };
    if ok {
        Ok(c)
    } else {
        Err(not_rep())
    }
}

/// Rewrites every coefficient `a >= base` (base >= 2) into its digits, placing digit `k`
/// of the coefficient of `x^i` on `x^(i+k)`. Signs are carried along unchanged.
fn spread_digits(coeffs: &[BigInt], base: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = vec![BigInt::zero(); coeffs.len()];
    for (i, a) in coeffs.iter().enumerate() {
        if &a.abs() < base {
            out[i] += a;
            continue;
        }
        let negative = a.is_negative();
        for (k, d) in digits_le(&a.abs(), base).into_iter().enumerate() {
            if out.len() <= i + k {
                out.resize(i + k + 1, BigInt::zero());
            }
            if negative {
                out[i + k] -= d;
            } else {
                out[i + k] += d;
            }
        }
    }
    out
}

/// Base-1 rewrite: the coefficient `a` of `x^i` becomes `x^i + ... + x^(i+a-1)`.
fn spread_unary(coeffs: &[u64]) -> Vec<u64> {
    let len = coeffs
        .iter()
        .enumerate()
        .map(|(i, &a)| i + a as usize)
        .max()
        .unwrap_or(0);
    let mut delta = vec![0i64; len + 1];
    for (i, &a) in coeffs.iter().enumerate() {
        if a > 0 {
            delta[i] += 1;
            delta[i + a as usize] -= 1;
        }
    }
    let mut out = Vec::with_capacity(len);
    let mut run = 0i64;
    for d in &delta[..len] {
        run += d;
        out.push(run as u64);
    }
    out
}

/// Converts `f = f_c^(b)` to `f_c^(b-a)`.
///
/// Substitute `x + a`; then, while some coefficient is not a base-`(b-a)` digit, replace
/// every coefficient by its base-`(b-a)` expansion with `x` standing for `b - a`. In base 1
/// the rewrite is unary and stops once every coefficient is 1.
pub fn descent(f: &Polynomial, b: &BigInt, a: &BigInt) -> Result<Polynomial> {
    descent_with(f, b, a, ConvertOptions::default())
}

pub fn descent_with(f: &Polynomial, b: &BigInt, a: &BigInt, opts: ConvertOptions) -> Result<Polynomial> {
    if a.is_negative() {
        return Err(Error::precondition("descent requires a >= 0"));
    }
    let target = b - a;
    if target < BigInt::one() {
        return Err(Error::precondition("descent requires b - a >= 1"));
    }
    let c = representative_value(f, b)?;
    if a.is_zero() {
        return Ok(f.clone());
    }
    let shifted = f.shift(a);

    if target.is_one() {
        check_unary_cap(&c, opts.unary_cap)?;
        let mut coeffs: Vec<u64> = shifted
            .coeffs()
            .iter()
            .map(|x| x.to_u64().expect("coefficients of f(x+a) are bounded by c"))
            .collect();
        for _ in 0..MAX_REWRITE_ROUNDS {
            if coeffs.iter().all(|&x| x <= 1) {
                debug_assert!(coeffs.iter().all(|&x| x == 1), "unary result has no gaps");
                return Ok(Polynomial::new(coeffs.into_iter().map(BigInt::from).collect()));
            }
            coeffs = spread_unary(&coeffs);
        }
        unreachable!("unary descent did not settle");
    }

    let mut coeffs = shifted.into_coeffs();
    for _ in 0..MAX_REWRITE_ROUNDS {
        if coeffs.iter().all(|x| x < &target) {
            return Ok(Polynomial::new(coeffs));
        }
        coeffs = spread_digits(&coeffs, &target);
    }
    unreachable!("descent did not settle");
}

/// Converts `f = f_c^(b)` to `f_c^(b+a)`.
///
/// Substitute `x - a`; rewrite each coefficient's magnitude in base `b + a` (keeping its
/// sign) until every coefficient is smaller than `b + a` in absolute value; finally write
/// the result in base x and evaluate each linear digit `x - j` as `b + a - j`.
pub fn ascent(f: &Polynomial, b: &BigInt, a: &BigInt) -> Result<Polynomial> {
    if a.is_negative() {
        return Err(Error::precondition("ascent requires a >= 0"));
    }
    representative_value(f, b)?;
    if a.is_zero() {
        return Ok(f.clone());
    }
    let target = b + a;
    let mut coeffs = f.shift(&-a).into_coeffs();
    let mut settled = false;
    for _ in 0..MAX_REWRITE_ROUNDS {
        coeffs = spread_digits(&coeffs, &target);
        if coeffs.iter().all(|x| x.abs() < target) {
            settled = true;
            break;
        }
    }
    assert!(settled, "ascent did not settle");
    let g = Polynomial::new(coeffs);
    let num = to_base_x(&g).expect("value at the target base is positive");
    let digits: Vec<BigInt> = num
        .digits()
        .iter()
        .rev()
        .map(|d| match d {
            BaseXDigit::Constant(v) => v.clone(),
            BaseXDigit::Linear(j) => &target - j,
        })
        .collect();
    Ok(Polynomial::new(digits))
}
