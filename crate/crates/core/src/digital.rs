//! Column arithmetic on base-x numerals.
//!
//! Digits are combined pairwise with the addition, subtraction and multiplication
//! rules of the base-x alphabet, carrying or borrowing `(1)` between columns exactly
//! as in ordinary positional arithmetic. None of these routines expands a numeral
//! into coefficient form, except [`digital_divmod`] when it picks a quotient digit.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::division::monic_divmod;
use crate::error::{Error, Result};
use crate::numeral::{compare_numerals, to_base_x, BaseXDigit, BaseXNumeral};

use BaseXDigit::{Constant, Linear};

/// Sum of two digits as `(carry, digit)`; the carry is 0 or 1.
pub(crate) fn add_digits(top: &BaseXDigit, bottom: &BaseXDigit) -> (bool, BaseXDigit) {
    match (top, bottom) {
        (Constant(i), Constant(j)) => (false, Constant(i + j)),
        (Linear(i), Constant(j)) | (Constant(j), Linear(i)) => {
            if i > j {
                (false, Linear(i - j))
            } else {
                (true, Constant(j - i))
            }
        }
        (Linear(i), Linear(j)) => (true, Linear(i + j)),
    }
}

/// Difference of two digits as `(borrow, digit)`; a borrow adds `x` to the top digit.
pub(crate) fn sub_digits(top: &BaseXDigit, bottom: &BaseXDigit) -> (bool, BaseXDigit) {
    match (top, bottom) {
        (Constant(i), Constant(j)) => {
            if i >= j {
                (false, Constant(i - j))
            } else {
                (true, Linear(j - i))
            }
        }
        (Linear(i), Constant(j)) => (false, Linear(i + j)),
        (Constant(i), Linear(j)) => (true, Constant(i + j)),
        (Linear(i), Linear(j)) => {
            if j >= i {
                (false, Constant(j - i))
            } else {
                (true, Linear(i - j))
            }
        }
    }
}

/// Product of two digits as `(carry digit, digit)`.
pub(crate) fn mul_digits(a: &BaseXDigit, b: &BaseXDigit) -> (BaseXDigit, BaseXDigit) {
    match (a, b) {
        (Constant(i), Constant(j)) => (BaseXDigit::zero(), Constant(i * j)),
        (Linear(i), Constant(j)) | (Constant(j), Linear(i)) => {
            if j.is_zero() {
                (BaseXDigit::zero(), BaseXDigit::zero())
            } else {
                (Constant(j - 1), Linear(i * j))
            }
        }
        (Linear(i), Linear(j)) => (Linear(i + j), Constant(i * j)),
    }
}

fn one() -> BaseXDigit {
    Constant(BigInt::one())
}

fn get(digits: &[BaseXDigit], k: usize) -> BaseXDigit {
    digits.get(k).cloned().unwrap_or_else(BaseXDigit::zero)
}

fn add_le(a: &[BaseXDigit], b: &[BaseXDigit]) -> Vec<BaseXDigit> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n + 1);
    let mut carry = false;
    for k in 0..n {
        let (c1, mut d) = add_digits(&get(a, k), &get(b, k));
        let mut c2 = false;
        if carry {
            (c2, d) = add_digits(&d, &one());
        }
        assert!(!(c1 && c2), "column carry exceeds 1");
        carry = c1 || c2;
        out.push(d);
    }
    if carry {
        out.push(one());
    }
    out
}

pub fn digital_add(a: &BaseXNumeral, b: &BaseXNumeral) -> BaseXNumeral {
    BaseXNumeral::from_digits_le(add_le(&a.digits_le(), &b.digits_le()))
}

/// `a - b` for `a >= b`. A borrow that meets a `(0)` turns it into `(x-1)` and keeps
/// travelling left, so each digit lends at most once.
pub fn digital_sub(a: &BaseXNumeral, b: &BaseXNumeral) -> Result<BaseXNumeral> {
    if compare_numerals(a, b) == Ordering::Less {
        return Err(Error::DigitalUnderflow);
    }
    let (top, bottom) = (a.digits_le(), b.digits_le());
    let mut out = Vec::with_capacity(top.len());
    let mut borrow = false;
    for k in 0..top.len() {
        let mut t = top[k].clone();
        let mut b1 = false;
        if borrow {
            (b1, t) = sub_digits(&t, &one());
        }
        let (b2, d) = sub_digits(&t, &get(&bottom, k));
        assert!(!(b1 && b2), "a digit lends at most once");
        borrow = b1 || b2;
        out.push(d);
    }
    assert!(!borrow, "a >= b leaves no final borrow");
    Ok(BaseXNumeral::from_digits_le(out))
}

/// Adds `(1)` to a carry digit; carries produced by `mul_digits` never overflow here.
fn bump(d: BaseXDigit) -> BaseXDigit {
    match d {
        Constant(j) => Constant(j + 1),
        Linear(i) => {
            assert!(i > BigInt::one(), "carry digit overflow");
            Linear(i - 1)
        }
    }
}

/// One row of long multiplication, least significant first.
fn mul_row_le(a: &[BaseXDigit], m: &BaseXDigit) -> Vec<BaseXDigit> {
    let mut out = Vec::with_capacity(a.len() + 1);
    let mut carry = BaseXDigit::zero();
    for d in a {
        let (c, p) = mul_digits(d, m);
        let (extra, p) = add_digits(&p, &carry);
        carry = if extra { bump(c) } else { c };
        out.push(p);
    }
    out.push(carry);
    out
}

pub fn digital_mul_digit(a: &BaseXNumeral, m: &BaseXDigit) -> BaseXNumeral {
    BaseXNumeral::from_digits_le(mul_row_le(&a.digits_le(), m))
}

/// Long multiplication: one row per digit of `b`, staggered, then summed with [`digital_add`].
pub fn digital_mul(a: &BaseXNumeral, b: &BaseXNumeral) -> BaseXNumeral {
    let top = a.digits_le();
    let mut acc: Vec<BaseXDigit> = vec![BaseXDigit::zero()];
    for (shift, m) in b.digits_le().iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let mut row = vec![BaseXDigit::zero(); shift];
        row.extend(mul_row_le(&top, m));
        acc = add_le(&acc, &row);
    }
    BaseXNumeral::from_digits_le(acc)
}

/// Long division by a monic numeral: returns `(q, r)` with `a = q*g + r`, `0 <= r < g`.
///
/// The running remainder is brought down one digit at a time. Each quotient digit is the
/// base-x quotient of the current window by `g`; the window product `d*g` is formed with
/// [`digital_mul_digit`] and removed with [`digital_sub`].
pub fn digital_divmod(a: &BaseXNumeral, g: &BaseXNumeral) -> Result<(BaseXNumeral, BaseXNumeral)> {
    let g_poly = g.to_polynomial();
    if !g_poly.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut quotient = Vec::with_capacity(a.len());
    let mut rem = BaseXNumeral::zero();
    for digit in a.digits() {
        // rem <- rem * x + digit
        let mut window = if rem.is_zero() { Vec::new() } else { rem.digits().to_vec() };
        window.push(digit.clone());
        let window = BaseXNumeral::from_digits(window).expect("valid digits");

        let q = quotient_digit(&window, &g_poly)?;
        let product = digital_mul_digit(g, &q);
        rem = digital_sub(&window, &product)?;
        debug_assert_eq!(compare_numerals(&rem, g), Ordering::Less);
        quotient.push(q);
    }
    Ok((BaseXNumeral::from_digits(quotient)?, rem))
}

/// The digit `d` with `d*g <= w < (d+1)*g`, where `0 <= w < x*g`.
fn quotient_digit(window: &BaseXNumeral, g: &crate::poly::Polynomial) -> Result<BaseXDigit> {
    let (q, _) = monic_divmod(&window.to_polynomial(), g)?;
    if q.is_zero() {
        return Ok(BaseXDigit::zero());
    }
    let num = to_base_x(&q).expect("window quotient is nonnegative");
    debug_assert_eq!(num.len(), 1, "window quotient is a single digit");
    Ok(num.digits()[0].clone())
}
