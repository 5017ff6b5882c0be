//! Base-x numerals.
//!
//! Every positive polynomial has a unique expansion `f = sum b_i(x) x^i` whose digits
//! are either constants `a >= 0` or linear terms `x - a` with `a >= 1`. For any integer
//! `b >= mb(f)` substituting `b` digit by digit gives the ordinary base-`b` expansion of
//! `f(b)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// One letter of the polynomial alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseXDigit {
    /// The constant digit `a`, `a >= 0`.
    Constant(BigInt),
    /// The linear digit `x - a`, `a >= 1`.
    Linear(BigInt),
}

use BaseXDigit::{Constant, Linear};

impl BaseXDigit {
    pub fn constant(a: impl Into<BigInt>) -> Self {
        Constant(a.into())
    }

    pub fn linear(a: impl Into<BigInt>) -> Self {
        Linear(a.into())
    }

    pub fn zero() -> Self {
        Constant(BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Constant(a) if a.is_zero())
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Constant(a) if a.is_negative() => Err(Error::InvalidDigit(format!("constant digit ({a}) is negative"))),
            Linear(a) if !a.is_positive() => Err(Error::InvalidDigit(format!("linear digit (x-{a}) needs a >= 1"))),
            _ => Ok(()),
        }
    }

    /// Least alphabet size containing this digit.
    pub fn required_base(&self) -> BigInt {
        match self {
            Constant(a) => a + 1,
            Linear(a) => a.clone(),
        }
    }

    /// Digit value at `x = b`.
    pub fn eval(&self, b: &BigInt) -> BigInt {
        match self {
            Constant(a) => a.clone(),
            Linear(a) => b - a,
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            Constant(a) => Polynomial::constant(a.clone()),
            Linear(a) => Polynomial::new(vec![-a, BigInt::one()]),
        }
    }

    /// Next digit in the chain order, `None` past `(x-1)`.
    pub fn succ(&self) -> Option<BaseXDigit> {
        match self {
            Constant(a) => Some(Constant(a + 1)),
            Linear(a) if a.is_one() => None,
            Linear(a) => Some(Linear(a - 1)),
        }
    }

    /// Previous digit in the chain order, `None` at `(0)`.
    pub fn pred(&self) -> Option<BaseXDigit> {
        match self {
            Constant(a) if a.is_zero() => None,
            Constant(a) => Some(Constant(a - 1)),
            Linear(a) => Some(Linear(a + 1)),
        }
    }
}

impl Ord for BaseXDigit {
    /// `(0) < (1) < ... < (x-n) < ... < (x-2) < (x-1)`.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Constant(a), Constant(b)) => a.cmp(b),
            (Constant(_), Linear(_)) => Ordering::Less,
            (Linear(_), Constant(_)) => Ordering::Greater,
            (Linear(a), Linear(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for BaseXDigit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BaseXDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant(a) => write!(f, "({a})"),
            Linear(a) => write!(f, "(x-{a})"),
        }
    }
}

/// A canonical digit string, most significant digit first, with its minimum base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseXNumeral {
    digits: Vec<BaseXDigit>,
    min_base: BigInt,
}

impl BaseXNumeral {
    /// The numeral `[(0)]_x`.
    pub fn zero() -> Self {
        BaseXNumeral {
            digits: vec![BaseXDigit::zero()],
            min_base: BigInt::one(),
        }
    }

    /// Validates digits (most significant first) and strips leading `(0)` padding.
    pub fn from_digits(digits: Vec<BaseXDigit>) -> Result<Self> {
        for d in &digits {
            d.validate()?;
        }
        let skip = digits.iter().take_while(|d| d.is_zero()).count();
        if skip == digits.len() {
            return Ok(Self::zero());
        }
        let digits: Vec<BaseXDigit> = digits.into_iter().skip(skip).collect();
        let min_base = min_base_of(&digits);
        Ok(BaseXNumeral { digits, min_base })
    }

    /// From least-significant-first digits that are already valid.
    pub(crate) fn from_digits_le(mut digits: Vec<BaseXDigit>) -> Self {
        debug_assert!(digits.iter().all(|d| d.validate().is_ok()));
        while digits.len() > 1 && digits.last().is_some_and(BaseXDigit::is_zero) {
            digits.pop();
        }
        if digits.is_empty() {
            return Self::zero();
        }
        digits.reverse();
        let min_base = min_base_of(&digits);
        BaseXNumeral { digits, min_base }
    }

    pub fn digits(&self) -> &[BaseXDigit] {
        &self.digits
    }

    /// Least-significant-first copy of the digits.
    pub(crate) fn digits_le(&self) -> Vec<BaseXDigit> {
        self.digits.iter().rev().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.len() == 1 && self.digits[0].is_zero()
    }

    pub fn min_base(&self) -> &BigInt {
        &self.min_base
    }

    /// Checks that every digit lies in the alphabet of size `base`.
    pub fn check_alphabet(&self, base: &BigInt) -> Result<()> {
        match self.digits.iter().find(|d| &d.required_base() > base) {
            Some(d) => Err(Error::OutOfAlphabet {
                digit: d.to_string(),
                base: base.clone(),
            }),
            None => Ok(()),
        }
    }

    /// Expands `sum b_i(x) x^i` into coefficient form.
    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.digits.len();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, d) in self.digits.iter().rev().enumerate() {
            match d {
                Constant(a) => coeffs[i] += a,
                Linear(a) => {
                    coeffs[i] -= a;
                    coeffs[i + 1] += 1;
                }
            }
        }
        debug_assert!(n > 0);
        Polynomial::new(coeffs)
    }

    /// Digit values at `x = b`, most significant first.
    pub fn eval_digits(&self, b: &BigInt) -> Vec<BigInt> {
        self.digits.iter().map(|d| d.eval(b)).collect()
    }
}

fn min_base_of(digits: &[BaseXDigit]) -> BigInt {
    digits
        .iter()
        .map(BaseXDigit::required_base)
        .max()
        .filter(|m| m >= &BigInt::one())
        .unwrap_or_else(BigInt::one)
}

/// Encodes a positive polynomial, working upward from the constant term: a negative
/// running coefficient `-a` becomes the digit `(x-a)` and pushes `-1` onto the next power.
pub fn to_base_x(f: &Polynomial) -> Result<BaseXNumeral> {
    if !f.is_positive() {
        return Err(Error::NotPositive);
    }
    let mut digits = Vec::with_capacity(f.coeffs().len());
    let mut borrow = false;
    for a in f.coeffs() {
        let c = if borrow { a - 1 } else { a.clone() };
        if c.is_negative() {
            digits.push(Linear(-c));
            borrow = true;
        } else {
            digits.push(Constant(c));
            borrow = false;
        }
    }
    debug_assert!(!borrow, "leading coefficient absorbs the final borrow");
    Ok(BaseXNumeral::from_digits_le(digits))
}

pub fn from_base_x(num: &BaseXNumeral) -> Polynomial {
    num.to_polynomial()
}

pub fn min_base(f: &Polynomial) -> Result<BigInt> {
    Ok(to_base_x(f)?.min_base)
}

/// Total order on `Z[x]`: the sign of the leading coefficient of `f - g`.
pub fn compare(f: &Polynomial, g: &Polynomial) -> Ordering {
    let d = f - g;
    match d.leading() {
        None => Ordering::Equal,
        Some(c) if c.is_positive() => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

/// Compares two numerals by digit count, then lexicographically under the digit chain
/// order. Agrees with [`compare`] on the decoded polynomials.
pub fn compare_numerals(a: &BaseXNumeral, b: &BaseXNumeral) -> Ordering {
    let la = if a.is_zero() { 0 } else { a.len() };
    let lb = if b.is_zero() { 0 } else { b.len() };
    la.cmp(&lb).then_with(|| a.digits.cmp(&b.digits))
}

pub fn successor(f: &Polynomial) -> Polynomial {
    f + &Polynomial::one()
}

pub fn predecessor(f: &Polynomial) -> Polynomial {
    f - &Polynomial::one()
}

/// Text for any polynomial: `[(0)]_x` for zero, `-` prefix for negative polynomials.
pub fn format_signed(f: &Polynomial) -> String {
    if f.is_zero() {
        return BaseXNumeral::zero().to_string();
    }
    if f.is_negative() {
        let num = to_base_x(&-f).expect("negation of a negative polynomial is positive");
        return format!("-{num}");
    }
    to_base_x(f).expect("positive").to_string()
}

/// Parses numeral text with an optional leading `-` into a polynomial.
pub fn parse_signed(s: &str) -> Result<Polynomial> {
    let trimmed = s.trim_start();
    let offset = s.len() - trimmed.len();
    if let Some(rest) = trimmed.strip_prefix('-') {
        let num = parse_at(rest, offset + 1)?;
        return Ok(-num.to_polynomial());
    }
    Ok(parse_at(trimmed, offset)?.to_polynomial())
}

/// Parses numeral text and requires every digit to fit the alphabet of size `base`.
pub fn parse_strict(s: &str, base: &BigInt) -> Result<BaseXNumeral> {
    let num: BaseXNumeral = s.parse()?;
    num.check_alphabet(base)?;
    Ok(num)
}

impl fmt::Display for BaseXNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        f.write_str("]_x")
    }
}

impl FromStr for BaseXNumeral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_at(s, 0)
    }
}

impl Serialize for BaseXNumeral {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BaseXNumeral {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn here(&self) -> usize {
        self.offset + self.pos
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(Error::parse(self.here(), format!("expected '{lit}'")))
        }
    }

    fn decimal(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(self.here(), "expected a decimal number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        Ok(text.parse().expect("ascii digits"))
    }
}

fn parse_at(s: &str, offset: usize) -> Result<BaseXNumeral> {
    let mut cur = Cursor {
        bytes: s.as_bytes(),
        pos: 0,
        offset,
    };
    cur.expect("[")?;
    let mut digits = Vec::new();
    while cur.peek() == Some(b'(') {
        cur.pos += 1;
        let digit_pos = cur.here();
        let digit = if cur.peek() == Some(b'x') {
            cur.pos += 1;
            cur.expect("-")?;
            let a = cur.decimal()?;
            if a.is_zero() {
                return Err(Error::parse(digit_pos, "linear digit (x-a) requires a >= 1"));
            }
            Linear(a)
        } else {
            Constant(cur.decimal()?)
        };
        cur.expect(")")?;
        digits.push(digit);
    }
    if digits.is_empty() {
        return Err(Error::parse(cur.here(), "expected '('"));
    }
    cur.expect("]_x")?;
    cur.skip_ws();
    if cur.pos != cur.bytes.len() {
        return Err(Error::parse(cur.here(), "unexpected trailing input"));
    }
    BaseXNumeral::from_digits(digits)
}
