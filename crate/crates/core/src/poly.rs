//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty coefficient vector,
//! and no stored polynomial carries a zero leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

/// Summary quantities of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMeta {
    pub height: BigInt,
    pub l2_norm_sq: BigInt,
    pub content: BigInt,
    pub is_positive: bool,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and every nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Positive in the ordered-domain sense: positive leading coefficient.
    pub fn is_positive(&self) -> bool {
        self.leading().is_some_and(Signed::is_positive)
    }

    pub fn is_negative(&self) -> bool {
        self.leading().is_some_and(Signed::is_negative)
    }

    /// Exact value at `n` (Horner).
    pub fn evaluate(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= n;
            acc += c;
        }
        acc
    }

    /// Splits off the content: returns `(c, g)` with `self = c * g`, `c >= 1` and `g` primitive.
    pub fn content_primitive(&self) -> Result<(BigInt, Polynomial)> {
        if self.is_zero() {
            return Err(Error::ZeroContent);
        }
        let content = self.content_unchecked();
        let primitive = Polynomial {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        };
        Ok((content, primitive))
    }

    fn content_unchecked(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroContent);
        }
        Ok(self.content_unchecked())
    }

    /// `max |a_i|`.
    pub fn height(&self) -> Result<BigInt> {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .ok_or(Error::ZeroPolynomial("height"))
    }

    /// `sum a_i^2`, the squared l2 norm, exact.
    pub fn l2_norm_sq(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("l2 norm"));
        }
        Ok(self.coeffs.iter().map(|c| c * c).sum())
    }

    pub fn meta(&self) -> Result<PolyMeta> {
        Ok(PolyMeta {
            height: self.height()?,
            l2_norm_sq: self.l2_norm_sq()?,
            content: self.content()?,
            is_positive: self.is_positive(),
        })
    }

    /// The fixed divisor `gcd(f(0), f(1), ..., f(deg f))`, the gcd of all integer values.
    pub fn fixed_divisor(&self) -> BigInt {
        let Some(deg) = self.degree() else {
            return BigInt::zero();
        };
        let mut g = BigInt::zero();
        for n in 0..=deg {
            g = g.gcd(&self.evaluate(&BigInt::from(n)));
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Values at the integers are relatively prime. Computed through the fixed divisor.
    pub fn is_proper(&self) -> Result<bool> {
        if self.is_constant() {
            return Err(Error::ConstantProperness);
        }
        Ok(self.fixed_divisor().is_one())
    }

    /// Same predicate as [`Polynomial::is_proper`], via the prime sieve: a prime dividing
    /// every value either divides the content or is at most the degree.
    pub fn is_proper_by_primes(&self) -> Result<bool> {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantProperness),
        };
        if !self.content_unchecked().is_one() {
            return Ok(false);
        }
        let improper = small_primes_up_to(deg).into_iter().any(|p| {
            let p_big = BigInt::from(p);
            (0..p).all(|i| self.evaluate(&BigInt::from(i)).is_multiple_of(&p_big))
        });
        Ok(!improper)
    }

    /// Positive, proper and irreducible. Constants are never PPI.
    pub fn is_ppi(&self) -> bool {
        if !self.is_positive() || self.is_constant() {
            return false;
        }
        if !matches!(self.is_proper(), Ok(true)) {
            return false;
        }
        crate::factor::is_irreducible(self)
    }

    /// `f(x + a)`, expanded by repeated synthetic division (Taylor shift).
    pub fn shift(&self, a: &BigInt) -> Polynomial {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if a.is_zero() || n <= 1 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Polynomial::new(c)
    }

    /// `f * x^n`.
    pub fn shl(&self, n: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact quotient `self / g` in `Z[x]`, or `None` when `g` does not divide `self`.
    ///
    /// Every step of the long division must divide the leading coefficient exactly,
    /// which is the integrality check of rational long division.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let dg = g.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let lg = g.leading()?;
        let mut r = self.coeffs.clone();
        let df = r.len() - 1;
        if df < dg {
            return None;
        }
        let mut q = vec![BigInt::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = &r[k + dg];
            if top.is_zero() {
                continue;
            }
            let (t, rem) = top.div_rem(lg);
            if !rem.is_zero() {
                return None;
            }
            for (i, gc) in g.coeffs.iter().enumerate() {
                r[k + i] -= &t * gc;
            }
            q[k] = t;
        }
        if r.iter().all(Zero::is_zero) {
            Some(Polynomial::new(q))
        } else {
            None
        }
    }
}

pub(crate) fn small_primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &p)| p.then_some(i))
        .collect()
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Accepts signed sums of `k`, `x`, `x^n`, `k*x^n` and `kx^n`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if toks.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let end = s.len();
        let mut pos = 0;
        let mut coeffs: Vec<BigInt> = Vec::new();
        let at = |pos: usize| toks.get(pos).map_or(end, |t| t.0);

        while pos < toks.len() {
            let mut negative = false;
            match toks[pos].1 {
                '+' | '-' => {
                    negative = toks[pos].1 == '-';
                    pos += 1;
                }
                _ if pos > 0 => return Err(Error::parse(at(pos), "expected '+' or '-'")),
                _ => {}
            }
            let digits_start = pos;
            while pos < toks.len() && toks[pos].1.is_ascii_digit() {
                pos += 1;
            }
            let coeff = if pos > digits_start {
                let text: String = toks[digits_start..pos].iter().map(|t| t.1).collect();
                Some(text.parse::<BigInt>().expect("ascii digits"))
            } else {
                None
            };
            if coeff.is_some() && pos < toks.len() && toks[pos].1 == '*' {
                pos += 1;
                if pos >= toks.len() || toks[pos].1 != 'x' {
                    return Err(Error::parse(at(pos), "expected 'x' after '*'"));
                }
            }
            let mut exponent = 0usize;
            if pos < toks.len() && toks[pos].1 == 'x' {
                pos += 1;
                exponent = 1;
                if pos < toks.len() && toks[pos].1 == '^' {
                    pos += 1;
                    let exp_start = pos;
                    while pos < toks.len() && toks[pos].1.is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == exp_start {
                        return Err(Error::parse(at(pos), "expected exponent after '^'"));
                    }
                    let text: String = toks[exp_start..pos].iter().map(|t| t.1).collect();
                    exponent = text
                        .parse()
                        .map_err(|_| Error::parse(at(exp_start), "exponent too large"))?;
                }
            } else if coeff.is_none() {
                return Err(Error::parse(at(pos), "expected a term"));
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            if coeffs.len() <= exponent {
                coeffs.resize(exponent + 1, BigInt::zero());
            }
            coeffs[exponent] += c;
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);
