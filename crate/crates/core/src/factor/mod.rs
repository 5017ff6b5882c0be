//! Factorization of positive polynomials from two integer values.
//!
//! For `b` beyond the minimum factor base, every positive divisor `g` of `f` satisfies
//! `g(b) | f(b)` and the base-`b` digits of `g(b)` are the base-x digits of `g` evaluated
//! at `b`. Writing a divisor of `f(b1)` in base `b1` and a divisor of `f(b2)` in base `b2`
//! therefore exposes each digit as either a fixed constant (same digit in both) or a
//! linear digit `x - j` (same offset `j` below both bases). Each such pattern is a
//! candidate factor, confirmed by exact division.

mod integer;
mod kronecker;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::baseconv::digits_le;
use crate::error::{Error, Result};
use crate::numeral::{compare, BaseXDigit, BaseXNumeral};
use crate::poly::Polynomial;

pub use integer::{divisors, factor_integer, is_prime, is_prime_u64};
pub use kronecker::kronecker_oracle;

/// An irreducible factor and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Polynomial,
    pub mult: u32,
}

/// One splitting attempt: the polynomial being split, the evaluation points and values,
/// their prime factorizations and, when a divisor was found, its base-x pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateLevel {
    pub poly: Polynomial,
    pub bound: BigInt,
    pub b1: BigInt,
    pub b2: BigInt,
    pub v1: BigInt,
    pub v2: BigInt,
    pub primes1: Vec<BigInt>,
    pub primes2: Vec<BigInt>,
    pub pattern: Option<BaseXNumeral>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub content: BigInt,
    /// Primitive positive irreducible factors, ascending in the base-x order.
    pub factors: Vec<Factor>,
    pub certificate: Vec<CertificateLevel>,
}

impl FactorizationResult {
    fn from_parts(content: BigInt, mut found: Vec<Polynomial>, certificate: Vec<CertificateLevel>) -> Self {
        found.sort_by(compare);
        let mut factors: Vec<Factor> = Vec::new();
        for poly in found {
            match factors.last_mut() {
                Some(last) if last.poly == poly => last.mult += 1,
                _ => factors.push(Factor { poly, mult: 1 }),
            }
        }
        FactorizationResult {
            content,
            factors,
            certificate,
        }
    }

    /// `content * prod factor^mult`.
    pub fn product(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.content.clone());
        for f in &self.factors {
            for _ in 0..f.mult {
                acc = &acc * &f.poly;
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.content.is_one() && self.factors.len() == 1 && self.factors[0].mult == 1
    }
}

/// A divisor found by [`find_factor`] and the divisor pair that exposed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundFactor {
    pub factor: Polynomial,
    pub d1: BigInt,
    pub d2: BigInt,
    pub pattern: BaseXNumeral,
}

/// A prime value of `f` past the bound, certifying irreducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohnWitness {
    pub base: BigInt,
    pub value: BigInt,
}

fn require_positive_nonconstant(f: &Polynomial) -> Result<()> {
    if !f.is_positive() {
        return Err(Error::NotPositive);
    }
    if f.is_constant() {
        return Err(Error::precondition("polynomial must be non-constant"));
    }
    Ok(())
}

/// Upper bound on the minimum base of every positive divisor:
/// `floor(2^deg * ||f||) + 1`, computed as `isqrt(4^deg * sum a_i^2) + 1`.
pub fn mfb_bound(f: &Polynomial) -> Result<BigInt> {
    require_positive_nonconstant(f)?;
    let deg = f.degree().expect("non-constant");
    let scaled = f.l2_norm_sq()? << (2 * deg);
    Ok(scaled.sqrt() + 1)
}

/// Default evaluation points `bound + 2`, `bound + 3`.
pub fn default_bases(f: &Polynomial) -> Result<(BigInt, BigInt)> {
    let m = mfb_bound(f)?;
    Ok((&m + 2, &m + 3))
}

/// Base-`b` digits, most significant first.
fn digits_be(n: &BigInt, b: &BigInt) -> Vec<BigInt> {
    let mut d = digits_le(n, b);
    d.reverse();
    d
}

fn pattern_from_digits(u: &[BigInt], b1: &BigInt, v: &[BigInt], b2: &BigInt) -> Option<BaseXNumeral> {
    if u.len() != v.len() {
        return None;
    }
    let mut digits = Vec::with_capacity(u.len());
    for (du, dv) in u.iter().zip(v) {
        if du == dv {
            digits.push(BaseXDigit::Constant(du.clone()));
            continue;
        }
        let j = b1 - du;
        if j.is_positive() && j == b2 - dv {
            digits.push(BaseXDigit::Linear(j));
        } else {
            return None;
        }
    }
    BaseXNumeral::from_digits(digits).ok()
}

/// Reads a common base-x pattern off `d1` written in base `b1` and `d2` written in base `b2`.
///
/// Equal digits give a constant digit, equal offsets below the bases give a linear digit;
/// anything else, including a length mismatch, gives `None`.
pub fn candidate_from_pair(d1: &BigInt, b1: &BigInt, d2: &BigInt, b2: &BigInt) -> Option<Polynomial> {
    if !d1.is_positive() || !d2.is_positive() || b1 == b2 || b1 < &BigInt::from(2) || b2 < &BigInt::from(2) {
        return None;
    }
    pattern_from_digits(&digits_be(d1, b1), b1, &digits_be(d2, b2), b2).map(|n| n.to_polynomial())
}

struct Candidate {
    value: BigInt,
    digits: Vec<BigInt>,
}

/// Proper divisors of `v` grouped by their digit count in base `b`, ascending within each group.
fn divisor_groups(primes: &[BigInt], v: &BigInt, b: &BigInt) -> BTreeMap<usize, Vec<Candidate>> {
    let mut groups: BTreeMap<usize, Vec<Candidate>> = BTreeMap::new();
    for d in divisors(primes) {
        if d.is_one() || &d == v {
            continue;
        }
        let digits = digits_be(&d, b);
        groups.entry(digits.len()).or_default().push(Candidate { value: d, digits });
    }
    groups
}

fn validate_split(f: &Polynomial, b1: &BigInt, b2: &BigInt) -> Result<BigInt> {
    require_positive_nonconstant(f)?;
    if !f.content()?.is_one() {
        return Err(Error::precondition("find_factor requires a primitive polynomial"));
    }
    if b1 == b2 {
        return Err(Error::precondition("evaluation points b1 and b2 must differ"));
    }
    let bound = mfb_bound(f)?;
    let least = &bound + 1;
    if b1 <= &least || b2 <= &least {
        return Err(Error::precondition(format!(
            "evaluation points must exceed the factor-base bound plus one ({least})"
        )));
    }
    Ok(bound)
}

/// Runs one split of `f` at `b1`, `b2` and records it.
fn split(f: &Polynomial, b1: &BigInt, b2: &BigInt) -> Result<(CertificateLevel, Option<FoundFactor>)> {
    let bound = validate_split(f, b1, b2)?;
    let v1 = f.evaluate(b1);
    let v2 = f.evaluate(b2);
    let primes1 = factor_integer(&v1)?;
    let primes2 = factor_integer(&v2)?;
    let found = search_pairs(f, b1, b2, &v1, &v2, &primes1, &primes2);
    let level = CertificateLevel {
        poly: f.clone(),
        bound,
        b1: b1.clone(),
        b2: b2.clone(),
        v1,
        v2,
        primes1,
        primes2,
        pattern: found.as_ref().map(|ff| ff.pattern.clone()),
    };
    Ok((level, found))
}

/// Scans divisor pairs by digit count, then `d1`, then `d2`. Pairs are tested in
/// parallel but the first hit in that order wins.
fn search_pairs(
    f: &Polynomial,
    b1: &BigInt,
    b2: &BigInt,
    v1: &BigInt,
    v2: &BigInt,
    primes1: &[BigInt],
    primes2: &[BigInt],
) -> Option<FoundFactor> {
    let deg = f.degree().expect("non-constant");
    let groups1 = divisor_groups(primes1, v1, b1);
    let groups2 = divisor_groups(primes2, v2, b2);
    for (len, left) in &groups1 {
        let Some(right) = groups2.get(len) else {
            continue;
        };
        let hit = left.par_iter().find_map_first(|c1| {
            right.iter().find_map(|c2| {
                assert_eq!(c1.digits.len(), c2.digits.len(), "paired divisors share a digit count");
                let pattern = pattern_from_digits(&c1.digits, b1, &c2.digits, b2)?;
                let g = pattern.to_polynomial();
                let dg = g.degree().unwrap_or(0);
                if dg == 0 || dg >= deg {
                    return None;
                }
                f.div_exact(&g)?;
                Some(FoundFactor {
                    factor: g,
                    d1: c1.value.clone(),
                    d2: c2.value.clone(),
                    pattern,
                })
            })
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// First non-constant proper divisor of the primitive positive `f` exposed by a
/// divisor pair of `f(b1)`, `f(b2)`. `None` means `f` is irreducible.
pub fn find_factor(f: &Polynomial, b1: &BigInt, b2: &BigInt) -> Result<Option<FoundFactor>> {
    Ok(split(f, b1, b2)?.1)
}

/// Full factorization of a positive polynomial with default evaluation points.
pub fn factorize(f: &Polynomial) -> Result<FactorizationResult> {
    factorize_with(f, None)
}

/// As [`factorize`], with optional evaluation points for the first split of the primitive
/// part. Every later quotient gets its own default points.
pub fn factorize_with(f: &Polynomial, bases: Option<(BigInt, BigInt)>) -> Result<FactorizationResult> {
    if !f.is_positive() {
        return Err(Error::NotPositive);
    }
    let (content, primitive) = f.content_primitive()?;
    let mut found = Vec::new();
    let mut certificate = Vec::new();
    let mut stack = vec![primitive];
    let mut overrides = bases;
    while let Some(h) = stack.pop() {
        if h.is_constant() {
            continue;
        }
        let (b1, b2) = match overrides.take() {
            Some(b) => b,
            None => default_bases(&h)?,
        };
        let (level, hit) = split(&h, &b1, &b2)?;
        certificate.push(level);
        match hit {
            Some(ff) => {
                let quotient = h.div_exact(&ff.factor).expect("verified divisor");
                stack.push(quotient);
                stack.push(ff.factor);
            }
            None => found.push(h),
        }
    }
    Ok(FactorizationResult::from_parts(content, found, certificate))
}

/// Generalized Cohn test: for a polynomial whose coefficients are base-`b` digits,
/// a prime `f(b)` certifies that `f` is irreducible and proper.
pub fn gcic_test(f: &Polynomial, b: &BigInt) -> Result<Option<BigInt>> {
    if f.is_constant() {
        return Err(Error::precondition("polynomial must be non-constant"));
    }
    if b < &BigInt::from(2) {
        return Err(Error::precondition("base must be at least 2"));
    }
    if f.coeffs().iter().any(|a| a.is_negative() || a >= b) {
        return Err(Error::NotDigitPolynomial);
    }
    let p = f.evaluate(b);
    Ok(is_prime(&p).then_some(p))
}

/// Looks for a prime value `f(b)` with `b` in `(bound+1, bound+1+search_limit]`.
/// A witness proves `f` proper and irreducible; `None` proves nothing.
pub fn cohn_general_test(f: &Polynomial, search_limit: u64) -> Result<Option<CohnWitness>> {
    let start = mfb_bound(f)? + 2;
    for k in 0..search_limit {
        let base = &start + k;
        let value = f.evaluate(&base);
        if is_prime(&value) {
            return Ok(Some(CohnWitness { base, value }));
        }
    }
    Ok(None)
}

const QUICK_WITNESS_SEARCH: u64 = 16;

/// Irreducibility in `Z[x]`. Constants are irreducible exactly when they are `±` a prime.
pub fn is_irreducible(f: &Polynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.is_constant() {
        return is_prime(&f.coeff(0).abs());
    }
    let f = if f.is_negative() { -f } else { f.clone() };
    if !f.content().is_ok_and(|c| c.is_one()) {
        return false;
    }
    if f.degree() == Some(1) {
        return true;
    }
    if matches!(cohn_general_test(&f, QUICK_WITNESS_SEARCH), Ok(Some(_))) {
        return true;
    }
    factorize(&f).is_ok_and(|r| r.is_irreducible())
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(&self.poly, &other.poly).then(self.mult.cmp(&other.mult))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn polys(r: &FactorizationResult) -> Vec<(String, u32)> {
        r.factors.iter().map(|f| (f.poly.to_string(), f.mult)).collect()
    }

    #[test]
    fn bounds() {
        assert_eq!(mfb_bound(&p("x^5+x^4+x^2+x+2")).unwrap(), big(91));
        assert_eq!(mfb_bound(&p("x+1")).unwrap(), big(3));
        assert_eq!(mfb_bound(&p("x^3+x^2+8x+7")).unwrap(), big(86));
        assert!(mfb_bound(&p("5")).is_err());
        assert!(mfb_bound(&p("-x")).is_err());
    }

    /// Largest `k` with `k^2 <= 4^deg * ||f||^2`, by linear search.
    #[test]
    fn bound_matches_linear_search() {
        for s in ["x^3+x^2+8x+7", "x^5+x^4+x^2+x+2", "x+1", "3x^2-7x+1", "x^4-50"] {
            let f = p(s);
            let target = f.l2_norm_sq().unwrap() << (2 * f.degree().unwrap());
            let mut k = BigInt::zero();
            while (&k + 1u32) * (&k + 1u32) <= target {
                k += 1u32;
            }
            assert_eq!(mfb_bound(&f).unwrap(), k + 1, "{s}");
        }
    }

    #[test]
    fn pair_patterns() {
        assert_eq!(candidate_from_pair(&big(8743), &big(93), &big(8931), &big(94)), Some(p("x^2+x+1")));
        assert_eq!(candidate_from_pair(&big(804_266), &big(93), &big(830_492), &big(94)), Some(p("x^3-x+2")));
        assert_eq!(candidate_from_pair(&big(5), &big(93), &big(500), &big(94)), None);
        assert_eq!(candidate_from_pair(&big(5), &big(93), &big(7), &big(94)), None);
        assert_eq!(candidate_from_pair(&big(90), &big(93), &big(91), &big(94)), Some(p("x-3")));
    }

    #[test]
    fn worked_find_factor() {
        let f = p("x^5+x^4+x^2+x+2");
        let ff = find_factor(&f, &big(93), &big(94)).unwrap().unwrap();
        assert_eq!(ff.factor, p("x^2+x+1"));
        assert_eq!((ff.d1, ff.d2), (big(8743), big(8931)));
        assert_eq!(ff.pattern.to_string(), "[(1)(1)(1)]_x");
        assert_eq!(find_factor(&p("x^2+x+1"), &big(93), &big(94)).unwrap(), None);
    }

    #[test]
    fn find_factor_of_difference_of_squares() {
        let f = p("x^2-1");
        let (b1, b2) = default_bases(&f).unwrap();
        assert_eq!(find_factor(&f, &b1, &b2).unwrap().unwrap().factor, p("x-1"));
    }

    #[test]
    fn find_factor_preconditions() {
        let f = p("x^5+x^4+x^2+x+2");
        assert!(find_factor(&f, &big(92), &big(94)).is_err());
        assert!(find_factor(&f, &big(94), &big(94)).is_err());
        assert!(find_factor(&p("2x+2"), &big(10), &big(11)).is_err());
        assert!(find_factor(&p("-x^2+1"), &big(10), &big(11)).is_err());
    }

    #[test]
    fn factorize_examples() {
        let r = factorize(&p("x^5+x^4+x^2+x+2")).unwrap();
        assert_eq!(polys(&r), vec![("x^2+x+1".into(), 1), ("x^3-x+2".into(), 1)]);
        assert_eq!(r.content, big(1));
        let top = &r.certificate[0];
        assert_eq!((top.bound.clone(), top.b1.clone(), top.b2.clone()), (big(91), big(93), big(94)));

        let r = factorize(&p("x^2-3x+2")).unwrap();
        assert_eq!(polys(&r), vec![("x-2".into(), 1), ("x-1".into(), 1)]);
        let r = factorize(&p("x^4+4")).unwrap();
        assert_eq!(polys(&r), vec![("x^2-2x+2".into(), 1), ("x^2+2x+2".into(), 1)]);
        assert_eq!(factorize(&p("-x")), Err(Error::NotPositive));
    }

    #[test]
    fn content_and_multiplicity() {
        let f = p("6x^3+12x^2+6x");
        let r = factorize(&f).unwrap();
        assert_eq!(r.content, big(6));
        assert_eq!(polys(&r), vec![("x".into(), 1), ("x+1".into(), 2)]);
        assert_eq!(r.product(), f);
        let r = factorize(&p("7")).unwrap();
        assert_eq!((r.content, r.factors.len()), (big(7), 0));
    }

    #[test]
    fn override_bases() {
        let f = p("x^5+x^4+x^2+x+2");
        let r = factorize_with(&f, Some((big(100), big(97)))).unwrap();
        assert_eq!(r.certificate[0].b1, big(100));
        assert_eq!(polys(&r), vec![("x^2+x+1".into(), 1), ("x^3-x+2".into(), 1)]);
        assert!(factorize_with(&f, Some((big(92), big(93)))).is_err());
    }

    #[test]
    fn gcic_examples() {
        assert_eq!(gcic_test(&p("x^3+x^2+8x+7"), &big(10)).unwrap(), Some(big(1187)));
        assert_eq!(gcic_test(&p("x^4+1"), &big(2)).unwrap(), Some(big(17)));
        assert_eq!(gcic_test(&p("x+1"), &big(4)).unwrap(), Some(big(5)));
        assert_eq!(gcic_test(&p("x+3"), &big(5)).unwrap(), None);
        assert_eq!(gcic_test(&p("x+10"), &big(10)), Err(Error::NotDigitPolynomial));
        assert_eq!(gcic_test(&p("x-1"), &big(10)), Err(Error::NotDigitPolynomial));
    }

    #[test]
    fn cohn_examples() {
        let w = cohn_general_test(&p("x^2-2x-1"), 10).unwrap().unwrap();
        assert_eq!((w.base, w.value), (big(14), big(167)));
        assert_eq!(cohn_general_test(&p("x^2-x+4"), 100).unwrap(), None);
        assert!(cohn_general_test(&p("3"), 10).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&p("x^2+1")));
        assert!(is_irreducible(&p("-x^2-1")));
        assert!(!is_irreducible(&p("2x+2")));
        assert!(is_irreducible(&p("7")));
        assert!(!is_irreducible(&p("6")));
        assert!(!is_irreducible(&p("x^4+4")));
    }
}
