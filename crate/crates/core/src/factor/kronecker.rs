//! Kronecker's factorization by interpolation through small values.
//!
//! Slow and test-scale only. It shares nothing with the two-evaluation search beyond
//! polynomial arithmetic, which makes it a useful cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::FactorizationResult;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

const MAX_DEGREE: usize = 6;
const MAX_HEIGHT: u32 = 50;
const POINT_RADIUS: i64 = 10;

/// Positive divisors of `n > 0` by trial division.
fn small_divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            low.push(d);
            if d * d != n {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

fn abs_u64(v: &BigInt) -> u64 {
    v.abs().to_u64().expect("values at small points fit in u64 under the oracle guard")
}

/// `x - r` for the first integer root `r` of `h`.
fn integer_root_factor(h: &Polynomial) -> Option<Polynomial> {
    let c0 = h.coeff(0);
    if c0.is_zero() {
        return Some(Polynomial::x());
    }
    for d in small_divisors(abs_u64(&c0)) {
        for r in [BigInt::from(d), -BigInt::from(d)] {
            if h.evaluate(&r).is_zero() {
                return Some(Polynomial::new(vec![-r, BigInt::from(1)]));
            }
        }
    }
    None
}

struct Point {
    x: BigInt,
    divisors: Vec<BigInt>,
}

/// Depth-first over value tuples, extending the Newton divided-difference diagonal one
/// point at a time and abandoning a branch as soon as a difference is not an integer.
struct Search<'a> {
    h: &'a Polynomial,
    points: &'a [Point],
    coeffs: Vec<BigInt>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, diag: &[BigInt]) -> Option<Polynomial> {
        if k == self.points.len() {
            return self.try_candidate();
        }
        let signs: &[i32] = if k == 0 { &[1] } else { &[1, -1] };
        for d in &self.points[k].divisors {
            for &s in signs {
                let y = if s > 0 { d.clone() } else { -d };
                let mut next = Vec::with_capacity(k + 1);
                next.push(y);
                let mut ok = true;
                for j in 1..=k {
                    let num = &next[j - 1] - &diag[j - 1];
                    let den = &self.points[k].x - &self.points[k - j].x;
                    let (q, r) = num.div_rem(&den);
                    if !r.is_zero() {
                        ok = false;
                        break;
                    }
                    next.push(q);
                }
                if !ok {
                    continue;
                }
                self.coeffs.push(next[k].clone());
                let found = self.run(k + 1, &next);
                self.coeffs.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    fn try_candidate(&self) -> Option<Polynomial> {
        let mut g = Polynomial::zero();
        for k in (0..self.coeffs.len()).rev() {
            let linear = Polynomial::new(vec![-self.points[k].x.clone(), BigInt::from(1)]);
            g = &(&g * &linear) + &Polynomial::constant(self.coeffs[k].clone());
        }
        let dg = g.degree()?;
        if dg == 0 || dg >= self.h.degree()? {
            return None;
        }
        if g.is_negative() {
            g = -g;
        }
        self.h.div_exact(&g).map(|_| g)
    }
}

/// A proper divisor of degree `1..=deg/2`, or `None` when `h` is irreducible.
fn find_divisor(h: &Polynomial) -> Option<Polynomial> {
    let n = h.degree()?;
    if n <= 1 {
        return None;
    }
    if let Some(g) = integer_root_factor(h) {
        return Some(g);
    }
    let mut pool: Vec<Point> = (0..=2 * POINT_RADIUS)
        .map(|i| if i % 2 == 0 { -(i / 2) } else { i / 2 + 1 })
        .map(|t| {
            let x = BigInt::from(t);
            let v = h.evaluate(&x);
            let divisors = small_divisors(abs_u64(&v)).into_iter().map(BigInt::from).collect();
            Point { x, divisors }
        })
        .collect();
    pool.sort_by_key(|p| p.divisors.len());
    for d in 1..=n / 2 {
        let points = &pool[..=d];
        let mut search = Search {
            h,
            points,
            coeffs: Vec::new(),
        };
        if let Some(g) = search.run(0, &[]) {
            return Some(g);
        }
    }
    None
}

/// Factorization by value interpolation, for positive `f` with degree at most 6 and
/// height at most 50. The certificate is empty.
pub fn kronecker_oracle(f: &Polynomial) -> Result<FactorizationResult> {
    if !f.is_positive() {
        return Err(Error::NotPositive);
    }
    if f.degree().is_some_and(|d| d > MAX_DEGREE) || f.height()? > BigInt::from(MAX_HEIGHT) {
        return Err(Error::OracleGuard);
    }
    let (content, primitive) = f.content_primitive()?;
    let mut found = Vec::new();
    let mut stack = vec![primitive];
    while let Some(h) = stack.pop() {
        if h.is_constant() {
            continue;
        }
        match find_divisor(&h) {
            Some(g) => {
                stack.push(h.div_exact(&g).expect("checked divisor"));
                stack.push(g);
            }
            None => found.push(h),
        }
    }
    Ok(FactorizationResult::from_parts(content, found, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn names(f: &str) -> Vec<String> {
        kronecker_oracle(&p(f))
            .unwrap()
            .factors
            .iter()
            .flat_map(|f| std::iter::repeat(f.poly.to_string()).take(f.mult as usize))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(names("x^2-1"), ["x-1", "x+1"]);
        assert_eq!(names("x^2+x+1"), ["x^2+x+1"]);
        assert_eq!(names("x^5+x^4+x^2+x+2"), ["x^2+x+1", "x^3-x+2"]);
        assert_eq!(names("x^4+4"), ["x^2-2x+2", "x^2+2x+2"]);
        assert_eq!(names("x^4+2x^2+1"), ["x^2+1", "x^2+1"]);
        assert_eq!(names("x^3-50x"), ["x", "x^2-50"]);
    }

    #[test]
    fn guard() {
        assert_eq!(kronecker_oracle(&p("x^7+1")), Err(Error::OracleGuard));
        assert_eq!(kronecker_oracle(&p("x+51")), Err(Error::OracleGuard));
        assert_eq!(kronecker_oracle(&p("-x")), Err(Error::NotPositive));
    }
}
