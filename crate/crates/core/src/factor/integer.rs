//! Integer factorization: trial division by primes below 10^6, Miller-Rabin, and
//! Pollard's rho with Brent's cycle detection. Values below 2^64 take a `u64` path.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;

/// Witnesses that make Miller-Rabin deterministic for every `n < 2^64`; above that
/// they give a strong probable-prime test.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn trial_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        crate::poly::small_primes_up_to(TRIAL_LIMIT as usize)
            .into_iter()
            .map(|p| p as u32)
            .collect()
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic below 2^64, strong probable prime to bases 2..37 above.
pub fn is_prime(n: &BigInt) -> bool {
    match n.sign() {
        Sign::Plus => is_prime_big(n.magnitude()),
        _ => false,
    }
}

fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut ys = 2u64;
        let mut r = 1u64;
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn rho_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y, mut g) = (BigUint::from(2u32), BigUint::from(2u32), one.clone());
        let mut q = one.clone();
        let mut ys = y.clone();
        let mut r = 1u64;
        let m = 128u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = q * diff(&x, &y) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = diff(&x, &ys).gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn split_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = rho_u64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

fn split_big(n: BigUint, out: &mut Vec<BigUint>) {
    if let Some(small) = n.to_u64() {
        let mut v = Vec::new();
        split_u64(small, &mut v);
        out.extend(v.into_iter().map(BigUint::from));
        return;
    }
    if is_prime_big(&n) {
        out.push(n);
        return;
    }
    let d = rho_big(&n);
    let rest = &n / &d;
    split_big(d, out);
    split_big(rest, out);
}

fn trial_u64(mut n: u64, start: usize, out: &mut Vec<u64>) {
    for (i, &p) in trial_primes().iter().enumerate().skip(start) {
        let p = p as u64;
        if n == 1 || p * p > n {
            break;
        }
        while n % p == 0 {
            n /= p;
            out.push(p);
        }
        if i % 256 == 255 && is_prime_u64(n) {
            break;
        }
    }
    split_u64(n, out);
}

/// Prime factors of `n >= 1` with multiplicity, ascending. `factor_integer(1)` is empty.
pub fn factor_integer(n: &BigInt) -> Result<Vec<BigInt>> {
    if n.sign() != Sign::Plus {
        return Err(Error::precondition("factor_integer requires n >= 1"));
    }
    let mut rest = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();
    let mut small: Vec<u64> = Vec::new();
    let mut next = 0;
    while let Some(&p) = trial_primes().get(next) {
        if let Some(r) = rest.to_u64() {
            trial_u64(r, next, &mut small);
            rest = BigUint::one();
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            small.push(p as u64);
        }
        next += 1;
        if next % 512 == 0 && is_prime_big(&rest) {
            break;
        }
    }
    if !rest.is_one() {
        split_big(rest, &mut primes);
    }
    primes.extend(small.into_iter().map(BigUint::from));
    primes.sort();
    Ok(primes.into_iter().map(BigInt::from).collect())
}

/// All positive divisors of the product of `primes`, ascending.
pub fn divisors(primes: &[BigInt]) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    let mut i = 0;
    while i < primes.len() {
        let p = &primes[i];
        let mult = primes[i..].iter().take_while(|q| *q == p).count();
        let base_len = divs.len();
        let mut power = BigInt::one();
        for _ in 0..mult {
            power *= p;
            for j in 0..base_len {
                let d = &divs[j] * &power;
                divs.push(d);
            }
        }
        i += mult;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64) -> Vec<u64> {
        factor_integer(&BigInt::from(n))
            .unwrap()
            .iter()
            .map(|p| p.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn worked_values() {
        assert_eq!(f(7_031_697_638), vec![2, 7, 1249, 402_133]);
        assert_eq!(f(7_417_124_052), vec![2, 2, 3, 13, 13, 229, 15_971]);
        assert!(f(1).is_empty());
        assert!(factor_integer(&BigInt::zero()).is_err());
        assert!(factor_integer(&BigInt::from(-6)).is_err());
    }

    #[test]
    fn large_semiprimes() {
        // two primes above the trial-division bound
        let (p, q) = (1_000_003u64, 998_244_353u64);
        assert_eq!(f(p * q), vec![p, q]);
        let big_p: BigInt = "18446744073709551629".parse().unwrap(); // smallest prime above 2^64
        let big_q: BigInt = "1000000007".parse().unwrap();
        let n = &big_p * &big_q;
        assert_eq!(factor_integer(&n).unwrap(), vec![big_q, big_p.clone()]);
        assert!(is_prime(&big_p));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..200).filter(|&n| is_prime_u64(n)).collect();
        let expect: Vec<u64> = crate::poly::small_primes_up_to(199).into_iter().map(|p| p as u64).collect();
        assert_eq!(primes, expect);
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest prime below 2^64
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        assert!(!is_prime(&BigInt::from(-7)));
        assert!(is_prime(&BigInt::from(1187)));
    }

    #[test]
    fn divisor_enumeration() {
        let ds = divisors(&[2, 2, 3].map(BigInt::from));
        assert_eq!(ds, [1, 2, 3, 4, 6, 12].map(BigInt::from));
        assert_eq!(divisors(&[]), vec![BigInt::one()]);
    }
}
