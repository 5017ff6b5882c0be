//! The family of irreducible polynomials attached to a prime `p`: the constant `p`,
//! the cyclotomic seed `Φ_p`, and every PPI polynomial `g` with `g(b) = p` for some
//! `b >= mb(g)`.
//!
//! Members come from the base-`b` representatives of `p` by replacing chosen
//! coefficients `a_i` with the linear digit `x - (b - a_i)`, which keeps the value at `b`.
//! The family is infinite, so enumeration is always capped.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::baseconv::{representative, representative_with, ConvertOptions};
use crate::error::{Error, Result};
use crate::factor::{divisors, factor_integer, gcic_test, is_prime};
use crate::numeral::{min_base, to_base_x, BaseXDigit};
use crate::poly::Polynomial;

/// Largest root bound for which membership also runs the exhaustive root scan.
const SCAN_LIMIT: u64 = 100_000;

/// Largest number of replaceable positions accepted by [`variants`].
pub const MAX_VARIANT_POSITIONS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    /// The constant `p`.
    Constant,
    /// `Φ_p = x^(p-1) + ... + x + 1`, the base-1 representative.
    Seed,
    /// The base-`b` representative of `p`.
    Representative { base: BigInt },
    /// The base-`b` representative with the coefficients at `indices` replaced by linear
    /// digits; `extension` is the resulting growth in degree.
    Replaced {
        base: BigInt,
        indices: Vec<usize>,
        extension: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub poly: Polynomial,
    pub prime: BigInt,
    /// `b` with `poly(b) = p` and `b >= mb(poly)`. Absent for the constant and for `Φ_p`,
    /// whose only such value sits at `b = 1 < mb(Φ_p) = 2`.
    pub witness_base: Option<BigInt>,
    pub derivation: Derivation,
}

impl FamilyMember {
    fn emit(poly: Polynomial, prime: &BigInt, witness_base: Option<BigInt>, derivation: Derivation) -> Self {
        let m = FamilyMember {
            poly,
            prime: prime.clone(),
            witness_base,
            derivation,
        };
        assert!(m.value_law_holds(), "family member {} breaks the value law", m.poly);
        m
    }

    /// `poly(b) = p` and `b >= mb(poly)` for the witness, or `poly` is the constant `p`
    /// or `Φ_p` when there is none.
    pub fn value_law_holds(&self) -> bool {
        match &self.witness_base {
            Some(b) => {
                self.poly.evaluate(b) == self.prime && min_base(&self.poly).is_ok_and(|mb| b >= &mb)
            }
            None => self.poly == Polynomial::constant(self.prime.clone()) || Some(&self.poly) == phi_p(&self.prime).ok().as_ref(),
        }
    }
}

/// Result of a variant scan: accepted members and the replacements that failed the test.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VariantScan {
    pub accepted: Vec<FamilyMember>,
    pub rejected: Vec<Polynomial>,
}

fn require_prime(p: &BigInt) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

/// `x^(p-1) + ... + x + 1`.
pub fn phi_p(p: &BigInt) -> Result<Polynomial> {
    require_prime(p)?;
    let n = p.to_u64().ok_or_else(|| Error::precondition("prime too large for Φ_p"))?;
    representative_with(p, &BigInt::one(), ConvertOptions { unary_cap: n })
}

/// The representatives of `p` in bases `1..=b_max`, in order of base.
///
/// Irreducibility is certified by the seed for `b = 1` and by the generalized Cohn test
/// for `2 <= b <= p`. From `b = p + 1` on the representative is the constant `p`.
pub fn representatives(p: &BigInt, b_max: &BigInt) -> Result<Vec<FamilyMember>> {
    require_prime(p)?;
    if b_max < &BigInt::one() {
        return Err(Error::precondition("b_max must be at least 1"));
    }
    let mut out = Vec::new();
    let mut b = BigInt::one();
    while &b <= b_max {
        let member = if b.is_one() {
            FamilyMember::emit(phi_p(p)?, p, None, Derivation::Seed)
        } else {
            let poly = representative(p, &b)?;
            let witness = if poly.is_constant() {
                None
            } else {
                let value = gcic_test(&poly, &b)?;
                assert_eq!(value.as_ref(), Some(p), "representative of a prime certifies itself");
                Some(b.clone())
            };
            FamilyMember::emit(poly, p, witness, Derivation::Representative { base: b.clone() })
        };
        out.push(member);
        b += 1;
    }
    Ok(out)
}

/// Replaces the coefficients at `indices` of `f` by `x - (b - a_i)`.
fn replace(f: &Polynomial, b: &BigInt, indices: &[usize]) -> Polynomial {
    let mut coeffs: Vec<BigInt> = f.coeffs().to_vec();
    let top = indices.iter().max().map_or(0, |i| i + 1);
    if coeffs.len() <= top {
        coeffs.resize(top + 1, BigInt::zero());
    }
    for &i in indices {
        let a = f.coeff(i);
        let offset = b - &a;
        assert_eq!(b - &offset, a, "linear digit evaluates back to the coefficient");
        // a_i x^i becomes (x - offset) x^i
        coeffs[i] -= &a + &offset;
        coeffs[i + 1] += 1;
    }
    Polynomial::new(coeffs)
}

/// Every nonempty replacement of positions `0..max_degree` in the base-`b` representative
/// of `p`. Coefficients beyond its degree count as zeros, so results have degree at most
/// `max_degree`. A result is accepted when it is PPI and `b >= mb`.
///
/// Output follows the replaced set read as a bitmask, ascending.
pub fn variants(p: &BigInt, b: &BigInt, max_degree: usize) -> Result<VariantScan> {
    require_prime(p)?;
    if b < &BigInt::one() {
        return Err(Error::precondition("base must be at least 1"));
    }
    let f = representative(p, b)?;
    let deg = f.degree().expect("p is nonzero");
    if max_degree < deg {
        return Err(Error::precondition(format!(
            "max_degree {max_degree} is below the representative degree {deg}"
        )));
    }
    if max_degree > MAX_VARIANT_POSITIONS {
        return Err(Error::precondition(format!(
            "at most {MAX_VARIANT_POSITIONS} replaceable positions"
        )));
    }
    let outcomes: Vec<(Polynomial, Option<FamilyMember>)> = (1u32..(1u32 << max_degree))
        .into_par_iter()
        .map(|mask| {
            let indices: Vec<usize> = (0..max_degree).filter(|i| mask >> i & 1 == 1).collect();
            let g = replace(&f, b, &indices);
            debug_assert_eq!(&g.evaluate(b), p);
            let fits = min_base(&g).is_ok_and(|mb| b >= &mb);
            let member = (fits && g.is_ppi()).then(|| {
                let extension = g.degree().expect("non-constant") - deg;
                FamilyMember::emit(
                    g.clone(),
                    p,
                    Some(b.clone()),
                    Derivation::Replaced {
                        base: b.clone(),
                        indices,
                        extension,
                    },
                )
            });
            (g, member)
        })
        .collect();
    let mut scan = VariantScan::default();
    for (g, member) in outcomes {
        match member {
            Some(m) => scan.accepted.push(m),
            None => scan.rejected.push(g),
        }
    }
    Ok(scan)
}

/// Positive integer roots of `h`, which must be nonzero.
fn positive_roots(h: &Polynomial) -> Result<Vec<BigInt>> {
    let low = h.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero");
    let c = h.coeff(low);
    let mut roots: Vec<BigInt> = divisors(&factor_integer(&c.abs())?)
        .into_iter()
        .filter(|b| h.evaluate(b).is_zero())
        .collect();
    roots.sort();
    // Cauchy's bound caps every root; scan below it when small enough.
    let lead = h.leading().expect("nonzero").abs();
    let max_ratio = h.coeffs().iter().map(|a| a.abs()).max().expect("nonzero") / &lead;
    if let Some(bound) = (max_ratio + 1u32).to_u64().filter(|&n| n <= SCAN_LIMIT) {
        let scanned: Vec<BigInt> = (1..=bound)
            .map(BigInt::from)
            .filter(|b| h.evaluate(b).is_zero())
            .collect();
        assert_eq!(roots, scanned, "divisor route and scan disagree on the roots");
    }
    Ok(roots)
}

/// Membership in the family of `p`, with the smallest qualifying witness base.
pub fn is_member(g: &Polynomial, p: &BigInt) -> Result<Option<FamilyMember>> {
    require_prime(p)?;
    if g.is_constant() {
        let hit = g == &Polynomial::constant(p.clone());
        return Ok(hit.then(|| FamilyMember::emit(g.clone(), p, None, Derivation::Constant)));
    }
    if g == &phi_p(p)? {
        return Ok(Some(FamilyMember::emit(g.clone(), p, None, Derivation::Seed)));
    }
    if !g.is_positive() {
        return Ok(None);
    }
    let mb = min_base(g)?;
    let h = g - &Polynomial::constant(p.clone());
    let Some(b) = positive_roots(&h)?.into_iter().find(|b| b >= &mb) else {
        return Ok(None);
    };
    if !g.is_ppi() {
        return Ok(None);
    }
    let base_poly = representative(p, &b)?;
    let digits = to_base_x(g)?.digits_le();
    let indices: Vec<usize> = digits
        .iter()
        .enumerate()
        .filter(|(_, d)| matches!(d, BaseXDigit::Linear(_)))
        .map(|(i, _)| i)
        .collect();
    let derivation = if indices.is_empty() {
        Derivation::Representative { base: b.clone() }
    } else {
        let extension = g.degree().unwrap_or(0).saturating_sub(base_poly.degree().unwrap_or(0));
        Derivation::Replaced {
            base: b.clone(),
            indices,
            extension,
        }
    };
    Ok(Some(FamilyMember::emit(g.clone(), p, Some(b), derivation)))
}
