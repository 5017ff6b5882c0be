//! Base-x positional numerals for integer polynomials.
//!
//! A positive polynomial in `Z[x]` is written with constant digits `(a)` and linear
//! digits `(x-a)`, so that substituting any integer `b >= mb(f)` for `x` gives the
//! ordinary base-`b` digits of `f(b)`. On top of the numerals the crate provides the
//! induced total order, digit-level arithmetic, conversions between numeric bases by
//! substitution, factorization from two integer values, and the family of irreducible
//! polynomials attached to a prime.
//!
//! ```
//! use basex_core::{to_base_x, Polynomial};
//!
//! let f: Polynomial = "2x^4-5x^3+7x-1".parse().unwrap();
//! assert_eq!(to_base_x(&f).unwrap().to_string(), "[(1)(x-5)(0)(6)(x-1)]_x");
//! ```

pub mod baseconv;
pub mod digital;
pub mod division;
pub mod error;
pub mod factor;
pub mod family;
pub mod numeral;
pub mod poly;

pub use baseconv::{ascent, descent, representative, ConvertOptions, Representative};
pub use digital::{digital_add, digital_divmod, digital_mul, digital_mul_digit, digital_sub};
pub use division::monic_divmod;
pub use error::{Error, Result};
pub use factor::{
    cohn_general_test, factor_integer, factorize, factorize_with, find_factor, gcic_test, is_irreducible,
    kronecker_oracle, mfb_bound, CertificateLevel, CohnWitness, Factor, FactorizationResult, FoundFactor,
};
pub use family::{is_member, phi_p, representatives, variants, Derivation, FamilyMember, VariantScan};
pub use numeral::{compare, min_base, to_base_x, BaseXDigit, BaseXNumeral};
pub use poly::{PolyMeta, Polynomial};
