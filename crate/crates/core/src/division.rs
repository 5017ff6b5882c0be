//! Division by a monic divisor with a remainder in the window `0 <= r < g`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Returns the unique `(q, r)` with `f = q*g + r` and `0 <= r < g` in the base-x order.
///
/// Classical long division leaves `deg r < deg g`; a negative remainder is then moved
/// into the window by taking `q - 1` and `r + g`, which makes `deg r = deg g`.
pub fn monic_divmod(f: &Polynomial, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    if !g.is_monic() {
        return Err(Error::NotMonic);
    }
    let dg = g.degree().expect("monic is nonzero");
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dg)];
    for k in (0..q.len()).rev() {
        let t = std::mem::take(&mut r[k + dg]);
        if t.is_zero() {
            continue;
        }
        for (i, gc) in g.coeffs()[..dg].iter().enumerate() {
            r[k + i] -= &t * gc;
        }
        q[k] = t;
    }
    let mut q = Polynomial::new(q);
    let mut r = Polynomial::new(r);
    if r.is_negative() {
        q = &q - &Polynomial::one();
        r = &r + g;
    }
    Ok((q, r))
}
