//! Rational isotropy of the ternary forms behind the `A2` criterion.

use super::{factorize, hilbert_symbol_i64, is_prime_u64, isqrt_u64, Place};
use crate::{Error, Result};
use num_bigint::BigInt;

/// Is `-n x1^2 + x2^2 + 3 x3^2 = 0` solvable in nonzero rationals?
///
/// By Hasse-Minkowski a ternary form is isotropic over Q iff it is
/// isotropic at every place, and `a x^2 + b y^2 + c z^2` is isotropic
/// over Q_p iff `(-ac, -bc)_p = 1`. Here that symbol is `(3n, -3)_p`; it
/// is automatically 1 at the real place and at primes away from `2, 3, n`.
pub fn ternary_isotropic(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidInput("ternary_isotropic needs n >= 1".into()));
    }
    let fac = factorize(&BigInt::from(n))?;
    let mut places: Vec<u64> = vec![2, 3];
    places.extend(fac.primes().filter(|&p| p != 2 && p != 3));
    let a = i64::try_from(3 * n).map_err(|_| Error::FactorBound(n.to_string()))?;
    for p in places {
        if hilbert_symbol_i64(a, -3, Place::Prime(p))? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Can the prime `p` be written as `x^2 + 3y^2`? Bounded search with a
/// witness; the classical answer is yes iff `p = 3` or `p = 1 (mod 3)`.
pub fn prime_x2_3y2(p: u64) -> Result<Option<(u64, u64)>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    for y in 0..=isqrt_u64(p / 3) {
        let rest = p - 3 * y * y;
        let x = isqrt_u64(rest);
        if x * x == rest {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}
