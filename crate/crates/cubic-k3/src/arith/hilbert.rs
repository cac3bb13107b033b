//! Local Hilbert symbols over the rationals.

use super::is_prime_u64;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A place of Q: the real place or a finite prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Real,
    Prime(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime_u64(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::InvalidPlace)
        }
    }
}

/// Legendre symbol `(a/p)` for an odd prime, via Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: u64) -> i8 {
    debug_assert!(p > 2 && is_prime_u64(p));
    let bp = BigInt::from(p);
    let r = a.mod_floor(&bp);
    if r.is_zero() {
        return 0;
    }
    let e = (&bp - 1) / 2;
    let pow = r.modpow(&e, &bp);
    if pow.is_one() {
        1
    } else {
        -1
    }
}

/// The Hilbert symbol `(a, b)_v` for nonzero rationals.
///
/// At the real place it is -1 exactly when both arguments are negative.
/// At an odd prime `p`, with `a = p^alpha u`, `b = p^beta w` and `u`, `w`
/// units, `(a,b)_p = (-1)^{alpha beta (p-1)/2} (u/p)^beta (w/p)^alpha`.
/// At `p = 2` the unit-class invariants `eps(u) = (u-1)/2` and
/// `omega(u) = (u^2-1)/8` give `(a,b)_2 =
/// (-1)^{eps(u) eps(w) + alpha omega(w) + beta omega(u)}`.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, place: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidInput(
            "hilbert symbol needs nonzero arguments".into(),
        ));
    }
    match place {
        Place::Real => Ok(if a.is_negative() && b.is_negative() {
            -1
        } else {
            1
        }),
        Place::Prime(2) => {
            let (alpha, u) = unit_part_mod(a, 2, 8);
            let (beta, w) = unit_part_mod(b, 2, 8);
            let eps = |x: u64| u32::from(x % 4 == 3);
            let omega = |x: u64| u32::from(x % 8 == 3 || x % 8 == 5);
            let (alpha, beta) = (alpha.rem_euclid(2) as u32, beta.rem_euclid(2) as u32);
            let exp = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
            Ok(if exp % 2 == 0 { 1 } else { -1 })
        }
        Place::Prime(p) => {
            if !is_prime_u64(p) {
                return Err(Error::InvalidPlace);
            }
            let (alpha, u) = unit_part_mod(a, p, p);
            let (beta, w) = unit_part_mod(b, p, p);
            let (alpha, beta) = (alpha.rem_euclid(2), beta.rem_euclid(2));
            let mut sign = 1i8;
            if alpha == 1 && beta == 1 && (p - 1) / 2 % 2 == 1 {
                sign = -sign;
            }
            if beta == 1 {
                sign *= legendre_symbol(&BigInt::from(u), p);
            }
            if alpha == 1 {
                sign *= legendre_symbol(&BigInt::from(w), p);
            }
            Ok(sign)
        }
    }
}

/// Convenience wrapper for integer arguments.
pub fn hilbert_symbol_i64(a: i64, b: i64, place: Place) -> Result<i8> {
    hilbert_symbol(
        &BigRational::from_integer(BigInt::from(a)),
        &BigRational::from_integer(BigInt::from(b)),
        place,
    )
}

/// Write `x = p^v * u` and return `(v, u mod m)` where `m` is `p` for odd
/// primes and 8 for `p = 2` (odd residues are self-inverse mod 8).
fn unit_part_mod(x: &BigRational, p: u64, m: u64) -> (i64, u64) {
    let bp = BigInt::from(p);
    let bm = BigInt::from(m);
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    let mut v = 0i64;
    while (&num % &bp).is_zero() {
        num /= &bp;
        v += 1;
    }
    while (&den % &bp).is_zero() {
        den /= &bp;
        v -= 1;
    }
    let num_m = num.mod_floor(&bm);
    let den_m = den.mod_floor(&bm);
    let den_inv = mod_inverse(&den_m, &bm);
    let u = (num_m * den_inv).mod_floor(&bm);
    (v, u64::try_from(u).expect("residue fits"))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "unit part must be coprime to the modulus");
    e.x.mod_floor(m)
}
