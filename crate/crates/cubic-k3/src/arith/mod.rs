//! Prime factorization, the `A2` representation criterion, Hilbert
//! symbols and ternary isotropy.

mod a2;
mod hilbert;
mod ternary;

pub use a2::{
    a2_represents, a2_represents_primitive, a2_vectors_of_norm, a2_vectors_of_norm_fast, A2Vector,
};
pub use hilbert::{hilbert_symbol, hilbert_symbol_i64, legendre_symbol, Place};
pub use ternary::{prime_x2_3y2, ternary_isotropic};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Bound for trial division on inputs beyond the u64 range.
const BIG_TRIAL_BOUND: u64 = 1_000_000;

/// Factorization into prime powers, sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &(p, e) in &self.factors {
            acc *= BigInt::from(p).pow(e);
        }
        acc
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// Exact factorization of a positive integer.
///
/// Inside the u64 range: trial division, deterministic Miller-Rabin and
/// Brent-Pollard rho. Beyond it: trial division up to a fixed bound, then
/// an error for any remaining cofactor too large to certify.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    if !n.is_positive() {
        return Err(Error::InvalidInput(format!(
            "factorize needs n >= 1, got {n}"
        )));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_u64(small));
    }
    let mut rest = n.clone();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= BIG_TRIAL_BOUND {
        let bp = BigInt::from(p);
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        if let Some(r) = rest.to_u64() {
            for (q, f) in factorize_u64(r).factors {
                merge(&mut factors, q, f);
            }
            factors.sort_unstable();
            return Ok(Factorization { factors });
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    Err(Error::FactorBound(rest.to_string()))
}

pub fn factorize_u64(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    let mut p = 7u64;
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut w = 0;
    while p.saturating_mul(p) <= rest && p < 100_000 {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += wheel[w];
        w = (w + 1) % wheel.len();
    }
    if rest > 1 {
        split(rest, &mut factors);
    }
    factors.sort_unstable();
    // merge equal primes produced by rho splits
    let mut merged: Vec<(u64, u32)> = Vec::new();
    for (q, e) in factors {
        match merged.last_mut() {
            Some((lp, le)) if *lp == q => *le += e,
            _ => merged.push((q, e)),
        }
    }
    Factorization { factors: merged }
}

fn merge(factors: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    if let Some(slot) = factors.iter_mut().find(|(q, _)| *q == p) {
        slot.1 += e;
    } else {
        factors.push((p, e));
    }
}

fn split(n: u64, out: &mut Vec<(u64, u32)>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push((n, 1));
        return;
    }
    let d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

/// Deterministic Miller-Rabin; the base set certifies all n < 3.3e24.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
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

/// Brent's cycle variant of Pollard rho with a deterministic parameter
/// sweep; only reached for composite n with no factor below 1e5.
fn pollard_rho(n: u64) -> u64 {
    assert!(n > 1 && !is_prime_u64(n));
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("rho parameter sweep exhausted for n = {n}");
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Integer square root by Newton iteration from an upper bound; no
/// floating point, exact for the full u64 range.
pub fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let bits = 64 - n.leading_zeros();
    let mut x = 1u64 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    debug_assert!(u128::from(x) * u128::from(x) <= u128::from(n));
    debug_assert!((u128::from(x) + 1) * (u128::from(x) + 1) > u128::from(n));
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(pairs: &[(u64, u32)]) -> Vec<(u64, u32)> {
        pairs.to_vec()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(factorize_u64(12).factors(), f(&[(2, 2), (3, 1)]));
        assert_eq!(factorize_u64(21).factors(), f(&[(3, 1), (7, 1)]));
        assert_eq!(factorize_u64(1).factors(), f(&[]));
        assert_eq!(factorize_u64(97).factors(), f(&[(97, 1)]));
    }

    #[test]
    fn big_path_matches() {
        let n = BigInt::from(2u64).pow(80) * BigInt::from(3u64).pow(5);
        let fac = factorize(&n).unwrap();
        assert_eq!(fac.factors(), f(&[(2, 80), (3, 5)]));
        assert_eq!(fac.product(), n);
    }

    #[test]
    fn semiprime_beyond_trial() {
        // 1000003 * 1000033, both prime, each above the small-trial window
        let n = 1_000_003u64 * 1_000_033;
        let fac = factorize_u64(n);
        assert_eq!(fac.factors(), f(&[(1_000_003, 1), (1_000_033, 1)]));
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(factorize(&BigInt::from(0)).is_err());
        assert!(factorize(&BigInt::from(-6)).is_err());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_003));
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn isqrt_edges() {
        for n in [0u64, 1, 2, 3, 4, 8, 9, 15, 16, 24, 25, 10_000] {
            let r = isqrt_u64(n);
            assert!(r * r <= n);
            assert!((r + 1) * (r + 1) > n);
        }
    }
}
