//! The numerical conditions on the discriminant `d` and everything
//! derived from them.
//!
//! For an even integer `d > 6`:
//! - `(*)`: `d = 0, 2 (mod 6)` — the nonemptiness condition;
//! - `(**)`: `d/2` is divisible by neither 9 nor any prime `p = 2 (mod 3)`
//!   — association to a K3 surface;
//! - `(**')`: every prime `p = 2 (mod 3)` divides `d/2` with even
//!   exponent — association to a twisted K3 surface.
//!
//! The `d > 6` bound belongs to the divisor labels, not to the
//! arithmetic: cofactors `d0` in `d = k^2 d0` may legitimately be 2 or 6,
//! so every condition comes in a bounded and an arithmetic-only flavor.

use crate::arith::{factorize_u64, isqrt_u64};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Outcome flags for one value of `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionFlags {
    pub d: i64,
    pub star: bool,
    pub star2: bool,
    pub star2prime: bool,
    /// Whether the `d > 6` preamble bound was applied.
    pub with_bound: bool,
}

/// `(*)`: `d = 0, 2 (mod 6)`, with the `d > 6` bound by default.
pub fn cond_star(d: i64) -> bool {
    cond_star_bounded(d, true)
}

pub fn cond_star_bounded(d: i64, with_bound: bool) -> bool {
    if with_bound && d <= 6 {
        return false;
    }
    d > 0 && (d % 6 == 0 || d % 6 == 2)
}

/// `(**)`: `d` even, `d/2` divisible by neither 9 nor any prime
/// `p = 2 (mod 3)`.
pub fn cond_star2(d: i64) -> bool {
    cond_star2_bounded(d, true)
}

pub fn cond_star2_bounded(d: i64, with_bound: bool) -> bool {
    if with_bound && d <= 6 {
        return false;
    }
    if d <= 0 || d % 2 != 0 {
        return false;
    }
    let half = (d / 2) as u64;
    if half.is_multiple_of(9) {
        return false;
    }
    factorize_u64(half).primes().all(|p| p % 3 != 2)
}

/// `(**')`: `d` even and every prime `p = 2 (mod 3)` appears in `d/2`
/// with even exponent.
pub fn cond_star2prime(d: i64) -> bool {
    cond_star2prime_bounded(d, true)
}

pub fn cond_star2prime_bounded(d: i64, with_bound: bool) -> bool {
    if with_bound && d <= 6 {
        return false;
    }
    if d <= 0 || d % 2 != 0 {
        return false;
    }
    let half = (d / 2) as u64;
    factorize_u64(half)
        .factors()
        .iter()
        .all(|&(p, e)| p % 3 != 2 || e % 2 == 0)
}

pub fn condition_flags(d: i64, with_bound: bool) -> ConditionFlags {
    ConditionFlags {
        d,
        star: cond_star_bounded(d, with_bound),
        star2: cond_star2_bounded(d, with_bound),
        star2prime: cond_star2prime_bounded(d, with_bound),
        with_bound,
    }
}

/// All factorizations `d = k^2 * d0` with `d0` satisfying the arithmetic
/// part of `(**)`, sorted by `k`. Defined for `d` satisfying the
/// arithmetic part of `(**')`; such factorizations always exist but are
/// not unique in general.
pub fn factorizations_k2d0(d: i64) -> Result<Vec<(i64, i64)>> {
    if !cond_star2prime_bounded(d, false) {
        return Err(Error::InvalidInput(format!(
            "d = {d} does not satisfy the arithmetic (**')"
        )));
    }
    let mut out = Vec::new();
    for k in 1..=(isqrt_u64(d as u64) as i64) {
        if d % (k * k) != 0 {
            continue;
        }
        let d0 = d / (k * k);
        if cond_star2_bounded(d0, false) {
            out.push((k, d0));
        }
    }
    Ok(out)
}

/// Admissible square divisors: all `k >= 1` with `k^2 | d` and `d/k^2`
/// still satisfying the arithmetic `(**')`. These are the candidate
/// orders of the Brauer twist, constrained by `ord^2 | d`.
pub fn brauer_orders(d: i64) -> Result<Vec<i64>> {
    if !cond_star2prime_bounded(d, false) {
        return Err(Error::InvalidInput(format!(
            "d = {d} does not satisfy the arithmetic (**')"
        )));
    }
    let mut out = Vec::new();
    for k in 1..=(isqrt_u64(d as u64) as i64) {
        if d % (k * k) == 0 && cond_star2prime_bounded(d / (k * k), false) {
            out.push(k);
        }
    }
    Ok(out)
}

/// Result of the bounded search for `d a^2 = 2(n^2 + n + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HilbSearch {
    Yes { a: i64, n: i64 },
    NoWithinBound { bound: i64 },
}

/// Bounded search for integers `n`, `a` with `d a^2 = 2(n^2 + n + 1)`.
pub fn hilb_condition(d: i64, search_bound: i64) -> HilbSearch {
    assert!(d >= 2, "hilb_condition needs d >= 2");
    for n in 0..=search_bound {
        let target = 2 * (i128::from(n) * i128::from(n) + i128::from(n) + 1);
        if target % i128::from(d) != 0 {
            continue;
        }
        let q = (target / i128::from(d)) as u128;
        let a = isqrt_u128(q);
        if a * a == q {
            return HilbSearch::Yes { a: a as i64, n };
        }
    }
    HilbSearch::NoWithinBound {
        bound: search_bound,
    }
}

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    x
}

/// The three-row condition table over even `d` in a range. Columns are
/// the values satisfying `(*)`, mirroring the layout of the published
/// table of first values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionTable {
    pub from: i64,
    pub to: i64,
    pub columns: Vec<i64>,
    pub star: Vec<i64>,
    pub star2: Vec<i64>,
    pub star2prime: Vec<i64>,
}

pub fn table(from: i64, to: i64) -> ConditionTable {
    let mut columns = Vec::new();
    let mut star2 = Vec::new();
    let mut star2prime = Vec::new();
    let mut d = if from % 2 == 0 { from } else { from + 1 };
    while d <= to {
        if cond_star(d) {
            columns.push(d);
            if cond_star2(d) {
                star2.push(d);
            }
            if cond_star2prime(d) {
                star2prime.push(d);
            }
        }
        d += 2;
    }
    ConditionTable {
        from,
        to,
        star: columns.clone(),
        columns,
        star2,
        star2prime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        assert!(cond_star(8));
        assert!(!cond_star(10)); // 10 = 4 (mod 6)
        assert!(!cond_star(6)); // bound
        assert!(cond_star_bounded(6, false));
        assert!(cond_star_bounded(2, false));
        assert!(!cond_star_bounded(0, false));
        assert!(!cond_star_bounded(-6, false));
    }

    #[test]
    fn star2_examples() {
        assert!(cond_star2(14));
        assert!(!cond_star2(18)); // 9 | 9
        assert!(cond_star2(26)); // 13 = 1 (mod 3)
        assert!(!cond_star2(8)); // 4 = 2^2, 2 = 2 (mod 3)
        assert!(cond_star2_bounded(2, false));
        assert!(cond_star2_bounded(6, false));
    }

    #[test]
    fn star2prime_examples() {
        assert!(cond_star2prime(8)); // 4 = 2^2
        assert!(!cond_star2prime(48)); // 24 = 2^3 * 3
        assert!(cond_star2prime(18)); // 9 = 3^2
        assert!(!cond_star2prime(12)); // 6 = 2 * 3
    }

    #[test]
    fn k2d0_factorizations() {
        assert_eq!(factorizations_k2d0(8).unwrap(), vec![(2, 2)]);
        assert_eq!(factorizations_k2d0(98).unwrap(), vec![(1, 98), (7, 2)]);
        assert_eq!(factorizations_k2d0(14).unwrap(), vec![(1, 14)]);
        assert!(factorizations_k2d0(12).is_err());
    }

    #[test]
    fn brauer_order_lists() {
        assert_eq!(brauer_orders(8).unwrap(), vec![1, 2]);
        assert_eq!(brauer_orders(14).unwrap(), vec![1]);
        assert_eq!(brauer_orders(72).unwrap(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn hilb_search_values() {
        assert_eq!(hilb_condition(14, 100), HilbSearch::Yes { a: 1, n: 2 });
        assert_eq!(hilb_condition(2, 100), HilbSearch::Yes { a: 1, n: 0 });
        // 2(n^2+n+1) = 2 (mod 4) always, while 8 a^2 = 0 (mod 8)
        assert_eq!(
            hilb_condition(8, 10_000),
            HilbSearch::NoWithinBound { bound: 10_000 }
        );
    }

    #[test]
    fn first_values_table() {
        let t = table(8, 48);
        assert_eq!(
            t.star,
            vec![8, 12, 14, 18, 20, 24, 26, 30, 32, 36, 38, 42, 44, 48]
        );
        assert_eq!(t.star2, vec![14, 26, 38, 42]);
        assert_eq!(t.star2prime, vec![8, 14, 18, 24, 26, 32, 38, 42]);
    }

    #[test]
    fn empty_range() {
        let t = table(9, 7);
        assert!(t.columns.is_empty());
    }

    #[test]
    fn flags_invariant() {
        for d in (2..=600i64).step_by(2) {
            for with_bound in [false, true] {
                let f = condition_flags(d, with_bound);
                if f.star2 {
                    assert!(f.star2prime, "d = {d}");
                }
                if f.star2prime {
                    assert!(f.star, "d = {d}");
                }
            }
        }
    }

    #[test]
    fn implication_chain_small() {
        for d in (8..=2000i64).step_by(2) {
            if cond_star2(d) {
                assert!(cond_star2prime(d), "(**) => (**') at d = {d}");
            }
            if cond_star2prime(d) {
                assert!(cond_star(d), "(**') => (*) at d = {d}");
            }
        }
    }
}
