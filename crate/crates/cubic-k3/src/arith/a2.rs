//! Which even numbers are norms of `A2` vectors.
//!
//! In the root basis the norm is `(a*l1 + b*l2)^2 = 2(a^2 - ab + b^2)`.
//! The classical criterion: `2n` is a norm iff every prime `p = 2 (mod 3)`
//! appears in `n` with even exponent. The brute-force enumeration below is
//! the independent oracle for that criterion and also produces witnesses.

use super::{factorize_u64, gcd_u64, isqrt_u64};
use crate::{Error, Result};

/// Vector `a*l1 + b*l2` in the root basis of `A2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct A2Vector {
    pub a: i64,
    pub b: i64,
}

impl A2Vector {
    pub fn norm(&self) -> i64 {
        2 * (self.a * self.a - self.a * self.b + self.b * self.b)
    }

    pub fn is_primitive(&self) -> bool {
        gcd_u64(self.a.unsigned_abs(), self.b.unsigned_abs()) == 1
    }
}

/// All `A2` vectors of the given even norm, sorted.
///
/// The positive definite half-Gram has smallest eigenvalue 1/2, so
/// `a^2 - ab + b^2 >= max(a,b)^2 / 2` and the box `|a|, |b| <=
/// isqrt(two_n) + 1` is exhaustive. No floating point is involved in the
/// bound.
pub fn a2_vectors_of_norm(two_n: i64) -> Result<Vec<A2Vector>> {
    if two_n < 0 || two_n % 2 != 0 {
        return Err(Error::OddInput(two_n));
    }
    if two_n == 0 {
        return Ok(vec![A2Vector { a: 0, b: 0 }]);
    }
    let bound = isqrt_u64(two_n as u64) as i64 + 1;
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let v = A2Vector { a, b };
            if v.norm() == two_n {
                out.push(v);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Same output as [`a2_vectors_of_norm`] in O(sqrt) time: for each `a`,
/// `b` solves `b^2 - ab + (a^2 - two_n/2) = 0`, so `b = (a +- s)/2` with
/// `s^2 = 2*two_n - 3a^2`. The box enumeration stays as the independent
/// oracle for this routine.
pub fn a2_vectors_of_norm_fast(two_n: i64) -> Result<Vec<A2Vector>> {
    if two_n < 0 || two_n % 2 != 0 {
        return Err(Error::OddInput(two_n));
    }
    if two_n == 0 {
        return Ok(vec![A2Vector { a: 0, b: 0 }]);
    }
    let mut out = Vec::new();
    let bound = isqrt_u64((2 * two_n / 3) as u64) as i64 + 1;
    for a in -bound..=bound {
        let disc = 2 * two_n - 3 * a * a;
        if disc < 0 {
            continue;
        }
        let s = isqrt_u64(disc as u64) as i64;
        if s * s != disc {
            continue;
        }
        for sign in [s, -s] {
            if (a + sign) % 2 == 0 {
                let v = A2Vector {
                    a,
                    b: (a + sign) / 2,
                };
                debug_assert_eq!(v.norm(), two_n);
                out.push(v);
            }
            if s == 0 {
                break;
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Does some `w` in `A2` have `(w)^2 = two_n`? Decided by the prime
/// criterion on `n = two_n / 2`.
pub fn a2_represents(two_n: i64) -> Result<bool> {
    if two_n < 0 || two_n % 2 != 0 {
        return Err(Error::OddInput(two_n));
    }
    if two_n == 0 {
        return Ok(true);
    }
    let n = (two_n / 2) as u64;
    let fac = factorize_u64(n);
    Ok(fac.factors().iter().all(|&(p, e)| p % 3 != 2 || e % 2 == 0))
}

/// Does some primitive `w` in `A2` have `(w)^2 = two_n`? Decided by the
/// enumeration oracle with an early exit.
pub fn a2_represents_primitive(two_n: i64) -> Result<bool> {
    if two_n < 0 || two_n % 2 != 0 {
        return Err(Error::OddInput(two_n));
    }
    if two_n == 0 {
        return Ok(false);
    }
    let bound = isqrt_u64(two_n as u64) as i64 + 1;
    for a in -bound..=bound {
        for b in -bound..=bound {
            let v = A2Vector { a, b };
            if v.norm() == two_n && v.is_primitive() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_roots() {
        let roots = a2_vectors_of_norm(2).unwrap();
        assert_eq!(roots.len(), 6);
        assert!(roots.contains(&A2Vector { a: 1, b: 0 }));
        assert!(roots.contains(&A2Vector { a: 0, b: 1 }));
        assert!(roots.contains(&A2Vector { a: 1, b: 1 }));
        assert!(roots.contains(&A2Vector { a: -1, b: -1 }));
    }

    #[test]
    fn norm_fourteen_vectors() {
        let vs = a2_vectors_of_norm(14).unwrap();
        assert_eq!(vs.len(), 12);
        assert!(vs.contains(&A2Vector { a: 3, b: 1 }));
        assert!(vs.iter().all(|v| v.norm() == 14));
    }

    #[test]
    fn norm_four_empty() {
        assert!(a2_vectors_of_norm(4).unwrap().is_empty());
        assert!(!a2_represents(4).unwrap());
    }

    #[test]
    fn represents_examples() {
        assert!(a2_represents(8).unwrap()); // w = 2*l1
        assert!(a2_represents(0).unwrap());
        assert!(a2_represents(6).unwrap()); // w = l1 - l2
        assert!(a2_represents(2).unwrap());
        assert!(!a2_represents(10).unwrap()); // n = 5 = 2 (mod 3)
    }

    #[test]
    fn primitive_examples() {
        assert!(a2_represents_primitive(14).unwrap()); // (3,1)
        assert!(!a2_represents_primitive(8).unwrap()); // only (2,0)-type
        assert!(a2_represents_primitive(2).unwrap()); // roots
    }

    #[test]
    fn odd_input_rejected() {
        assert!(a2_vectors_of_norm(3).is_err());
        assert!(a2_represents(7).is_err());
        assert!(a2_represents_primitive(-2).is_err());
    }

    #[test]
    fn oracle_agreement_small() {
        for two_n in (0..=600).step_by(2) {
            let listed = !a2_vectors_of_norm(two_n).unwrap().is_empty();
            assert_eq!(listed, a2_represents(two_n).unwrap(), "two_n = {two_n}");
        }
    }

    #[test]
    fn fast_enumeration_matches_box() {
        for two_n in (0..=1200).step_by(2) {
            assert_eq!(
                a2_vectors_of_norm_fast(two_n).unwrap(),
                a2_vectors_of_norm(two_n).unwrap(),
                "two_n = {two_n}"
            );
        }
    }
}
