//! Smith normal form with transform tracking.

use super::hnf::hnf;
use super::IntMatrix;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Smith normal form by alternating row and column Hermite reduction.
///
/// Returns `(d, u, v)` with `u`, `v` unimodular, `u * m * v = d`, `d`
/// diagonal with nonnegative entries and `d[0] | d[1] | ...`. No modular
/// shortcuts: ranks in this crate are small and exactness is the point.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());

    diagonalize(&mut d, &mut u, &mut v);

    // Enforce the divisibility chain: folding column j into column i and
    // re-diagonalizing replaces (d[i], d[j]) by (gcd, lcm).
    let k = d.rows().min(d.cols());
    loop {
        let mut violation = None;
        'scan: for i in 0..k {
            for j in i + 1..k {
                let a = d[(i, i)].clone();
                let b = d[(j, j)].clone();
                if b.is_zero() || (!a.is_zero() && (&b % &a).is_zero()) {
                    continue;
                }
                violation = Some((i, j));
                break 'scan;
            }
        }
        let Some((i, j)) = violation else { break };
        for r in 0..d.rows() {
            let t = &d[(r, i)] + &d[(r, j)];
            d[(r, i)] = t;
        }
        for r in 0..v.rows() {
            let t = &v[(r, i)] + &v[(r, j)];
            v[(r, i)] = t;
        }
        diagonalize(&mut d, &mut u, &mut v);
    }

    // Positive diagonal.
    for i in 0..k {
        if d[(i, i)].is_negative() {
            for j in 0..d.cols() {
                let t = -d[(i, j)].clone();
                d[(i, j)] = t;
            }
            for j in 0..u.cols() {
                let t = -u[(i, j)].clone();
                u[(i, j)] = t;
            }
        }
    }
    debug_assert!(chain_holds(&d));
    (d, u, v)
}

/// Alternate row and column HNF until the matrix is diagonal. Each full
/// cycle makes the leading pivot divide strictly more of its row and
/// column, so the loop terminates.
fn diagonalize(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix) {
    loop {
        let (h, t) = hnf(d);
        *u = t.mul(u);
        *d = h;
        if is_diagonal(d) {
            return;
        }
        let (h, t) = hnf(&d.transpose());
        *v = v.mul(&t.transpose());
        *d = h.transpose();
        if is_diagonal(d) {
            return;
        }
    }
}

fn is_diagonal(m: &IntMatrix) -> bool {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j && !m[(i, j)].is_zero() {
                return false;
            }
        }
    }
    true
}

fn chain_holds(d: &IntMatrix) -> bool {
    let k = d.rows().min(d.cols());
    for i in 1..k {
        let a = &d[(i - 1, i - 1)];
        let b = &d[(i, i)];
        if a.is_zero() {
            if !b.is_zero() {
                return false;
            }
        } else if b.gcd(a) != a.abs() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows_i64(rows)
    }

    fn check(a: &IntMatrix) -> IntMatrix {
        let (d, u, v) = snf(a);
        assert!(u.is_unimodular());
        assert!(v.is_unimodular());
        assert_eq!(u.mul(a).mul(&v), d);
        d
    }

    #[test]
    fn a2_gram() {
        let d = check(&m(&[vec![2, -1], vec![-1, 2]]));
        assert_eq!(d, m(&[vec![1, 0], vec![0, 3]]));
    }

    #[test]
    fn twisted_plane() {
        for n in [1i64, 2, 5, 12] {
            let d = check(&m(&[vec![0, n], vec![n, 0]]));
            assert_eq!(d, m(&[vec![n, 0], vec![0, n]]));
        }
    }

    #[test]
    fn zero_matrix() {
        let d = check(&m(&[vec![0, 0], vec![0, 0]]));
        assert_eq!(d, m(&[vec![0, 0], vec![0, 0]]));
    }

    #[test]
    fn rectangular_with_chain() {
        let d = check(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]));
        // classical example: invariant factors 2, 2, 156
        assert_eq!(d, m(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 156]]));
    }

    #[test]
    fn nonsquare() {
        let d = check(&m(&[vec![1, 0], vec![1, 0], vec![0, 5]]));
        assert_eq!(d, m(&[vec![1, 0], vec![0, 5], vec![0, 0]]));
    }
}
