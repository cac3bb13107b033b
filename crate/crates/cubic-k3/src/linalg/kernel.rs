//! Saturated integer kernels and exact rational solving.

use super::hnf::hnf;
use super::{IntMatrix, RatMatrix};
use num_rational::BigRational;
use num_traits::Zero;

/// Basis of the left integer kernel `{x : x * m = 0}`.
///
/// The rows of the unimodular HNF transform that land on zero rows of the
/// Hermite form span the kernel, and because the transform is unimodular
/// the result is saturated (a direct summand, equal to its own
/// saturation). Rows are re-normalized to a canonical Hermite basis.
pub fn int_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(m);
    let mut rows = Vec::new();
    for i in 0..h.rows() {
        if h.row(i).iter().all(Zero::is_zero) {
            rows.push(u.row(i).to_vec());
        }
    }
    let k = IntMatrix::new(rows.len(), m.rows(), rows.into_iter().flatten().collect());
    let (kh, _) = hnf(&k);
    kh.filter_rows(|r| r.iter().any(|e| !e.is_zero()))
}

/// Solve `x * b = c` exactly over the rationals.
///
/// `b` is `r x n`, `c` a length-`n` vector; returns the length-`r`
/// coefficient vector when `c` lies in the rational row span of `b`.
pub fn solve_left_rational(b: &IntMatrix, c: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(b.cols(), c.len());
    let r = b.rows();
    let n = b.cols();
    // Augmented system (b^T | c^T), eliminated over Q.
    let mut aug = RatMatrix::zero(n, r + 1);
    for i in 0..n {
        for j in 0..r {
            aug[(i, j)] = BigRational::from_integer(b[(j, i)].clone());
        }
        aug[(i, r)] = c[i].clone();
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; r];
    let mut row = 0usize;
    for col in 0..r {
        let Some(p) = (row..n).find(|&i| !aug[(i, col)].is_zero()) else {
            continue;
        };
        for j in 0..=r {
            let t = aug[(row, j)].clone();
            aug[(row, j)] = aug[(p, j)].clone();
            aug[(p, j)] = t;
        }
        let inv = aug[(row, col)].recip();
        for j in col..=r {
            let t = &aug[(row, j)] * &inv;
            aug[(row, j)] = t;
        }
        for i in 0..n {
            if i != row && !aug[(i, col)].is_zero() {
                let f = aug[(i, col)].clone();
                for j in col..=r {
                    let t = &aug[(i, j)] - &f * &aug[(row, j)];
                    aug[(i, j)] = t;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    // Inconsistent if a zero row has nonzero rhs.
    for i in row..n {
        if !aug[(i, r)].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); r];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(p) = p {
            x[col] = aug[(*p, r)].clone();
        }
    }
    Some(x)
}
