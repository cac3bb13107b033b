//! Exact integer and rational linear algebra.
//!
//! All matrices store arbitrary-precision entries; nothing here can
//! silently overflow. Ranks in this crate stay below ~30, so the simple
//! cubic algorithms are the right tool: no modular tricks, no floating
//! point.

mod hnf;
mod kernel;
mod signature;
mod snf;

pub use hnf::hnf;
pub use kernel::{int_kernel, solve_left_rational};
pub use signature::{pivot_signature, Signature};
pub use snf::snf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from machine integers, row by row.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        IntMatrix::new(self.rows + other.rows, self.cols, entries)
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn scale(&self, n: &BigInt) -> IntMatrix {
        let entries = self.entries.iter().map(|e| e * n).collect();
        IntMatrix::new(self.rows, self.cols, entries)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(idx(k, j), idx(r, j));
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[idx(i, j)] * &m[idx(k, k)] - &m[idx(i, k)] * &m[idx(k, j)];
                    m[idx(i, j)] = &t / &prev;
                }
            }
            prev = m[idx(k, k)].clone();
        }
        let d = m[idx(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Row `i` as owned vector.
    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    /// Keep only the rows for which `keep` returns true.
    pub fn filter_rows<F: Fn(&[BigInt]) -> bool>(&self, keep: F) -> IntMatrix {
        let mut rows = Vec::new();
        for i in 0..self.rows {
            if keep(self.row(i)) {
                rows.push(self.row(i).to_vec());
            }
        }
        let r = rows.len();
        IntMatrix::new(r, self.cols, rows.into_iter().flatten().collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        let entries = self
            .entries
            .iter()
            .map(|e| BigRational::from_integer(e.clone()))
            .collect();
        RatMatrix::new(self.rows, self.cols, entries)
    }

    pub fn entries_i64(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(i64::try_from)
            .map(Result::ok)
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of exact rationals; `num_rational` keeps every
/// entry in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RatMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Convert to an integer matrix; panics if any entry is non-integral.
    pub fn to_integer(&self) -> IntMatrix {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                assert!(e.is_integer(), "non-integral entry {e}");
                e.to_integer()
            })
            .collect();
        IntMatrix::new(self.rows, self.cols, entries)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.entries[i * self.cols + j]
    }
}

/// Dot product of two integer vectors.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
