//! Row-style Hermite normal form with transform tracking.

use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite normal form by integer row operations.
///
/// Returns `(h, u)` with `u` unimodular and `u * m = h`. The form is
/// row-style: pivot entries are positive, every entry above a pivot is
/// reduced into `[0, pivot)`, pivot columns strictly increase and zero
/// rows sit at the bottom. This makes `h` a canonical basis of the row
/// lattice of `m`, which the golden tests rely on.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclid on the column: repeatedly reduce by the smallest nonzero
        // entry until at most one nonzero entry remains below pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows {
                if !h[(i, col)].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) if h[(i, col)].abs() < h[(b, col)].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            swap_rows(&mut h, &mut u, pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = div_round(&h[(i, col)], &h[(pivot_row, col)]);
                row_sub(&mut h, &mut u, i, pivot_row, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            negate_row(&mut h, &mut u, pivot_row);
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&h[(pivot_row, col)]);
            if !q.is_zero() {
                row_sub(&mut h, &mut u, i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Quotient rounding to nearest, which keeps Euclid steps small.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two_rem: BigInt = (a % b) * 2;
    let q = a / b;
    if two_rem.abs() > b.abs() {
        if (two_rem.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn swap_rows(h: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..h.cols() {
        let t = h[(a, j)].clone();
        h[(a, j)] = h[(b, j)].clone();
        h[(b, j)] = t;
    }
    for j in 0..u.cols() {
        let t = u[(a, j)].clone();
        u[(a, j)] = u[(b, j)].clone();
        u[(b, j)] = t;
    }
}

fn row_sub(h: &mut IntMatrix, u: &mut IntMatrix, i: usize, pivot: usize, q: &BigInt) {
    for j in 0..h.cols() {
        let t = &h[(i, j)] - q * &h[(pivot, j)];
        h[(i, j)] = t;
    }
    for j in 0..u.cols() {
        let t = &u[(i, j)] - q * &u[(pivot, j)];
        u[(i, j)] = t;
    }
}

fn negate_row(h: &mut IntMatrix, u: &mut IntMatrix, i: usize) {
    for j in 0..h.cols() {
        let t = -h[(i, j)].clone();
        h[(i, j)] = t;
    }
    for j in 0..u.cols() {
        let t = -u[(i, j)].clone();
        u[(i, j)] = t;
    }
}
