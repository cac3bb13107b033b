//! Exact inertia signature of a symmetric integer matrix.

use super::{IntMatrix, RatMatrix};
use crate::{Error, Result};
use num_traits::{Signed, Zero};

/// Inertia indices of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.zero == 0 {
            write!(f, "({},{})", self.positive, self.negative)
        } else {
            write!(f, "({},{},{})", self.positive, self.negative, self.zero)
        }
    }
}

/// Signature by symmetric Gaussian elimination over the rationals.
///
/// Sylvester's law of inertia makes the pivot signs a congruence
/// invariant. Singular input is allowed and reported through the `zero`
/// count; non-symmetric input is rejected.
pub fn pivot_signature(g: &IntMatrix) -> Result<Signature> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut m = g.to_rational();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };

    for step in 0..n {
        // Prefer a nonzero diagonal pivot.
        let diag = (step..n).find(|&i| !m[(i, i)].is_zero());
        let pivot = match diag {
            Some(i) => {
                sym_swap(&mut m, step, i);
                true
            }
            None => {
                // All diagonal entries vanish; a nonzero off-diagonal pair
                // (i,j) yields a nonzero diagonal after row_i += row_j,
                // col_i += col_j (the new (i,i) entry is 2*m[i][j]).
                let mut found = None;
                'out: for i in step..n {
                    for j in i + 1..n {
                        if !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'out;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        sym_add(&mut m, i, j);
                        sym_swap(&mut m, step, i);
                        true
                    }
                    None => false,
                }
            }
        };
        if !pivot {
            sig.zero = n - step;
            break;
        }
        let p = m[(step, step)].clone();
        if p.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        for i in step + 1..n {
            if m[(i, step)].is_zero() {
                continue;
            }
            let f = &m[(i, step)] / &p;
            for j in step..n {
                let t = &m[(i, j)] - &f * &m[(step, j)];
                m[(i, j)] = t;
            }
            for j in step..n {
                let t = &m[(j, i)] - &f * &m[(j, step)];
                m[(j, i)] = t;
            }
        }
    }
    debug_assert_eq!(sig.positive + sig.negative + sig.zero, n);
    Ok(sig)
}

fn sym_swap(m: &mut RatMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    let n = m.rows();
    for j in 0..n {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
    }
    for i in 0..n {
        let t = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = t;
    }
}

fn sym_add(m: &mut RatMatrix, a: usize, b: usize) {
    let n = m.rows();
    for j in 0..n {
        let t = &m[(a, j)] + &m[(b, j)];
        m[(a, j)] = t;
    }
    for i in 0..n {
        let t = &m[(i, a)] + &m[(i, b)];
        m[(i, a)] = t;
    }
}
