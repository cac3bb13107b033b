//! Lattices, sublattices, saturation and orthogonal complements.
//!
//! A lattice is a free abelian group of finite rank with an integral
//! symmetric bilinear form, stored as its Gram matrix. A sublattice is a
//! list of ambient-coordinate integer vectors spanning a subgroup of a
//! named ambient lattice.

mod catalog;
mod compare;
mod disc_form;
mod overlattice;
mod wire;

pub use catalog::*;
pub use compare::{invariants_compare, InvariantsComparison};
pub use disc_form::{
    disc_group, disc_group_form, finite_form_isomorphic, finite_form_isomorphic_bounded, DiscGroup,
    FiniteQuadraticForm, FORM_ISO_ORDER_BOUND,
};
pub use overlattice::{enumerate_even_overlattices, Overlattice};

use crate::linalg::{hnf, int_kernel, pivot_signature, solve_left_rational, IntMatrix, Signature};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Integral lattice given by a symmetric Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
    label: String,
}

impl Lattice {
    pub fn new(label: impl Into<String>, gram: IntMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Lattice {
            gram,
            label: label.into(),
        })
    }

    pub fn from_rows_i64(label: impl Into<String>, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(label, IntMatrix::from_rows_i64(rows))
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// All self-pairings even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % BigInt::from(2)).is_zero())
    }

    /// Signed Gram determinant.
    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    /// The positive discriminant `|det|`; the signed determinant is
    /// exposed separately through [`Lattice::det`] since Gram determinants
    /// alternate sign with the rank of the negative part.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(d.abs())
    }

    pub fn signature(&self) -> Result<Signature> {
        pivot_signature(&self.gram)
    }

    /// Pairing of two coordinate vectors.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.rank());
        assert_eq!(y.len(), self.rank());
        let mut acc = BigInt::zero();
        for i in 0..self.rank() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                acc += &x[i] * &self.gram[(i, j)] * &y[j];
            }
        }
        acc
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.pair(x, x)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        Lattice {
            gram: self.gram.block_diag(&other.gram),
            label: format!("{} (+) {}", self.label, other.label),
        }
    }

    /// Multiply the form by a nonzero integer.
    pub fn rescale(&self, n: i64) -> Result<Lattice> {
        if n == 0 {
            return Err(Error::ZeroScale);
        }
        Ok(Lattice {
            gram: self.gram.scale(&BigInt::from(n)),
            label: format!("{}({})", self.label, n),
        })
    }

    /// The full lattice as a sublattice of itself.
    pub fn as_sublattice(&self) -> Sublattice {
        Sublattice {
            ambient: self.clone(),
            basis: IntMatrix::identity(self.rank()),
        }
    }

    /// Sublattice spanned by the given ambient-coordinate rows.
    pub fn span(&self, rows: &[Vec<i64>]) -> Result<Sublattice> {
        Sublattice::new(self.clone(), IntMatrix::from_rows_i64(rows))
    }
}

/// Sublattice of an ambient lattice, given by independent basis rows in
/// ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sublattice {
    ambient: Lattice,
    basis: IntMatrix,
}

impl Sublattice {
    pub fn new(ambient: Lattice, basis: IntMatrix) -> Result<Self> {
        if basis.cols() != ambient.rank() {
            return Err(Error::DimensionMismatch(format!(
                "basis has {} columns, ambient rank is {}",
                basis.cols(),
                ambient.rank()
            )));
        }
        let (h, _) = hnf(&basis);
        let rank = (0..h.rows())
            .filter(|&i| h.row(i).iter().any(|e| !e.is_zero()))
            .count();
        if rank != basis.rows() {
            return Err(Error::InvalidInput(
                "basis rows are linearly dependent".into(),
            ));
        }
        Ok(Sublattice { ambient, basis })
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Gram matrix of the form restricted to the basis rows.
    pub fn induced_gram(&self) -> IntMatrix {
        self.basis
            .mul(self.ambient.gram())
            .mul(&self.basis.transpose())
    }

    /// The restricted form as a lattice in its own right. The induced
    /// Gram may be degenerate (isotropic lines are legitimate here).
    pub fn as_lattice(&self, label: impl Into<String>) -> Lattice {
        Lattice {
            gram: self.induced_gram(),
            label: label.into(),
        }
    }

    /// Saturated sublattice of all ambient vectors orthogonal to this one.
    pub fn orthogonal_complement(&self) -> Result<Sublattice> {
        if self.ambient.det().is_zero() {
            return Err(Error::Degenerate);
        }
        // x is orthogonal to every basis row b iff x * (G * B^T) = 0.
        let pairing = self.ambient.gram().mul(&self.basis.transpose());
        let kernel = int_kernel(&pairing);
        Ok(Sublattice {
            ambient: self.ambient.clone(),
            basis: kernel,
        })
    }

    /// Saturation: the intersection of the rational span with the ambient
    /// lattice. Contains `self` with finite index and is idempotent.
    pub fn saturate(&self) -> Sublattice {
        // The rational row span is cut out by the (plain, unpaired) integer
        // kernel of B^T, and taking the kernel twice lands on the saturated
        // lattice with a canonical Hermite basis.
        let right_kernel = int_kernel(&self.basis.transpose());
        let sat = int_kernel(&right_kernel.transpose());
        Sublattice {
            ambient: self.ambient.clone(),
            basis: sat,
        }
    }

    /// Index of `self` inside its saturation.
    pub fn saturation_index(&self) -> BigInt {
        let sat = self.saturate();
        let idx = index_in(&sat.basis, &self.basis);
        // Cross-check disc(sub) = disc(sat) * index^2 when nondegenerate.
        let disc_sub = self.induced_gram().det().abs();
        if !disc_sub.is_zero() {
            let disc_sat = sat.induced_gram().det().abs();
            assert_eq!(
                disc_sub,
                &disc_sat * (&idx * &idx),
                "saturation index cross-check"
            );
        }
        idx
    }

    /// Membership test for a rational ambient vector.
    pub fn contains_rational(&self, x: &[BigRational]) -> bool {
        match solve_left_rational(&self.basis, x) {
            Some(coeffs) => coeffs.iter().all(|c| c.is_integer()),
            None => false,
        }
    }
}

/// Index of the row lattice of `sub` inside the row lattice of `sup`,
/// assuming equal rank and containment.
fn index_in(sup: &IntMatrix, sub: &IntMatrix) -> BigInt {
    assert_eq!(sup.rows(), sub.rows(), "ranks must agree");
    let r = sup.rows();
    if r == 0 {
        return BigInt::from(1);
    }
    let mut coeff = IntMatrix::zero(r, r);
    for i in 0..r {
        let rhs = rational_row(sub.row(i));
        let x = solve_left_rational(sup, &rhs).expect("sublattice not contained in its saturation");
        for (j, c) in x.iter().enumerate() {
            assert!(c.is_integer(), "non-integral coordinate in HNF quotient");
            coeff[(i, j)] = c.to_integer();
        }
    }
    coeff.det().abs()
}

pub(crate) fn rational_row(v: &[BigInt]) -> Vec<BigRational> {
    v.iter()
        .map(|e| BigRational::from_integer(e.clone()))
        .collect()
}
