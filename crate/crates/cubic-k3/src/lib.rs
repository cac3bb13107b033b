//! Exact lattice arithmetic for special cubic fourfolds and (twisted) K3 surfaces.
//!
//! The crate builds the rank-24 extended K3 lattice with its fixed `A2`
//! embedding, the odd unimodular lattice of signature (2,21) with a square
//! `-3` polarization class, and everything the divisor theory of special
//! cubics hangs off them: the vectors `v` of discriminant `d`, the rank-3
//! lattices `Gamma_d` and rank-2 lattices `K_d`, discriminant groups with
//! their finite quadratic forms, and the arithmetic conditions on `d` that
//! decide association to (twisted) K3 surfaces.
//!
//! Everything is computed in exact arbitrary-precision arithmetic; there is
//! no floating point anywhere in the crate.
//!
//! Layout:
//! - [`linalg`]: integer/rational matrices, Hermite and Smith normal forms,
//!   saturated kernels, exact inertia signatures.
//! - [`lattice`]: lattices, sublattices, saturation, orthogonal complements,
//!   discriminant forms, even overlattice gluing.
//! - [`arith`]: factorization, the `A2` representation criterion, Hilbert
//!   symbols, ternary isotropy.
//! - [`hassett`]: the numerical conditions on `d` and the condition table.
//! - [`periods`]: the explicit constructions in the rank-24 ambient and the
//!   per-`d` divisor reports.

// indexed loops read better than iterator chains in the matrix kernels
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod hassett;
pub mod lattice;
pub mod linalg;
pub mod periods;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("lattice is degenerate (determinant zero)")]
    Degenerate,
    #[error("rescaling by zero is not allowed")]
    ZeroScale,
    #[error("expected an even integer, got {0}")]
    OddInput(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid place: expected a prime or \"real\"")]
    InvalidPlace,
    #[error("cofactor {0} exceeds the factoring bound")]
    FactorBound(String),
    #[error("finite form comparison undecided: group order {0} exceeds bound {1}")]
    FiniteFormUndecided(u64, u64),
    #[error("d = {0} does not satisfy d = 0,2 (mod 6) with d > 6")]
    InadmissibleD(i64),
    #[error("vector is not isotropic")]
    NotIsotropic,
    #[error("isotropic vector pairs to zero with every root (lies in the A2 complement)")]
    OrthogonalToA2,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
