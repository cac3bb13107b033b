//! The explicit rank-24 ambient and its fixed sublattices.
//!
//! Coordinates follow the slot order E8, E8, U1, U2, U3, U4 with the U
//! bases named e,f | e',f' | e1,f1 | e2,f2. The fixed `A2` embedding is
//! `l1 = e' + f'`, `l2 = e + f - e'`; its orthogonal complement is
//! spanned by the two E8 blocks, U3, U4 and the rank-2 complement of
//! `A2` inside U1 (+) U2 with basis `mu1 = e - e' + f'`,
//! `mu2 = -(f - e' + f')`, chosen so that the mu Gram is the standard
//! `A2(-1)`.

mod divisor;
mod isometry;

pub use divisor::{
    build_v, divisor_report, gamma_d, k3_membership, k3prime_membership, k_d_gram,
    spherical_status, DivisorReport, GammaD, SphericalReport, SphericalStatus, DEFAULT_K_BOUND,
};
pub use isometry::{o_a2_group, phi0_action, IsometryA2, OA2Report};

use crate::lattice::{a2_perp_abstract, mukai_lattice, odd_i2_21, root_a2, Lattice, Sublattice};
use crate::linalg::IntMatrix;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

// Mukai ambient slots (rank 24): E8 blocks then four hyperbolic planes.
pub const SLOT_E: usize = 16;
pub const SLOT_F: usize = 17;
pub const SLOT_EPRIME: usize = 18;
pub const SLOT_FPRIME: usize = 19;
pub const SLOT_E1: usize = 20;
pub const SLOT_F1: usize = 21;
pub const SLOT_E2: usize = 22;
pub const SLOT_F2: usize = 23;

/// Index of `e1` and `f1` within the rank-22 complement basis.
pub const PERP_E1: usize = 16;
pub const PERP_F1: usize = 17;
pub const PERP_MU1: usize = 20;
pub const PERP_MU2: usize = 21;

/// The fixed embeddings: `A2` in the rank-24 Mukai lattice, the explicit
/// complement basis, and the square-(-3) class `h` in the odd rank-23
/// lattice with the identification of the complement with `h^perp`.
#[derive(Debug, Clone)]
pub struct CubicSetup {
    mukai: Lattice,
    odd: Lattice,
    /// Rows `l1`, `l2` in Mukai coordinates.
    a2_rows: IntMatrix,
    /// 22 rows spanning the complement of `A2`, in Mukai coordinates.
    a2perp_rows: IntMatrix,
    /// The same 22 basis vectors as elements of the odd lattice, where
    /// they span `h^perp` (`mu_i` map to the zero-sum vectors of the
    /// `Z(-1)^3` block).
    a2perp_in_odd: IntMatrix,
    /// `h = (1,1,1)` in the `Z(-1)^3` block.
    h: Vec<BigInt>,
}

impl CubicSetup {
    pub fn mukai(&self) -> &Lattice {
        &self.mukai
    }

    pub fn odd(&self) -> &Lattice {
        &self.odd
    }

    pub fn a2_rows(&self) -> &IntMatrix {
        &self.a2_rows
    }

    pub fn a2perp_rows(&self) -> &IntMatrix {
        &self.a2perp_rows
    }

    pub fn h(&self) -> &[BigInt] {
        &self.h
    }

    pub fn lambda1(&self) -> Vec<BigInt> {
        self.a2_rows.row_vec(0)
    }

    pub fn lambda2(&self) -> Vec<BigInt> {
        self.a2_rows.row_vec(1)
    }

    /// `A2` as a sublattice of the Mukai ambient.
    pub fn a2_sublattice(&self) -> Sublattice {
        Sublattice::new(self.mukai.clone(), self.a2_rows.clone()).expect("fixed basis")
    }

    /// The complement as a sublattice of the Mukai ambient.
    pub fn a2perp_sublattice(&self) -> Sublattice {
        Sublattice::new(self.mukai.clone(), self.a2perp_rows.clone()).expect("fixed basis")
    }

    /// Map complement coordinates (22) to Mukai coordinates (24).
    pub fn perp_to_mukai(&self, coords: &[BigInt]) -> Vec<BigInt> {
        mat_apply(&self.a2perp_rows, coords)
    }

    /// Map complement coordinates (22) to odd-lattice coordinates (23).
    pub fn perp_to_odd(&self, coords: &[BigInt]) -> Vec<BigInt> {
        mat_apply(&self.a2perp_in_odd, coords)
    }

    /// Combination `a*l1 + b*l2 + (extra)` in Mukai coordinates.
    pub fn a2_combination(&self, a: &BigInt, b: &BigInt) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); 24];
        for j in 0..24 {
            out[j] = a * &self.a2_rows[(0, j)] + b * &self.a2_rows[(1, j)];
        }
        out
    }
}

fn mat_apply(rows: &IntMatrix, coords: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(rows.rows(), coords.len());
    let mut out = vec![BigInt::zero(); rows.cols()];
    for i in 0..rows.rows() {
        if coords[i].is_zero() {
            continue;
        }
        for j in 0..rows.cols() {
            out[j] += &coords[i] * &rows[(i, j)];
        }
    }
    out
}

/// Build the fixed setup and verify its invariants exactly.
pub fn build_setup() -> CubicSetup {
    let mukai = mukai_lattice();
    let odd = odd_i2_21();

    let mut a2_rows = IntMatrix::zero(2, 24);
    // l1 = e' + f'
    a2_rows[(0, SLOT_EPRIME)] = BigInt::from(1);
    a2_rows[(0, SLOT_FPRIME)] = BigInt::from(1);
    // l2 = e + f - e'
    a2_rows[(1, SLOT_E)] = BigInt::from(1);
    a2_rows[(1, SLOT_F)] = BigInt::from(1);
    a2_rows[(1, SLOT_EPRIME)] = BigInt::from(-1);

    // Complement rows: E8 (+) E8 (+) U3 (+) U4 (+) (mu1, mu2).
    let mut a2perp_rows = IntMatrix::zero(22, 24);
    for i in 0..16 {
        a2perp_rows[(i, i)] = BigInt::from(1);
    }
    a2perp_rows[(PERP_E1, SLOT_E1)] = BigInt::from(1);
    a2perp_rows[(PERP_F1, SLOT_F1)] = BigInt::from(1);
    a2perp_rows[(18, SLOT_E2)] = BigInt::from(1);
    a2perp_rows[(19, SLOT_F2)] = BigInt::from(1);
    // mu1 = e - e' + f'
    a2perp_rows[(PERP_MU1, SLOT_E)] = BigInt::from(1);
    a2perp_rows[(PERP_MU1, SLOT_EPRIME)] = BigInt::from(-1);
    a2perp_rows[(PERP_MU1, SLOT_FPRIME)] = BigInt::from(1);
    // mu2 = -(f - e' + f')
    a2perp_rows[(PERP_MU2, SLOT_F)] = BigInt::from(-1);
    a2perp_rows[(PERP_MU2, SLOT_EPRIME)] = BigInt::from(1);
    a2perp_rows[(PERP_MU2, SLOT_FPRIME)] = BigInt::from(-1);

    // Odd-lattice side: E8, E8, U, U occupy slots 0..20; Z(-1)^3 is 20..23.
    let mut a2perp_in_odd = IntMatrix::zero(22, 23);
    for i in 0..20 {
        a2perp_in_odd[(i, i)] = BigInt::from(1);
    }
    // mu1 -> (1,-1,0), mu2 -> (0,1,-1): the zero-sum sublattice of Z(-1)^3,
    // which is exactly h^perp there and carries the same A2(-1) Gram.
    a2perp_in_odd[(PERP_MU1, 20)] = BigInt::from(1);
    a2perp_in_odd[(PERP_MU1, 21)] = BigInt::from(-1);
    a2perp_in_odd[(PERP_MU2, 21)] = BigInt::from(1);
    a2perp_in_odd[(PERP_MU2, 22)] = BigInt::from(-1);

    let mut h = vec![BigInt::zero(); 23];
    h[20] = BigInt::from(1);
    h[21] = BigInt::from(1);
    h[22] = BigInt::from(1);

    let setup = CubicSetup {
        mukai,
        odd,
        a2_rows,
        a2perp_rows,
        a2perp_in_odd,
        h,
    };
    verify_setup(&setup);
    setup
}

fn verify_setup(s: &CubicSetup) {
    // Gram of (l1, l2) is the A2 matrix.
    let a2 = s.a2_sublattice();
    assert_eq!(a2.induced_gram(), *root_a2().gram(), "lambda Gram");

    // Gram of the 22 complement rows matches E8(-1)^2 (+) U^2 (+) A2(-1).
    let perp = s.a2perp_sublattice();
    assert_eq!(
        perp.induced_gram(),
        *a2_perp_abstract().gram(),
        "complement Gram"
    );

    // The explicit rows really are the full orthogonal complement.
    let computed = a2.orthogonal_complement().expect("nondegenerate ambient");
    assert_eq!(
        perp.saturate().basis(),
        computed.basis(),
        "complement basis"
    );

    // h has square -3 and the embedded complement is orthogonal to it and
    // carries the same Gram.
    assert_eq!(s.odd.norm(&s.h), BigInt::from(-3), "h square");
    let in_odd = Sublattice::new(s.odd.clone(), s.a2perp_in_odd.clone()).expect("fixed basis");
    assert_eq!(
        in_odd.induced_gram(),
        *a2_perp_abstract().gram(),
        "h^perp Gram"
    );
    for i in 0..22 {
        assert!(
            s.odd.pair(&s.a2perp_in_odd.row_vec(i), &s.h).is_zero(),
            "row {i} vs h"
        );
    }
}

/// Complete a primitive isotropic `e` to a twisted hyperbolic plane
/// `U(n)` using a root of the designated `A2`: `f = (a.e) a - e` has
/// square zero and pairs with `e` to `n = (a.e)^2`.
pub fn complete_to_un(setup: &CubicSetup, e: &[BigInt]) -> Result<(Vec<BigInt>, BigInt)> {
    let ee = setup.mukai.norm(e);
    if !ee.is_zero() || e.iter().all(Zero::is_zero) {
        return Err(Error::NotIsotropic);
    }
    let l1 = setup.lambda1();
    let l2 = setup.lambda2();
    let l12: Vec<BigInt> = l1.iter().zip(&l2).map(|(x, y)| x + y).collect();
    for a in [&l1, &l2, &l12] {
        let pa = setup.mukai.pair(a, e);
        if pa.is_zero() {
            continue;
        }
        // f = (a.e) a - ((a)^2 / 2) e with (a)^2 = 2 for a root
        let f: Vec<BigInt> = a.iter().zip(e).map(|(ai, ei)| &pa * ai - ei).collect();
        let n = &pa * &pa;
        debug_assert!(setup.mukai.norm(&f).is_zero());
        debug_assert_eq!(setup.mukai.pair(e, &f), n);
        return Ok((f, n));
    }
    Err(Error::OrthogonalToA2)
}
