//! The fixed lattices everything else is built from.

use super::Lattice;

/// Hyperbolic plane `U`.
pub fn hyperbolic_u() -> Lattice {
    Lattice::from_rows_i64("U", &[vec![0, 1], vec![1, 0]]).unwrap()
}

/// Twisted hyperbolic plane `U(n)`.
pub fn hyperbolic_un(n: i64) -> Lattice {
    Lattice::from_rows_i64(format!("U({n})"), &[vec![0, n], vec![n, 0]]).unwrap()
}

/// Root lattice `A2`.
pub fn root_a2() -> Lattice {
    Lattice::from_rows_i64("A2", &[vec![2, -1], vec![-1, 2]]).unwrap()
}

/// `A2(-1)` in the standard basis.
pub fn root_a2_neg() -> Lattice {
    Lattice::from_rows_i64("A2(-1)", &[vec![-2, 1], vec![1, -2]]).unwrap()
}

/// Rank-one lattice `Z(n)` with form `(n)`.
pub fn z_n(n: i64) -> Lattice {
    Lattice::from_rows_i64(format!("Z({n})"), &[vec![n]]).unwrap()
}

/// Positive definite `E8` (Cartan matrix of the root system; chain
/// 0-..-6 with node 7 attached to node 4).
pub fn e8() -> Lattice {
    let mut rows = vec![vec![0i64; 8]; 8];
    for i in 0..8 {
        rows[i][i] = 2;
    }
    for i in 0..6 {
        rows[i][i + 1] = -1;
        rows[i + 1][i] = -1;
    }
    rows[4][7] = -1;
    rows[7][4] = -1;
    Lattice::from_rows_i64("E8", &rows).unwrap()
}

/// Negative definite `E8(-1)`.
pub fn e8_neg() -> Lattice {
    let mut l = e8().rescale(-1).unwrap();
    l.label = "E8(-1)".into();
    l
}

/// The K3 lattice `E8(-1)^2 (+) U^3` of signature (3,19).
pub fn k3_lattice() -> Lattice {
    let e = e8_neg();
    let u = hyperbolic_u();
    let mut l = e
        .direct_sum(&e)
        .direct_sum(&u)
        .direct_sum(&u)
        .direct_sum(&u);
    l.label = "Lambda".into();
    l
}

/// The extended (Mukai) K3 lattice `E8(-1)^2 (+) U^4` of signature (4,20).
/// Slot order: E8, E8, U1, U2, U3, U4.
pub fn mukai_lattice() -> Lattice {
    let mut l = k3_lattice().direct_sum(&hyperbolic_u());
    l.label = "Mukai".into();
    l
}

/// The abstract orthogonal complement of `A2` in the Mukai lattice:
/// `E8(-1)^2 (+) U^2 (+) A2(-1)`, signature (2,20), discriminant 3.
pub fn a2_perp_abstract() -> Lattice {
    let e = e8_neg();
    let u = hyperbolic_u();
    let mut l = e
        .direct_sum(&e)
        .direct_sum(&u)
        .direct_sum(&u)
        .direct_sum(&root_a2_neg());
    l.label = "A2perp".into();
    l
}

/// The odd unimodular lattice of signature (2,21) in the shape
/// `E8(-1)^2 (+) U^2 (+) Z(-1)^3` used for cubic periods.
pub fn odd_i2_21() -> Lattice {
    let e = e8_neg();
    let u = hyperbolic_u();
    let z = z_n(-1);
    let mut l = e
        .direct_sum(&e)
        .direct_sum(&u)
        .direct_sum(&u)
        .direct_sum(&z)
        .direct_sum(&z)
        .direct_sum(&z);
    l.label = "I(2,21)".into();
    l
}
