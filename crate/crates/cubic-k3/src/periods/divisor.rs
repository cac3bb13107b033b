//! Per-discriminant constructions: the vector `v`, the saturation
//! `Gamma_d`, the rank-2 lattice `K_d`, divisor membership and the
//! spherical-class search.

use super::CubicSetup;
use crate::arith::{a2_represents, a2_represents_primitive, a2_vectors_of_norm_fast};
use crate::hassett::{
    brauer_orders, cond_star, cond_star2, cond_star2prime, cond_star2prime_bounded,
    factorizations_k2d0,
};
use crate::lattice::Lattice;
use crate::lattice::Sublattice;
use crate::linalg::IntMatrix;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub const DEFAULT_K_BOUND: i64 = 1000;

/// `v` in the 22 coordinates of the complement basis.
///
/// `v = e1 - (d/6) f1` for `d = 0 (6)` and
/// `v = 3(e1 - ((d-2)/6) f1) + mu1 - mu2` for `d = 2 (6)`, giving
/// `(v)^2 = -d/3` and `-3d` respectively.
pub fn build_v(d: i64) -> Result<Vec<BigInt>> {
    if d <= 0 || (d % 6 != 0 && d % 6 != 2) {
        return Err(Error::InadmissibleD(d));
    }
    let mut v = vec![BigInt::zero(); 22];
    if d % 6 == 0 {
        v[super::PERP_E1] = BigInt::from(1);
        v[super::PERP_F1] = BigInt::from(-d / 6);
    } else {
        v[super::PERP_E1] = BigInt::from(3);
        v[super::PERP_F1] = BigInt::from(-(d - 2) / 2);
        v[super::PERP_MU1] = BigInt::from(1);
        v[super::PERP_MU2] = BigInt::from(-1);
    }
    Ok(v)
}

/// The expected square of `v`.
pub fn v_square(d: i64) -> i64 {
    if d % 6 == 0 {
        -d / 3
    } else {
        -3 * d
    }
}

/// The saturation of `A2 (+) Z*v` inside the rank-24 ambient.
#[derive(Debug, Clone)]
pub struct GammaD {
    /// Saturated rank-3 sublattice of the Mukai ambient.
    pub gamma: Sublattice,
    /// `v` in Mukai coordinates.
    pub v: Vec<BigInt>,
    /// Index of `A2 (+) Z*v` in the saturation (1 or 3).
    pub sat_index: i64,
    /// Discriminant of the saturation (equals `d`).
    pub disc: i64,
}

pub fn gamma_d(setup: &CubicSetup, d: i64) -> Result<GammaD> {
    let v22 = build_v(d)?;
    let v = setup.perp_to_mukai(&v22);
    let mut rows = IntMatrix::zero(3, 24);
    for j in 0..24 {
        rows[(0, j)] = setup.a2_rows()[(0, j)].clone();
        rows[(1, j)] = setup.a2_rows()[(1, j)].clone();
        rows[(2, j)] = v[j].clone();
    }
    let sub = Sublattice::new(setup.mukai().clone(), rows)?;
    debug_assert_eq!(sub.induced_gram()[(2, 2)], BigInt::from(v_square(d)));
    let index = sub.saturation_index();
    let gamma = sub.saturate();
    let disc = gamma
        .induced_gram()
        .det()
        .abs()
        .to_i64()
        .ok_or_else(|| Error::Inconsistent("Gamma_d discriminant overflow".into()))?;
    let sat_index = index
        .to_i64()
        .ok_or_else(|| Error::Inconsistent("saturation index overflow".into()))?;
    Ok(GammaD {
        gamma,
        v,
        sat_index,
        disc,
    })
}

/// Gram matrix of `K_d`: the saturation of `<h, v>` in the odd rank-23
/// lattice, written on the basis `(h, w)` with the pairing `(h, w)`
/// normalized to 0 or -1. This reproduces `[[-3,0],[0,-d/3]]` for
/// `d = 0 (6)` and `[[-3,-1],[-1,-(d+1)/3]]` for `d = 2 (6)`.
pub fn k_d_gram(setup: &CubicSetup, d: i64) -> Result<Lattice> {
    let v22 = build_v(d)?;
    let v = setup.perp_to_odd(&v22);
    let odd = setup.odd();
    let h = setup.h().to_vec();
    let mut rows = IntMatrix::zero(2, 23);
    for j in 0..23 {
        rows[(0, j)] = h[j].clone();
        rows[(1, j)] = v[j].clone();
    }
    let sat = Sublattice::new(odd.clone(), rows)?.saturate();

    // Express h in the saturated basis and complete it to a new basis
    // (h, w); h is primitive in the odd lattice, so its coordinates are
    // coprime.
    let coords = crate::linalg::solve_left_rational(sat.basis(), &crate::lattice::rational_row(&h))
        .ok_or_else(|| Error::Inconsistent("h must lie in the saturation".into()))?;
    let alpha = coords[0].to_integer();
    let beta = coords[1].to_integer();
    debug_assert!(coords.iter().all(num_rational::BigRational::is_integer));
    let e = alpha.extended_gcd(&beta);
    debug_assert!(e.gcd.abs().is_one(), "h is primitive in K_d");
    // (alpha, beta) completed by (-y, x)-style row of determinant +-1
    let (gamma, delta) = (-e.y.clone() / &e.gcd, e.x.clone() / &e.gcd);
    let b1 = h;
    let mut b2 = vec![BigInt::zero(); 23];
    for j in 0..23 {
        b2[j] = &gamma * &sat.basis()[(0, j)] + &delta * &sat.basis()[(1, j)];
    }

    // Normalize the pairing (h, w) into {0, -1} by sign flips and
    // translation by h ((h, h) = -3).
    let p = odd.pair(&b1, &b2);
    let (s, t): (i64, BigInt) = match p.mod_floor(&BigInt::from(3)).to_i64().unwrap() {
        0 => (1, &p / 3),
        1 => (-1, (BigInt::from(1) - &p) / 3),
        _ => (1, (&p + 1) / 3),
    };
    for j in 0..23 {
        b2[j] = BigInt::from(s) * &b2[j] + &t * &b1[j];
    }

    let g11 = odd.norm(&b1);
    let g12 = odd.pair(&b1, &b2);
    let g22 = odd.norm(&b2);
    let gram = IntMatrix::new(2, 2, vec![g11, g12.clone(), g12, g22]);
    Lattice::new(format!("K_{d}"), gram)
}

/// Membership of the divisor in the locus of K3-associated periods:
/// condition (**), cross-checked against the primitive representation
/// criterion.
pub fn k3_membership(d: i64) -> Result<bool> {
    if !cond_star(d) {
        return Err(Error::InadmissibleD(d));
    }
    let by_condition = cond_star2(d);
    let by_vectors = a2_represents_primitive(d)?;
    if by_condition != by_vectors {
        return Err(Error::Inconsistent(format!(
            "(**) disagrees with the primitive representation criterion at d = {d}"
        )));
    }
    Ok(by_condition)
}

/// Membership in the twisted locus, decided two ways and required to
/// agree: condition (**') on one side; on the other, the isotropic-vector
/// argument reduces to representing `-(v)^2` (for `d = 0 (6)`) or `3d`
/// (for `d = 2 (6)`, via the isotropic vector `3e` and `n = 3d/2`).
pub fn k3prime_membership(d: i64) -> Result<bool> {
    if !cond_star(d) {
        return Err(Error::InadmissibleD(d));
    }
    let by_condition = cond_star2prime(d);
    let target = if d % 6 == 0 { d / 3 } else { 3 * d };
    let by_isotropic = a2_represents(target)?;
    if by_condition != by_isotropic {
        return Err(Error::Inconsistent(format!(
            "(**') disagrees with the isotropic-vector criterion at d = {d}"
        )));
    }
    Ok(by_condition)
}

/// Outcome of the search for a spherical class in `Gamma_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphericalStatus {
    /// A class of square -2, in Mukai coordinates.
    Contains { witness: Vec<BigInt> },
    /// Proven empty by a modular obstruction (never by mere search
    /// exhaustion).
    Empty { obstruction: String },
    /// Search exhausted without a proof either way.
    Unknown { k_bound: i64 },
}

/// Search `Gamma_d` for a class of square -2.
///
/// For `d = 0 (6)` the candidates are `w + k v` with
/// `(w)^2 = k^2 d/3 - 2`. For `d = 2 (6)` they are
/// `(a l1 + b l2 + c v)/3`, constrained to land in the ambient lattice,
/// with `2(a^2 - ab + b^2) = 3 d c^2 - 18`. When `9 | d` every candidate
/// norm is `2m` with `m = 2 (mod 3)`, which `A2` never represents, so the
/// result is a certified `Empty`.
pub fn spherical_status(setup: &CubicSetup, d: i64, k_bound: i64) -> Result<SphericalStatus> {
    if !cond_star(d) {
        return Err(Error::InadmissibleD(d));
    }
    if d % 9 == 0 {
        return Ok(SphericalStatus::Empty {
            obstruction: "mod 3: 9 | d makes every candidate norm 2m with m = 2 (mod 3), \
                          which is not represented by A2"
                .into(),
        });
    }
    let gd = gamma_d(setup, d)?;
    if d % 6 == 0 {
        for k in 1..=k_bound {
            let target = k * k * (d / 3) - 2;
            if target < 0 || !a2_represents(target)? {
                continue;
            }
            let w = a2_vectors_of_norm_fast(target)?[0];
            let mut delta = setup.a2_combination(&BigInt::from(w.a), &BigInt::from(w.b));
            for j in 0..24 {
                delta[j] += BigInt::from(k) * &gd.v[j];
            }
            assert_eq!(setup.mukai().norm(&delta), BigInt::from(-2));
            return Ok(SphericalStatus::Contains { witness: delta });
        }
    } else {
        for c in 1..=k_bound {
            let target = 3 * d * c * c - 18;
            if target < 0 || !a2_represents(target)? {
                continue;
            }
            for w in a2_vectors_of_norm_fast(target)? {
                let mut triple = setup.a2_combination(&BigInt::from(w.a), &BigInt::from(w.b));
                for j in 0..24 {
                    triple[j] += BigInt::from(c) * &gd.v[j];
                }
                if triple.iter().any(|x| !(x % BigInt::from(3)).is_zero()) {
                    continue;
                }
                let delta: Vec<BigInt> = triple.iter().map(|x| x / BigInt::from(3)).collect();
                debug_assert!(gd
                    .gamma
                    .contains_rational(&crate::lattice::rational_row(&delta)));
                assert_eq!(setup.mukai().norm(&delta), BigInt::from(-2));
                return Ok(SphericalStatus::Contains { witness: delta });
            }
        }
    }
    Ok(SphericalStatus::Unknown { k_bound })
}

/// Wire form of the spherical search result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalReport {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<String>,
}

impl From<&SphericalStatus> for SphericalReport {
    fn from(s: &SphericalStatus) -> Self {
        match s {
            SphericalStatus::Contains { witness } => SphericalReport {
                status: "contains".into(),
                witness: Some(
                    witness
                        .iter()
                        .map(|x| x.to_i64().expect("witness entry"))
                        .collect(),
                ),
                obstruction: None,
            },
            SphericalStatus::Empty { obstruction } => SphericalReport {
                status: "empty".into(),
                witness: None,
                obstruction: Some(obstruction.clone()),
            },
            SphericalStatus::Unknown { .. } => SphericalReport {
                status: "unknown".into(),
                witness: None,
                obstruction: None,
            },
        }
    }
}

/// Everything the tool knows about one divisor label `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorReport {
    pub d: i64,
    pub v: Vec<i64>,
    pub v_sq: i64,
    pub sat_index: i64,
    pub disc_gamma: i64,
    pub k3: bool,
    pub k3prime: bool,
    pub sph: SphericalReport,
    pub factorizations: Vec<(i64, i64)>,
    pub brauer_orders: Vec<i64>,
}

pub fn divisor_report(setup: &CubicSetup, d: i64, k_bound: i64) -> Result<DivisorReport> {
    if !cond_star(d) {
        return Err(Error::InadmissibleD(d));
    }
    let v22 = build_v(d)?;
    let gd = gamma_d(setup, d)?;
    let v_sq = v_square(d);
    // internal cross-checks
    let v_mukai_sq = setup.mukai().norm(&gd.v);
    if v_mukai_sq != BigInt::from(v_sq) {
        return Err(Error::Inconsistent(format!(
            "(v)^2 = {v_mukai_sq}, expected {v_sq}"
        )));
    }
    if gd.disc != d {
        return Err(Error::Inconsistent(format!(
            "disc(Gamma_d) = {}, expected {d}",
            gd.disc
        )));
    }
    let expected_index = if d % 6 == 0 { 1 } else { 3 };
    if gd.sat_index != expected_index {
        return Err(Error::Inconsistent(format!(
            "saturation index {} at d = {d}, expected {expected_index}",
            gd.sat_index
        )));
    }
    let k3 = k3_membership(d)?;
    let k3prime = k3prime_membership(d)?;
    let sph = spherical_status(setup, d, k_bound)?;
    let (factorizations, brauer) = if cond_star2prime_bounded(d, false) {
        (factorizations_k2d0(d)?, brauer_orders(d)?)
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(DivisorReport {
        d,
        v: v22.iter().map(|x| x.to_i64().expect("v entry")).collect(),
        v_sq,
        sat_index: gd.sat_index,
        disc_gamma: gd.disc,
        k3,
        k3prime,
        sph: SphericalReport::from(&sph),
        factorizations,
        brauer_orders: brauer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periods::build_setup;

    #[test]
    fn v_squares() {
        let setup = build_setup();
        for (d, sq) in [(24i64, -8i64), (12, -4), (14, -42), (8, -24)] {
            let v22 = build_v(d).unwrap();
            let v = setup.perp_to_mukai(&v22);
            assert_eq!(setup.mukai().norm(&v), BigInt::from(sq), "d = {d}");
            assert_eq!(v_square(d), sq);
        }
        assert!(build_v(11).is_err());
        assert!(build_v(10).is_err());
    }

    #[test]
    fn gamma_d_examples() {
        let setup = build_setup();
        for (d, idx) in [(12i64, 1i64), (14, 3), (24, 1)] {
            let gd = gamma_d(&setup, d).unwrap();
            assert_eq!(gd.sat_index, idx, "d = {d}");
            assert_eq!(gd.disc, d, "d = {d}");
            assert_eq!(gd.gamma.rank(), 3);
        }
    }

    #[test]
    fn k_d_grams_match_derived_matrices() {
        let setup = build_setup();
        let cases = [
            (12i64, vec![vec![-3i64, 0], vec![0, -4]]),
            (14, vec![vec![-3, -1], vec![-1, -5]]),
            (8, vec![vec![-3, -1], vec![-1, -3]]),
        ];
        for (d, rows) in cases {
            let k = k_d_gram(&setup, d).unwrap();
            assert_eq!(k.gram(), &IntMatrix::from_rows_i64(&rows), "d = {d}");
            assert_eq!(k.discriminant().unwrap(), BigInt::from(d));
            let sig = k.signature().unwrap();
            assert_eq!((sig.positive, sig.negative, sig.zero), (0, 2, 0));
        }
    }

    #[test]
    fn membership_examples() {
        for (d, k3) in [(14i64, true), (8, false), (12, false), (26, true)] {
            assert_eq!(k3_membership(d).unwrap(), k3, "d = {d}");
        }
        for (d, k3p) in [
            (8i64, true),
            (24, true),
            (12, false),
            (14, true),
            (18, true),
            (20, false),
        ] {
            assert_eq!(k3prime_membership(d).unwrap(), k3p, "d = {d}");
        }
        assert!(k3_membership(11).is_err());
    }

    #[test]
    fn spherical_known_witnesses() {
        let setup = build_setup();
        // d = 24: delta = 2 l1 + l2 + v has square 6 - 8 = -2
        match spherical_status(&setup, 24, 50).unwrap() {
            SphericalStatus::Contains { witness } => {
                assert_eq!(setup.mukai().norm(&witness), BigInt::from(-2));
            }
            other => panic!("d = 24: expected a witness, got {other:?}"),
        }
        // d = 12: (l_i + v)^2 = 2 - 4 = -2
        match spherical_status(&setup, 12, 50).unwrap() {
            SphericalStatus::Contains { witness } => {
                assert_eq!(setup.mukai().norm(&witness), BigInt::from(-2));
            }
            other => panic!("d = 12: expected a witness, got {other:?}"),
        }
        // d = 18: certified empty (9 | 18)
        match spherical_status(&setup, 18, 50).unwrap() {
            SphericalStatus::Empty { obstruction } => {
                assert!(obstruction.contains("mod 3"));
            }
            other => panic!("d = 18: expected empty, got {other:?}"),
        }
        // d = 14 satisfies (**), so a witness exists in the glued lattice
        match spherical_status(&setup, 14, 50).unwrap() {
            SphericalStatus::Contains { witness } => {
                assert_eq!(setup.mukai().norm(&witness), BigInt::from(-2));
            }
            other => panic!("d = 14: expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn report_examples() {
        let setup = build_setup();
        let r = divisor_report(&setup, 14, 100).unwrap();
        assert_eq!(r.v_sq, -42);
        assert_eq!(r.sat_index, 3);
        assert_eq!(r.disc_gamma, 14);
        assert!(r.k3 && r.k3prime);
        assert_eq!(r.factorizations, vec![(1, 14)]);
        assert_eq!(r.brauer_orders, vec![1]);

        let r = divisor_report(&setup, 18, 100).unwrap();
        assert!(!r.k3);
        assert!(r.k3prime);
        assert_eq!(r.sph.status, "empty");
        assert_eq!(r.brauer_orders, vec![1, 3]);

        let r = divisor_report(&setup, 20, 100).unwrap();
        assert!(!r.k3 && !r.k3prime);
        assert!(r.factorizations.is_empty());

        assert!(divisor_report(&setup, 11, 100).is_err());
        assert!(divisor_report(&setup, 6, 100).is_err());
    }

    #[test]
    fn report_round_trips_as_json() {
        let setup = build_setup();
        let r = divisor_report(&setup, 24, 100).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: DivisorReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert!(s.starts_with(r#"{"d":24,"v":["#));
    }
}
