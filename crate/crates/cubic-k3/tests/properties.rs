//! Randomized and property-based invariants, seeded for reproducibility.

mod common;

use common::seeded_rng;
use cubic_k3::arith::{a2_vectors_of_norm, a2_vectors_of_norm_fast};
use cubic_k3::hassett;
use cubic_k3::lattice::{
    a2_perp_abstract, disc_group_form, enumerate_even_overlattices, finite_form_isomorphic,
    root_a2, z_n, Lattice, Sublattice,
};
use cubic_k3::linalg::{hnf, int_kernel, pivot_signature, snf, IntMatrix};
use cubic_k3::periods::{build_setup, complete_to_un, gamma_d};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_rows_i64(&data)
}

fn random_symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..=i {
            let x = BigInt::from(rng.gen_range(-bound..=bound));
            m[(i, j)] = x.clone();
            m[(j, i)] = x;
        }
    }
    m
}

/// Random product of elementary row operations: always unimodular.
fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut t = IntMatrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for k in 0..n {
            let add = &c * &t[(j, k)];
            t[(i, k)] += add;
        }
    }
    t
}

#[test]
fn signature_invariant_under_congruence() {
    let mut rng = seeded_rng();
    for _ in 0..50 {
        let n = rng.gen_range(2..=6);
        let g = random_symmetric(&mut rng, n, 5);
        let base = pivot_signature(&g).unwrap();
        let t = random_unimodular(&mut rng, n, 12);
        let conj = t.mul(&g).mul(&t.transpose());
        let sig = pivot_signature(&conj).unwrap();
        assert_eq!(
            (sig.positive, sig.negative, sig.zero),
            (base.positive, base.negative, base.zero)
        );
    }
}

#[test]
fn kernel_rows_annihilate_and_are_saturated() {
    let mut rng = seeded_rng();
    for _ in 0..60 {
        let rows = rng.gen_range(2..=6);
        let cols = rng.gen_range(1..=5);
        let m = random_matrix(&mut rng, rows, cols, 6);
        let k = int_kernel(&m);
        assert!(k.rows() == 0 || k.mul(&m).is_zero());
        // saturated: kernel of the kernel-transpose recovers exactly it
        let again = int_kernel(&int_kernel(&k.transpose()).transpose());
        if k.rows() > 0 {
            assert_eq!(again, k);
        }
        // rank count: kernel rank + row rank = rows
        let (h, _) = hnf(&m);
        let row_rank = (0..h.rows())
            .filter(|&i| h.row(i).iter().any(|e| !e.is_zero()))
            .count();
        assert_eq!(k.rows() + row_rank, rows);
    }
}

#[test]
fn disc_of_sublattice_is_disc_of_saturation_times_index_squared() {
    let mut rng = seeded_rng();
    let ambient = a2_perp_abstract();
    let mut done = 0;
    while done < 100 {
        let rank = rng.gen_range(1..=3);
        let m = random_matrix(&mut rng, rank, 22, 3);
        let Ok(sub) = Sublattice::new(ambient.clone(), m) else {
            continue;
        };
        let disc_sub = sub.induced_gram().det().abs();
        if disc_sub.is_zero() {
            continue;
        }
        let sat = sub.saturate();
        let idx = sub.saturation_index();
        let disc_sat = sat.induced_gram().det().abs();
        assert_eq!(disc_sub, &disc_sat * (&idx * &idx));
        done += 1;
    }
}

#[test]
fn complement_of_complement_is_saturation() {
    let mut rng = seeded_rng();
    let ambient = a2_perp_abstract();
    for _ in 0..25 {
        let m = random_matrix(&mut rng, 2, 22, 2);
        let Ok(sub) = Sublattice::new(ambient.clone(), m) else {
            continue;
        };
        let oc = sub.orthogonal_complement().unwrap();
        assert_eq!(oc.saturate().basis(), oc.basis());
        let occ = oc.orthogonal_complement().unwrap();
        assert_eq!(occ.basis(), &sub.saturate().basis().clone());
    }
}

#[test]
fn a2_and_complement_have_opposite_disc_forms_in_mukai() {
    // primitive S in an even unimodular ambient: q(S^perp) = -q(S)
    let setup = build_setup();
    let a2 = setup.a2_sublattice();
    let perp = a2.orthogonal_complement().unwrap();
    let f_s = disc_group_form(&a2.as_lattice("A2")).unwrap();
    let f_p = disc_group_form(&perp.as_lattice("A2perp")).unwrap();
    assert!(finite_form_isomorphic(&f_p, &f_s.negate()).unwrap());
    assert!(!finite_form_isomorphic(&f_p, &f_s).unwrap());
}

#[test]
fn overlattice_entries_are_even_with_disc_ratio_index() {
    for (d, v2) in [(14i64, -42i64), (8, -24), (24, -8)] {
        let l = root_a2().direct_sum(&z_n(v2));
        for o in enumerate_even_overlattices(&l, 3).unwrap() {
            assert!(o.lattice.is_even());
            let expected = l.discriminant().unwrap() / (&o.index * &o.index);
            assert_eq!(o.lattice.discriminant().unwrap(), expected, "d = {d}");
        }
    }
}

#[test]
fn norm_form_multiplicativity_random() {
    let mut rng = seeded_rng();
    for _ in 0..100 {
        let (x1, y1, x2, y2): (i64, i64, i64, i64) = (
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
            rng.gen_range(-1000..=1000),
        );
        let big = |v: i64| BigInt::from(v);
        let lhs = (big(x1) * x1 + 3 * big(y1) * y1) * (big(x2) * x2 + 3 * big(y2) * y2);
        let u = big(x1) * x2 - 3 * big(y1) * y2;
        let v = big(x1) * y2 + big(x2) * y1;
        assert_eq!(lhs, &u * &u + 3 * &v * &v);
    }
}

#[test]
fn hassett_chain_up_to_1e5() {
    for d in (8..=100_000i64).step_by(2) {
        if hassett::cond_star2(d) {
            assert!(hassett::cond_star2prime(d), "(**) => (**') at d = {d}");
        }
        if hassett::cond_star2prime(d) {
            assert!(hassett::cond_star(d), "(**') => (*) at d = {d}");
        }
    }
}

#[test]
fn star2_times_square_satisfies_star2prime() {
    for d in (8..=300i64).step_by(2).filter(|&d| hassett::cond_star2(d)) {
        for k in 1..=30i64 {
            assert!(
                hassett::cond_star2prime_bounded(k * k * d, false),
                "d = {d}, k = {k}"
            );
        }
    }
}

#[test]
fn k2d0_exists_whenever_star2prime() {
    for d in (8..=10_000i64)
        .step_by(2)
        .filter(|&d| hassett::cond_star2prime(d))
    {
        assert!(
            !hassett::factorizations_k2d0(d).unwrap().is_empty(),
            "d = {d}"
        );
    }
}

#[test]
fn complete_to_un_on_random_isotropic_vectors() {
    let setup = build_setup();
    let mut rng = seeded_rng();
    for d in [8i64, 14, 24] {
        let gd = gamma_d(&setup, d).unwrap();
        let g3 = gd.gamma.induced_gram();
        let b = gd.gamma.basis().clone();
        let mut found = 0u32;
        let mut attempts = 0u64;
        while found < 200 {
            attempts += 1;
            assert!(
                attempts < 4_000_000,
                "isotropic sampling stalled for d = {d}"
            );
            let x = BigInt::from(rng.gen_range(-40i64..=40));
            let y = BigInt::from(rng.gen_range(-40i64..=40));
            // norm(x,y,z) as a quadratic in z
            let qa = g3[(2, 2)].clone();
            let qb = 2 * (&x * &g3[(0, 2)] + &y * &g3[(1, 2)]);
            let qc = &x * &x * &g3[(0, 0)] + 2 * &x * &y * &g3[(0, 1)] + &y * &y * &g3[(1, 1)];
            let Some(z) = integer_root(&qa, &qb, &qc) else {
                continue;
            };
            if x.is_zero() && y.is_zero() && z.is_zero() {
                continue;
            }
            let mut e = vec![BigInt::zero(); 24];
            for j in 0..24 {
                e[j] = &x * &b[(0, j)] + &y * &b[(1, j)] + &z * &b[(2, j)];
            }
            assert!(setup.mukai().norm(&e).is_zero());
            let (f, n) = complete_to_un(&setup, &e).unwrap();
            assert!(setup.mukai().norm(&f).is_zero());
            assert_eq!(setup.mukai().pair(&e, &f), n);
            assert!(n.is_positive());
            found += 1;
        }
    }
}

/// Smallest integer root of `a z^2 + b z + c = 0`, if any.
fn integer_root(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<BigInt> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() {
                Some(BigInt::zero())
            } else {
                None
            };
        }
        let z = -c / b;
        return if &(&z * b) + c == BigInt::zero() {
            Some(z)
        } else {
            None
        };
    }
    let disc: BigInt = b * b - 4 * (a * c);
    if disc.is_negative() {
        return None;
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return None;
    }
    for root in [(-b + &s), (-b - &s)] {
        let den: BigInt = 2 * a;
        let rem: BigInt = &root % &den;
        if rem.is_zero() {
            return Some(root / den);
        }
    }
    None
}

proptest! {
    #[test]
    fn hnf_transform_is_unimodular(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let mut rng: rand::rngs::StdRng = rand::SeedableRng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, rows, cols, 9);
        let (h, u) = hnf(&m);
        prop_assert!(u.is_unimodular());
        prop_assert_eq!(u.mul(&m), h.clone());
        // canonical fixed point
        let (hh, _) = hnf(&h);
        prop_assert_eq!(hh, h);
    }

    #[test]
    fn snf_divisibility_chain(rows in 1usize..4, cols in 1usize..4, seed in any::<u64>()) {
        let mut rng: rand::rngs::StdRng = rand::SeedableRng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, rows, cols, 9);
        let (d, u, v) = snf(&m);
        prop_assert!(u.is_unimodular());
        prop_assert!(v.is_unimodular());
        prop_assert_eq!(u.mul(&m).mul(&v), d.clone());
        let k = rows.min(cols);
        for i in 1..k {
            let prev = d[(i - 1, i - 1)].clone();
            let here = d[(i, i)].clone();
            prop_assert!(!prev.is_negative());
            if prev.is_zero() {
                prop_assert!(here.is_zero());
            } else {
                prop_assert!((&here % &prev).is_zero());
            }
        }
        // product of nonzero entries = |det| for square nondegenerate m
        if rows == cols {
            let det = m.det().abs();
            if !det.is_zero() {
                let prod: BigInt = (0..k).map(|i| d[(i, i)].clone()).product();
                prop_assert_eq!(prod, det);
            }
        }
    }

    #[test]
    fn factorization_shape(n in 1u64..2_000_000) {
        let f = cubic_k3::arith::factorize_u64(n);
        let mut prod = BigInt::from(1u64);
        let mut last = 1u64;
        for &(p, e) in f.factors() {
            prop_assert!(p > last, "primes strictly ascending");
            prop_assert!(e >= 1);
            prop_assert!(cubic_k3::arith::is_prime_u64(p));
            last = p;
            prod *= BigInt::from(p).pow(e);
        }
        prop_assert_eq!(prod, BigInt::from(n));
    }

    #[test]
    fn fast_vectors_match_box(two_n in 0i64..3000) {
        let two_n = two_n * 2;
        prop_assert_eq!(
            a2_vectors_of_norm_fast(two_n).unwrap(),
            a2_vectors_of_norm(two_n).unwrap()
        );
    }

    #[test]
    fn lattice_json_round_trip(n in 1usize..4, seed in any::<u64>()) {
        let mut rng: rand::rngs::StdRng = rand::SeedableRng::seed_from_u64(seed);
        let g = random_symmetric(&mut rng, n, 20);
        let l = Lattice::new("rt", g).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        let back: Lattice = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back.gram(), l.gram());
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
