//! Even overlattices via isotropic glue subgroups.
//!
//! Even overlattices `L` of an even lattice `a` with `[L:a] = m`
//! correspond to isotropic subgroups of order `m` of the discriminant
//! form: the overlattice is the preimage of the subgroup under
//! `a* -> a*/a`, and `q = 0` on the subgroup is exactly integrality plus
//! evenness upstairs.

use super::disc_form::disc_group;
use super::Lattice;
use crate::linalg::{hnf, IntMatrix, RatMatrix};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// One even overlattice, described in a new integral basis.
#[derive(Debug, Clone)]
pub struct Overlattice {
    /// The overlattice with its Gram matrix on the new basis.
    pub lattice: Lattice,
    /// Index over the input lattice.
    pub index: BigInt,
    /// The glue subgroup: nonzero element coordinates in the input's
    /// discriminant group generators.
    pub glue: Vec<Vec<u64>>,
    /// Basis of the overlattice in rational coordinates of the input basis.
    pub basis: RatMatrix,
}

/// All even overlattices of index at most `max_index`, one per isotropic
/// subgroup of the discriminant form. Results whose underlying lattices
/// happen to be isometric are not merged.
pub fn enumerate_even_overlattices(a: &Lattice, max_index: u64) -> Result<Vec<Overlattice>> {
    if !a.is_even() {
        return Err(Error::InvalidInput(
            "overlattice gluing needs an even lattice".into(),
        ));
    }
    let dg = disc_group(a)?;
    let form = &dg.form;
    let order = form
        .group_order()
        .to_u64()
        .ok_or(Error::FiniteFormUndecided(u64::MAX, u64::MAX))?;

    // Every element of an isotropic subgroup is itself isotropic, so the
    // closure search can stay inside the isotropic locus.
    let isotropic: Vec<Vec<u64>> = form
        .elements()
        .into_iter()
        .filter(|x| !form.is_zero_element(x) && form.q_of(x).is_zero())
        .collect();

    let zero = vec![0u64; form.num_generators()];
    let trivial: BTreeSet<Vec<u64>> = [zero.clone()].into();
    let mut subgroups: BTreeSet<BTreeSet<Vec<u64>>> = [trivial.clone()].into();
    let mut frontier: Vec<BTreeSet<Vec<u64>>> = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in &isotropic {
            if h.contains(x) {
                continue;
            }
            let Some(closure) = close_subgroup(form, &h, x, max_index.min(order)) else {
                continue;
            };
            if closure.iter().any(|y| !form.q_of(y).is_zero()) {
                continue;
            }
            if subgroups.insert(closure.clone()) {
                frontier.push(closure);
            }
        }
    }

    let mut out = Vec::new();
    for h in subgroups {
        out.push(build_overlattice(a, &dg.generators, &h)?);
    }
    out.sort_by_key(|x| (x.index.clone(), x.glue.clone()));
    Ok(out)
}

/// Subgroup generated by `h` and `x`, or None once it exceeds the bound.
fn close_subgroup(
    form: &super::FiniteQuadraticForm,
    h: &BTreeSet<Vec<u64>>,
    x: &[u64],
    bound: u64,
) -> Option<BTreeSet<Vec<u64>>> {
    let mut set = h.clone();
    let mut frontier: Vec<Vec<u64>> = vec![x.to_vec()];
    set.insert(x.to_vec());
    while let Some(y) = frontier.pop() {
        if set.len() as u64 > bound {
            return None;
        }
        let gens: Vec<Vec<u64>> = set.iter().cloned().collect();
        for g in gens {
            let z = form.add(&y, &g);
            if set.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    if set.len() as u64 > bound {
        return None;
    }
    Some(set)
}

fn build_overlattice(
    a: &Lattice,
    generators: &RatMatrix,
    h: &BTreeSet<Vec<u64>>,
) -> Result<Overlattice> {
    let n = a.rank();
    // Rows: the standard basis plus a rational lift of every glue element.
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(u8::from(i == j))))
                .collect()
        })
        .collect();
    for elem in h {
        if elem.iter().all(|&c| c == 0) {
            continue;
        }
        let mut lift = vec![BigRational::zero(); n];
        for (i, &c) in elem.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 0..n {
                lift[j] += &generators[(i, j)] * BigRational::from_integer(BigInt::from(c));
            }
        }
        rows.push(lift);
    }
    // Common denominator, integer HNF, scale back.
    let mut denom = BigInt::one();
    for row in &rows {
        for e in row {
            denom = denom.lcm(e.denom());
        }
    }
    let scaled: Vec<BigInt> = rows
        .iter()
        .flat_map(|row| {
            row.iter()
                .map(|e| (e * BigRational::from_integer(denom.clone())).to_integer())
        })
        .collect();
    let stacked = IntMatrix::new(rows.len(), n, scaled);
    let (hn, _) = hnf(&stacked);
    let basis_rows: Vec<Vec<BigRational>> = (0..hn.rows())
        .filter(|&i| hn.row(i).iter().any(|e| !e.is_zero()))
        .map(|i| {
            hn.row(i)
                .iter()
                .map(|e| BigRational::new(e.clone(), denom.clone()))
                .collect()
        })
        .collect();
    assert_eq!(basis_rows.len(), n, "overlattice keeps full rank");
    let basis = RatMatrix::new(n, n, basis_rows.into_iter().flatten().collect());

    // Gram on the new basis must be integral and even by isotropy.
    let gram_rat = basis.mul(&a.gram().to_rational()).mul(&transpose(&basis));
    assert!(gram_rat.is_integral(), "glue subgroup was not isotropic");
    let gram = gram_rat.to_integer();
    let lattice = Lattice::new(format!("{}^glue", a.label()), gram)?;
    assert!(
        lattice.is_even(),
        "glue subgroup produced an odd overlattice"
    );

    let index = BigInt::from(h.len() as u64);
    // disc ratio check: disc(a) = disc(L) * index^2
    let da = a.det().abs();
    let dl = lattice.det().abs();
    assert_eq!(
        da,
        &dl * (&index * &index),
        "index does not match disc ratio"
    );

    let glue: Vec<Vec<u64>> = h
        .iter()
        .filter(|e| e.iter().any(|&c| c != 0))
        .cloned()
        .collect();
    Ok(Overlattice {
        lattice,
        index,
        glue,
        basis,
    })
}

fn transpose(m: &RatMatrix) -> RatMatrix {
    let mut t = RatMatrix::zero(m.cols(), m.rows());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            t[(j, i)] = m[(i, j)].clone();
        }
    }
    t
}
