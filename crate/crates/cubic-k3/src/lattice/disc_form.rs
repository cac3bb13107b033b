//! Discriminant groups and finite quadratic forms.
//!
//! For a nondegenerate lattice `L` the discriminant group is `A_L =
//! L*/L`, a finite abelian group of order `|det|`. When `L` is even the
//! induced quadratic form takes values in `Q/2Z` and the bilinear pairing
//! in `Q/Z`; these finite forms drive the gluing and finiteness
//! arguments.

use super::Lattice;
use crate::linalg::{snf, RatMatrix};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// Default bound on the group order for isomorphism testing.
pub const FORM_ISO_ORDER_BOUND: u64 = 10_000;

/// A finite abelian group with a quadratic form.
///
/// `q_values` is symmetric: the diagonal holds `q` on the generators
/// (mod 2Z for even lattices, reduced into `[0, 2)`), off-diagonal
/// entries hold the bilinear pairing mod Z, reduced into `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    invariant_factors: Vec<BigInt>,
    q_values: RatMatrix,
    even: bool,
}

impl FiniteQuadraticForm {
    pub fn new(invariant_factors: Vec<BigInt>, q_values: RatMatrix, even: bool) -> Result<Self> {
        let k = invariant_factors.len();
        if q_values.rows() != k || q_values.cols() != k {
            return Err(Error::DimensionMismatch("q matrix size".into()));
        }
        for i in 0..k {
            if invariant_factors[i] < BigInt::from(2) {
                return Err(Error::InvalidInput("invariant factors must be >= 2".into()));
            }
            if i + 1 < k && !(&invariant_factors[i + 1] % &invariant_factors[i]).is_zero() {
                return Err(Error::InvalidInput(
                    "invariant factors must form a divisibility chain".into(),
                ));
            }
        }
        let f = FiniteQuadraticForm {
            invariant_factors,
            q_values,
            even,
        };
        // q(x+y) - q(x) - q(y) = 2 b(x,y) holds by construction for forms
        // induced by a lattice; re-checked here for hand-built forms.
        for i in 0..k {
            for j in 0..k {
                if i != j && f.q_values[(i, j)] != f.q_values[(j, i)] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(f)
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn q_values(&self) -> &RatMatrix {
        &self.q_values
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    pub fn group_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len()
    }

    /// q of a coordinate tuple, reduced into `[0, 2)`.
    pub fn q_of(&self, coords: &[u64]) -> BigRational {
        let k = self.num_generators();
        assert_eq!(coords.len(), k);
        let mut acc = BigRational::zero();
        for i in 0..k {
            let c = BigInt::from(coords[i]);
            acc += &self.q_values[(i, i)] * BigRational::from_integer(&c * &c);
        }
        for i in 0..k {
            for j in i + 1..k {
                let c = BigInt::from(coords[i]) * BigInt::from(coords[j]) * BigInt::from(2);
                acc += &self.q_values[(i, j)] * BigRational::from_integer(c);
            }
        }
        mod_reduce(&acc, 2)
    }

    /// Bilinear pairing of two coordinate tuples, reduced into `[0, 1)`.
    pub fn b_of(&self, x: &[u64], y: &[u64]) -> BigRational {
        let k = self.num_generators();
        let mut acc = BigRational::zero();
        for i in 0..k {
            for j in 0..k {
                let c = BigInt::from(x[i]) * BigInt::from(y[j]);
                if c.is_zero() {
                    continue;
                }
                acc += &self.q_values[(i, j)] * BigRational::from_integer(c);
            }
        }
        mod_reduce(&acc, 1)
    }

    /// All group elements as coordinate tuples; only valid for small
    /// groups (callers bound the order first).
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let factors: Vec<u64> = self
            .invariant_factors
            .iter()
            .map(|f| {
                f.to_u64()
                    .expect("invariant factor fits u64 under the order bound")
            })
            .collect();
        let mut out = vec![vec![]];
        for &f in &factors {
            let mut next = Vec::with_capacity(out.len() * f as usize);
            for prefix in &out {
                for c in 0..f {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// The same group with `q` and `b` negated, as induced by rescaling
    /// the source lattice by -1.
    pub fn negate(&self) -> FiniteQuadraticForm {
        let k = self.num_generators();
        let mut q = RatMatrix::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                let neg = -self.q_values[(i, j)].clone();
                q[(i, j)] = mod_reduce(&neg, if i == j { 2 } else { 1 });
            }
        }
        FiniteQuadraticForm {
            invariant_factors: self.invariant_factors.clone(),
            q_values: q,
            even: self.even,
        }
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let factors = &self.invariant_factors;
        x.iter()
            .zip(y)
            .zip(factors)
            .map(|((a, b), f)| {
                let f = f.to_u64().unwrap();
                (a + b) % f
            })
            .collect()
    }

    pub fn is_zero_element(&self, x: &[u64]) -> bool {
        x.iter().all(|&c| c == 0)
    }
}

impl std::fmt::Display for FiniteQuadraticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.invariant_factors.is_empty() {
            write!(f, "trivial")?;
        } else {
            let parts: Vec<String> = self
                .invariant_factors
                .iter()
                .map(|d| format!("Z/{d}"))
                .collect();
            write!(f, "{}", parts.join(" (+) "))?;
        }
        let qs: Vec<String> = (0..self.num_generators())
            .map(|i| format_rational(&self.q_values[(i, i)]))
            .collect();
        write!(f, ", q=[{}]", qs.join(", "))
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reduce a rational into `[0, modulus)`.
pub(crate) fn mod_reduce(x: &BigRational, modulus: i64) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(modulus));
    let q = (x / &m).floor();
    x - q * m
}

/// Discriminant group of a lattice together with explicit generators.
///
/// Generators are rational vectors in the dual lattice, expressed in the
/// coordinates of the lattice basis.
#[derive(Debug, Clone)]
pub struct DiscGroup {
    pub form: FiniteQuadraticForm,
    /// Rows are the dual-vector generators, one per invariant factor.
    pub generators: RatMatrix,
}

/// Discriminant group with its finite quadratic form.
///
/// Generators come out of the Smith normal form `u * G * v = D`: the class
/// of `(row i of u)/d_i` generates the `Z/d_i` summand of `L*/L`.
pub fn disc_group(l: &Lattice) -> Result<DiscGroup> {
    let det = l.det();
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let n = l.rank();
    let (d, u, _v) = snf(l.gram());
    let mut factors = Vec::new();
    let mut gens: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..n {
        let di = d[(i, i)].clone();
        if di > BigInt::one() {
            factors.push(di.clone());
            let row: Vec<BigRational> = u
                .row(i)
                .iter()
                .map(|e| BigRational::new(e.clone(), di.clone()))
                .collect();
            gens.push(row);
        }
    }
    let k = factors.len();
    let gen_matrix = RatMatrix::new(k, n, gens.into_iter().flatten().collect());
    let even = l.is_even();
    let gram_rat = l.gram().to_rational();
    let pair = gen_matrix.mul(&gram_rat).mul(&transpose_rat(&gen_matrix));
    let mut q_values = RatMatrix::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            let reduced = if i == j {
                // mod 2Z for even lattices, mod Z otherwise (flagged)
                mod_reduce(&pair[(i, i)], if even { 2 } else { 1 })
            } else {
                mod_reduce(&pair[(i, j)], 1)
            };
            q_values[(i, j)] = reduced;
        }
    }
    let form = FiniteQuadraticForm::new(factors, q_values, even)?;
    debug_assert_eq!(form.group_order(), det.abs(), "group order equals |det|");
    Ok(DiscGroup {
        form,
        generators: gen_matrix,
    })
}

/// The finite quadratic form on the discriminant group.
pub fn disc_group_form(l: &Lattice) -> Result<FiniteQuadraticForm> {
    Ok(disc_group(l)?.form)
}

fn transpose_rat(m: &RatMatrix) -> RatMatrix {
    let mut t = RatMatrix::zero(m.cols(), m.rows());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            t[(j, i)] = m[(i, j)].clone();
        }
    }
    t
}

/// Decide whether two finite quadratic forms are isomorphic, by
/// backtracking over generator images. Canonical normal forms are not
/// attempted; the groups here have order at most a few thousand.
pub fn finite_form_isomorphic(f1: &FiniteQuadraticForm, f2: &FiniteQuadraticForm) -> Result<bool> {
    finite_form_isomorphic_bounded(f1, f2, FORM_ISO_ORDER_BOUND)
}

pub fn finite_form_isomorphic_bounded(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
    bound: u64,
) -> Result<bool> {
    if f1.invariant_factors() != f2.invariant_factors() {
        return Ok(false);
    }
    if f1.is_even() != f2.is_even() {
        return Ok(false);
    }
    let order = f1.group_order();
    match order.to_u64() {
        Some(o) if o <= bound => {}
        _ => {
            return Err(Error::FiniteFormUndecided(
                order.to_u64().unwrap_or(u64::MAX),
                bound,
            ))
        }
    }
    let k = f1.num_generators();
    if k == 0 {
        return Ok(true);
    }
    let elements = f2.elements();
    let mut images: Vec<Vec<u64>> = Vec::with_capacity(k);
    Ok(backtrack(f1, f2, &elements, &mut images))
}

fn backtrack(
    f1: &FiniteQuadraticForm,
    f2: &FiniteQuadraticForm,
    elements: &[Vec<u64>],
    images: &mut Vec<Vec<u64>>,
) -> bool {
    let k = f1.num_generators();
    let i = images.len();
    if i == k {
        return generates_all(f2, images);
    }
    let di = f1.invariant_factors()[i].to_u64().unwrap();
    let gi: Vec<u64> = (0..k).map(|j| u64::from(j == i)).collect();
    let q_target = f1.q_of(&gi);
    'cand: for h in elements {
        // order of h must divide d_i (a homomorphism needs d_i * h = 0)
        for (c, f) in h.iter().zip(f2.invariant_factors()) {
            let f = f.to_u64().unwrap();
            if !(c * di).is_multiple_of(f) {
                continue 'cand;
            }
        }
        if f2.q_of(h) != q_target {
            continue;
        }
        for (j, prev) in images.iter().enumerate() {
            let gj: Vec<u64> = (0..k).map(|t| u64::from(t == j)).collect();
            if f2.b_of(h, prev) != f1.b_of(&gi, &gj) {
                continue 'cand;
            }
        }
        images.push(h.clone());
        if backtrack(f1, f2, elements, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Do the chosen images generate the whole group?
fn generates_all(f: &FiniteQuadraticForm, images: &[Vec<u64>]) -> bool {
    let order = f.group_order().to_u64().unwrap();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let zero = vec![0u64; f.num_generators()];
    seen.insert(zero);
    let mut frontier: Vec<Vec<u64>> = seen.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in images {
            let y = f.add(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64 == order
}
