//! Genus-level invariant comparison of lattices.

use super::disc_form::{disc_group_form, finite_form_isomorphic};
use super::Lattice;
use crate::Result;

/// Outcome of comparing (rank, signature, parity, discriminant form).
///
/// `Match` asserts agreement of genus-level invariants only; for
/// indefinite lattices of the shapes used here that pins the isometry
/// class in practice, but the comparison is necessary, not sufficient,
/// in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantsComparison {
    Match,
    Differ(&'static str),
}

pub fn invariants_compare(a: &Lattice, b: &Lattice) -> Result<InvariantsComparison> {
    if a.rank() != b.rank() {
        return Ok(InvariantsComparison::Differ("rank"));
    }
    let sa = a.signature()?;
    let sb = b.signature()?;
    if (sa.positive, sa.negative, sa.zero) != (sb.positive, sb.negative, sb.zero) {
        return Ok(InvariantsComparison::Differ("signature"));
    }
    if a.is_even() != b.is_even() {
        return Ok(InvariantsComparison::Differ("parity"));
    }
    let fa = disc_group_form(a)?;
    let fb = disc_group_form(b)?;
    if !finite_form_isomorphic(&fa, &fb)? {
        return Ok(InvariantsComparison::Differ("disc_form"));
    }
    Ok(InvariantsComparison::Match)
}
