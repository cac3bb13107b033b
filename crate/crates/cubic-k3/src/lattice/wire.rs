//! JSON wire format for lattices and sublattices.
//!
//! A lattice is `{"label": string, "gram": [[int,...],...]}` and a
//! sublattice wraps an ambient lattice with basis rows:
//! `{"ambient": {...}, "basis": [[int,...],...]}`. Round-trips are
//! bit-exact (up to whitespace and key order); entries are bounded by
//! i64 on the wire.

use super::{Lattice, Sublattice};
use crate::linalg::IntMatrix;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct LatticeWire {
    label: String,
    gram: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct SublatticeWire {
    ambient: LatticeWire,
    basis: Vec<Vec<i64>>,
}

fn matrix_to_wire(m: &IntMatrix) -> Result<Vec<Vec<i64>>, String> {
    let flat = m
        .entries_i64()
        .ok_or_else(|| "matrix entry exceeds the i64 wire range".to_string())?;
    Ok(flat
        .chunks(m.cols().max(1))
        .take(m.rows())
        .map(<[i64]>::to_vec)
        .collect())
}

fn wire_to_matrix(rows: &[Vec<i64>], square: bool) -> Result<IntMatrix, String> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|row| row.len() != c) {
        return Err("ragged rows".into());
    }
    if square && r != c {
        return Err(format!("expected a square matrix, got {r}x{c}"));
    }
    Ok(IntMatrix::from_rows_i64(rows))
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = LatticeWire {
            label: self.label().to_string(),
            gram: matrix_to_wire(self.gram()).map_err(serde::ser::Error::custom)?,
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = LatticeWire::deserialize(deserializer)?;
        let gram = wire_to_matrix(&wire.gram, true).map_err(D::Error::custom)?;
        Lattice::new(wire.label, gram).map_err(|e| D::Error::custom(e.to_string()))
    }
}

impl Serialize for Sublattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = SublatticeWire {
            ambient: LatticeWire {
                label: self.ambient().label().to_string(),
                gram: matrix_to_wire(self.ambient().gram()).map_err(serde::ser::Error::custom)?,
            },
            basis: matrix_to_wire(self.basis()).map_err(serde::ser::Error::custom)?,
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Sublattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SublatticeWire::deserialize(deserializer)?;
        let gram = wire_to_matrix(&wire.ambient.gram, true).map_err(D::Error::custom)?;
        let ambient =
            Lattice::new(wire.ambient.label, gram).map_err(|e| D::Error::custom(e.to_string()))?;
        let basis = wire_to_matrix(&wire.basis, false).map_err(D::Error::custom)?;
        Sublattice::new(ambient, basis).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::root_a2;

    #[test]
    fn lattice_round_trip_bytes() {
        let src = r#"{"label":"A2","gram":[[2,-1],[-1,2]]}"#;
        let l: Lattice = serde_json::from_str(src).unwrap();
        assert_eq!(serde_json::to_string(&l).unwrap(), src);
    }

    #[test]
    fn sublattice_round_trip() {
        let src = r#"{"ambient":{"label":"A2","gram":[[2,-1],[-1,2]]},"basis":[[2,0]]}"#;
        let s: Sublattice = serde_json::from_str(src).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), src);
    }

    #[test]
    fn rejects_garbage() {
        assert!(serde_json::from_str::<Lattice>(r#"{"label":"x","gram":[[0,1]]}"#).is_err());
        assert!(serde_json::from_str::<Lattice>(r#"{"label":"x","gram":[[0,1],[2,0]]}"#).is_err());
        assert!(serde_json::from_str::<Lattice>("[1,2]").is_err());
        let dependent =
            r#"{"ambient":{"label":"A2","gram":[[2,-1],[-1,2]]},"basis":[[1,0],[2,0]]}"#;
        assert!(serde_json::from_str::<Sublattice>(dependent).is_err());
    }

    #[test]
    fn serialize_catalog() {
        let s = serde_json::to_string(&root_a2()).unwrap();
        assert_eq!(s, r#"{"label":"A2","gram":[[2,-1],[-1,2]]}"#);
    }
}
