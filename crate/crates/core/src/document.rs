//! The algebra file format.
//!
//! ```json
//! {
//!   "name": "heisenberg3",
//!   "dim": 3,
//!   "basis_names": ["x", "y", "z"],
//!   "structure_constants": [
//!     { "i": 0, "j": 1, "coeffs": { "2": "1" } }
//!   ]
//! }
//! ```
//!
//! Entry `{i, j, coeffs}` with `i < j` gives `[e_i, e_j] = Σ_k coeffs[k] e_k`.
//! Coefficients are exact rational strings `p` or `p/q` (`q > 0`). Omitted
//! pairs and omitted `k` are zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{LieAlgebra, MAX_DIM};
use crate::error::{Error, Result};
use crate::rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub structure_constants: Vec<StructureEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

impl AlgebraDocument {
    /// Syntax only; see [`Self::to_algebra`] for validation.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    /// Canonical document of an algebra: entries sorted by `(i, j)`, zero
    /// coefficients omitted, rationals in lowest terms.
    pub fn from_algebra(name: &str, g: &LieAlgebra) -> Self {
        let structure_constants = g
            .structure_constants()
            .iter()
            .map(|(&(i, j), v)| StructureEntry {
                i,
                j,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k, rational::format(c)))
                    .collect(),
            })
            .collect();
        Self {
            name: name.to_string(),
            dim: g.dim(),
            basis_names: g.basis_names().to_vec(),
            structure_constants,
        }
    }

    /// Validates indices, rationals and the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let dim = self.dim;
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        if self.basis_names.len() != dim {
            return Err(Error::BasisNameCount {
                expected: dim,
                found: self.basis_names.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.structure_constants.len());
        for e in &self.structure_constants {
            for idx in [e.i, e.j] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if e.i >= e.j {
                return Err(Error::UnorderedPair { i: e.i, j: e.j });
            }
            let mut v = vec![rational::zero(); dim];
            for (&k, text) in &e.coeffs {
                if k >= dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
                v[k] = rational::parse(text)?;
            }
            entries.push(((e.i, e.j), v));
        }
        LieAlgebra::checked(self.basis_names.clone(), entries)
    }

    /// Pretty JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Parses and validates a document.
pub fn parse_algebra(text: &str) -> Result<(String, LieAlgebra)> {
    let doc = AlgebraDocument::parse(text)?;
    let g = doc.to_algebra()?;
    Ok((doc.name, g))
}

pub fn emit_algebra(name: &str, g: &LieAlgebra) -> String {
    AlgebraDocument::from_algebra(name, g).emit()
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    const H3: &str = r#"{
  "name": "heisenberg3",
  "dim": 3,
  "basis_names": ["x", "y", "z"],
  "structure_constants": [ { "i": 0, "j": 1, "coeffs": { "2": "1" } } ]
}"#;

    #[test]
    fn heisenberg_document() {
        let (name, g) = parse_algebra(H3).unwrap();
        assert_eq!(name, "heisenberg3");
        assert_eq!(g, registry::heisenberg3());
        assert_eq!(g.center().dim(), 1);
    }

    #[test]
    fn empty_constants_is_abelian() {
        let text = r#"{"name": "a4", "dim": 4, "basis_names": ["a","b","c","d"], "structure_constants": []}"#;
        let (_, g) = parse_algebra(text).unwrap();
        assert!(g.structure_constants().is_empty());
        assert_eq!(g.center().dim(), 4);
    }

    #[test]
    fn jacobi_violation_reported_with_triple() {
        let text = r#"{"name": "bad", "dim": 3, "basis_names": ["x","y","z"],
            "structure_constants": [
                {"i": 0, "j": 1, "coeffs": {"2": "1"}},
                {"i": 0, "j": 2, "coeffs": {"0": "1"}}
            ]}"#;
        match parse_algebra(text).unwrap_err() {
            Error::JacobiViolation { triple, .. } => assert_eq!(triple, (0, 1, 2)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn distinct_error_kinds() {
        let syntax = parse_algebra("{\n  \"name\": \"x\",\n  \"dim\": ,\n}").unwrap_err();
        assert!(matches!(syntax, Error::Syntax { line: 3, .. }), "{syntax:?}");
        let range = r#"{"name":"x","dim":2,"basis_names":["a","b"],"structure_constants":[{"i":0,"j":2,"coeffs":{}}]}"#;
        assert_eq!(parse_algebra(range).unwrap_err(), Error::IndexOutOfRange { index: 2, dim: 2 });
        let order = r#"{"name":"x","dim":2,"basis_names":["a","b"],"structure_constants":[{"i":1,"j":1,"coeffs":{}}]}"#;
        assert_eq!(parse_algebra(order).unwrap_err(), Error::UnorderedPair { i: 1, j: 1 });
        let coeff = r#"{"name":"x","dim":2,"basis_names":["a","b"],"structure_constants":[{"i":0,"j":1,"coeffs":{"1":"1/0"}}]}"#;
        assert!(matches!(parse_algebra(coeff).unwrap_err(), Error::Rational(_)));
        let names = r#"{"name":"x","dim":2,"basis_names":["a"],"structure_constants":[]}"#;
        assert!(matches!(parse_algebra(names).unwrap_err(), Error::BasisNameCount { .. }));
    }

    #[test]
    fn canonical_emit_roundtrips() {
        for (name, g) in registry::all() {
            let text = emit_algebra(&name, &g);
            let (n2, g2) = parse_algebra(&text).unwrap();
            assert_eq!((n2.as_str(), &g2), (name.as_str(), &g));
            assert_eq!(emit_algebra(&n2, &g2), text);
        }
    }
}
