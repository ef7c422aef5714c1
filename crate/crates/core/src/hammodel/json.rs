//! JSON model documents.
//!
//! ```json
//! {
//!   "name": "my_model",
//!   "d": 2,
//!   "n": 4,
//!   "terms": [
//!     {"exponents": [1, 0], "matrix": "XI"},
//!     {"exponents": [0, 1], "matrix": "YI"},
//!     {"exponents": [0, 0], "matrix": [[1,0],[0,0],[0,0],[0,0], ...]}
//!   ],
//!   "mass": 1.0,
//!   "flavour_qubits": 1
//! }
//! ```
//!
//! A matrix is either a Pauli expression (`"XZ"`, `"-i·ZY"`, `"0.5 * ZI"`) or
//! its explicit row-major entries as `[re, im]` pairs. Degree-zero terms are
//! the mass term.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::model::{HamiltonianModel, Term};
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, PauliString};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelDocument {
    pub name: String,
    pub d: usize,
    pub n: usize,
    pub terms: Vec<TermDocument>,
    #[serde(default = "default_mass")]
    pub mass: f64,
    #[serde(default)]
    pub flavour_qubits: usize,
}

fn default_mass() -> f64 {
    1.0
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermDocument {
    pub exponents: Vec<u32>,
    pub matrix: MatrixDocument,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixDocument {
    Pauli(String),
    Entries(Vec<[f64; 2]>),
}

impl MatrixDocument {
    fn to_matrix(&self, n: usize) -> Result<ComplexMatrix> {
        let m = match self {
            MatrixDocument::Pauli(expr) => parse_scaled_pauli(expr)?,
            MatrixDocument::Entries(entries) => ComplexMatrix::new(
                n,
                entries
                    .iter()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect(),
            )?,
        };
        if m.side() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.side(),
            });
        }
        Ok(m)
    }
}

/// `"<real> * <pauli>"` or a bare Pauli expression.
fn parse_scaled_pauli(expr: &str) -> Result<ComplexMatrix> {
    if let Some((lhs, rhs)) = expr.split_once('*') {
        if let Ok(scale) = lhs.trim().parse::<f64>() {
            return Ok(rhs.parse::<PauliString>()?.to_matrix().scale_real(scale));
        }
    }
    Ok(expr.parse::<PauliString>()?.to_matrix())
}

impl ModelDocument {
    pub fn into_model(self) -> Result<HamiltonianModel> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term::new(
                    Monomial::new(t.exponents.clone()),
                    t.matrix.to_matrix(self.n)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let model =
            HamiltonianModel::new(self.name, self.d, terms, self.mass, self.flavour_qubits)?;
        if model.side() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: model.side(),
            });
        }
        Ok(model)
    }
}

pub fn model_from_json(text: &str) -> Result<HamiltonianModel> {
    serde_json::from_str::<ModelDocument>(text)?.into_model()
}

pub fn load_model(path: &Path) -> Result<HamiltonianModel> {
    model_from_json(&std::fs::read_to_string(path)?)
}
