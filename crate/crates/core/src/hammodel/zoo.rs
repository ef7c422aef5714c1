//! Built-in Dirac models.

use super::model::{HamiltonianModel, Term};
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::matcore::PauliString;

pub const ZOO_NAMES: [&str; 4] = ["dirac_1p1", "dirac_2p1", "dirac_2f_2p1", "dirac_3p1"];

struct Recipe {
    dim: usize,
    velocities: &'static [&'static str],
    beta: &'static str,
    flavour_qubits: usize,
}

fn recipe(name: &str) -> Option<Recipe> {
    let r = match name {
        // v = sigma_x, beta = sigma_z
        "dirac_1p1" => Recipe {
            dim: 1,
            velocities: &["X"],
            beta: "Z",
            flavour_qubits: 0,
        },
        // v = (sigma_x, sigma_y), beta = sigma_z
        "dirac_2p1" => Recipe {
            dim: 2,
            velocities: &["X", "Y"],
            beta: "Z",
            flavour_qubits: 0,
        },
        // Dirac factor first, flavour (tau) factor last.
        "dirac_2f_2p1" => Recipe {
            dim: 2,
            velocities: &["XI", "YI"],
            beta: "ZZ",
            flavour_qubits: 1,
        },
        // Standard representation: alpha_j = sigma_x ⊗ sigma_j, beta = sigma_z ⊗ 1;
        // only v_2 is imaginary.
        "dirac_3p1" => Recipe {
            dim: 3,
            velocities: &["XX", "XY", "XZ"],
            beta: "ZI",
            flavour_qubits: 0,
        },
        _ => return None,
    };
    Some(r)
}

/// A built-in model with mass 1.
pub fn zoo(name: &str) -> Result<HamiltonianModel> {
    let recipe = recipe(name).ok_or_else(|| Error::UnknownModel {
        name: name.to_string(),
        valid: ZOO_NAMES.iter().map(|s| s.to_string()).collect(),
    })?;
    let matrix = |s: &str| {
        s.parse::<PauliString>()
            .expect("zoo Pauli literal")
            .to_matrix()
    };
    let mut terms: Vec<Term> = recipe
        .velocities
        .iter()
        .enumerate()
        .map(|(j, v)| Term::new(Monomial::linear(recipe.dim, j), matrix(v)))
        .collect();
    terms.push(Term::new(
        Monomial::constant(recipe.dim),
        matrix(recipe.beta),
    ));
    HamiltonianModel::new(name, recipe.dim, terms, 1.0, recipe.flavour_qubits)
}
