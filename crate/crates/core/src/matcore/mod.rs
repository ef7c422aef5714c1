//! Dense complex matrix algebra and the Pauli-string operator basis.

mod linalg;
mod matrix;
mod pauli;

pub use linalg::{expm_i_hermitian, hermitian_eigen, inner, nullspace, vector_norm};
pub use matrix::{is_unitary, kron, unitarity_defect, ComplexMatrix, ComplexVector, I, ONE, ZERO};
pub use pauli::{
    all_factor_lists, pauli_decompose, pauli_reconstruct, qubit_count, Pauli, PauliString, Phase,
};

/// Default tolerance for residual and rank decisions.
pub const DEFAULT_TOL: f64 = 1e-10;
