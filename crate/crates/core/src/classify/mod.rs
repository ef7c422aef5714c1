//! Whole-model audits, the two-flavour operator table and perturbation
//! grading.
//!
//! Everything reported here is re-verified against the defining equations at
//! random momenta before it is returned, so a report never lists an operator
//! that fails its own equation without saying so.

mod audit;
mod perturb;
mod render;
mod table;

pub use audit::{
    audit, audit_with, rotation_summary, AuditEntry, RenderedRepresentative, RotationSummary,
    SolutionSummary, SymmetryReport,
};
pub use perturb::{
    classify_perturbation, classify_perturbation_with, enumerate_perturbations,
    enumerate_perturbations_with, verdicts_markdown, Perturbation, PerturbationVerdict,
    RepresentativeVerdict, LAMBDAS,
};
pub use render::{pauli_expression, tensor_notation};
pub use table::{operator_table, operator_table_with, OperatorTable, TableCell};

use crate::matcore::DEFAULT_TOL;

/// Settings for the randomised verification passes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 42,
            samples: 16,
            tol: DEFAULT_TOL,
        }
    }
}
