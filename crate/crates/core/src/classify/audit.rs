use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use super::render::pauli_expression;
use super::CheckOptions;
use crate::hammodel::{random_momenta, HamiltonianModel};
use crate::matcore::{ComplexMatrix, PauliString};
use crate::symsolve::{
    defining_residual, relation_check, solve_with_tol, RelationReport, RelationStatus, SquareSign,
    SymmetryKind, SymmetryQuery, SymmetrySolution,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RenderedRepresentative {
    pub string: PauliString,
    pub square: SquareSign,
    /// Largest defining-equation residual over the sampled momenta.
    pub max_residual: f64,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionSummary {
    pub exists: bool,
    pub nullity: usize,
    pub representatives: Vec<RenderedRepresentative>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditEntry {
    pub symmetry: SymmetryKind,
    pub antiunitary: bool,
    pub massive: SolutionSummary,
    pub massless: SolutionSummary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RotationSummary {
    pub spin_z: String,
    /// `max |exp(2 pi i S_z) + I|`.
    pub full_turn_defect: f64,
    pub full_turn_is_minus_identity: bool,
    /// Largest finite-rotation invariance residual over the sampled angles and momenta.
    pub max_residual: f64,
    pub samples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub model: String,
    pub dim: usize,
    pub side: usize,
    pub mass: f64,
    pub entries: Vec<AuditEntry>,
    pub relations: RelationReport,
    pub rotation: Option<RotationSummary>,
    pub commentary: Vec<String>,
}

impl SymmetryReport {
    /// Labels of the symmetries with at least one representative.
    pub fn surviving(&self, massless: bool) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| {
                if massless {
                    e.massless.exists
                } else {
                    e.massive.exists
                }
            })
            .map(|e| e.symmetry.label().to_string())
            .collect()
    }

    /// Every representative re-verified, every relation that ran holds, and
    /// the full turn is `-I` where rotations apply.
    pub fn all_verified(&self) -> bool {
        let reps_ok = self.entries.iter().all(|e| {
            e.massive
                .representatives
                .iter()
                .chain(&e.massless.representatives)
                .all(|r| r.verified)
        });
        let rot_ok = self
            .rotation
            .as_ref()
            .is_none_or(|r| r.full_turn_is_minus_identity);
        reps_ok && self.relations.all_hold() && rot_ok
    }

    pub fn entry(&self, kind: SymmetryKind) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.symmetry == kind)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Symmetry audit: {}\n", self.model);
        let _ = writeln!(
            out,
            "d = {}, n = {}, m = {}\n",
            self.dim, self.side, self.mass
        );
        let _ = writeln!(
            out,
            "| symmetry | setting | exists | nullity | representatives (square) |"
        );
        let _ = writeln!(out, "|---|---|---|---|---|");
        for e in &self.entries {
            for (setting, s) in [("massive", &e.massive), ("massless", &e.massless)] {
                let reps = if s.representatives.is_empty() {
                    "none".to_string()
                } else {
                    s.representatives
                        .iter()
                        .map(|r| format!("{} ({})", r.string, r.square.label()))
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    e.symmetry, setting, s.exists, s.nullity, reps
                );
            }
        }
        let _ = writeln!(out, "\n## Relations\n");
        for r in &self.relations.relations {
            let status = match &r.status {
                RelationStatus::Holds { scalar, residual } => {
                    format!(
                        "holds, scalar {:+.3}{:+.3}i, residual {residual:.1e}",
                        scalar[0], scalar[1]
                    )
                }
                RelationStatus::Fails { residual } => format!("FAILS, residual {residual:.1e}"),
                RelationStatus::Skipped { reason } => format!("skipped: {reason}"),
            };
            let _ = writeln!(out, "- {}: {status}", r.relation);
        }
        if let Some(rot) = &self.rotation {
            let _ = writeln!(out, "\n## Rotations\n");
            let _ = writeln!(out, "- S_z = {}", rot.spin_z);
            let _ = writeln!(
                out,
                "- exp(2πi S_z) = -I: {} (defect {:.1e})",
                rot.full_turn_is_minus_identity, rot.full_turn_defect
            );
            let _ = writeln!(
                out,
                "- finite-rotation residual: {:.1e} over {} samples",
                rot.max_residual, rot.samples
            );
        }
        if !self.commentary.is_empty() {
            let _ = writeln!(out, "\n## Notes\n");
            for c in &self.commentary {
                let _ = writeln!(out, "- {c}");
            }
        }
        out
    }
}

fn summarise(
    model: &HamiltonianModel,
    sol: &SymmetrySolution,
    momenta: &[Vec<f64>],
    tol: f64,
) -> SolutionSummary {
    let representatives = sol
        .representatives
        .iter()
        .map(|r| {
            let d = r.matrix();
            let max_residual = momenta
                .iter()
                .map(|p| defining_residual(model, &sol.query, &d, p, None).unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max);
            RenderedRepresentative {
                string: r.string.clone(),
                square: r.square,
                max_residual,
                verified: max_residual <= tol,
            }
        })
        .collect();
    SolutionSummary {
        exists: sol.exists,
        nullity: sol.nullity,
        representatives,
    }
}

pub fn rotation_summary(model: &HamiltonianModel, opts: &CheckOptions) -> Option<RotationSummary> {
    let sz = model.spin_z().ok()?;
    let full = model.full_turn().ok()?;
    let minus_id = ComplexMatrix::identity(model.side()).scale_real(-1.0);
    let full_turn_defect = (&full - &minus_id).max_abs();
    let momenta = random_momenta(model.dim(), opts.samples, opts.seed);
    let angles = random_momenta(1, opts.samples, opts.seed.wrapping_add(1));
    let max_residual = momenta
        .iter()
        .zip(&angles)
        .map(|(p, a)| {
            model
                .rotation_check(a[0] * PI, p)
                .map(|c| c.residual)
                .unwrap_or(f64::INFINITY)
        })
        .fold(0.0, f64::max);
    Some(RotationSummary {
        spin_z: pauli_expression(&sz),
        full_turn_defect,
        full_turn_is_minus_identity: full_turn_defect <= opts.tol,
        max_residual,
        samples: opts.samples,
    })
}

/// Runs every standard query at both mass settings, the relation checks and
/// the rotation checks.
pub fn audit_with(model: &HamiltonianModel, opts: &CheckOptions) -> SymmetryReport {
    let momenta = random_momenta(model.dim(), opts.samples, opts.seed);
    let massive_model = if model.is_massless() {
        model.with_mass(1.0).expect("unit mass is valid")
    } else {
        model.clone()
    };
    let entries = SymmetryKind::standard_set(model.dim())
        .into_iter()
        .map(|kind| {
            let run = |massless: bool| {
                let q = SymmetryQuery::new(kind, model.dim(), massless).expect("standard query");
                let sol = solve_with_tol(&massive_model, &q, opts.tol);
                summarise(&massive_model, &sol, &momenta, opts.tol)
            };
            AuditEntry {
                symmetry: kind,
                antiunitary: kind.is_antiunitary(),
                massive: run(false),
                massless: run(true),
            }
        })
        .collect();
    let mut commentary = Vec::new();
    if model.flavour_qubits() > 0 {
        commentary.push(
            "The product of the two representatives of a flavour-coupling symmetry is \
             diagonal in flavour with opposite signs on the two flavours; when the \
             flavours cannot be told apart physically, the pair does not describe two \
             distinct symmetries."
                .to_string(),
        );
    }
    if model.dim() >= 2 {
        commentary.push(
            "Only the spin factor of a 2π rotation is checked; the orbital factor \
             exp(2πi L_z) is +1 since L_z has integer eigenvalues."
                .to_string(),
        );
    }
    SymmetryReport {
        model: model.name().to_string(),
        dim: model.dim(),
        side: model.side(),
        mass: massive_model.mass(),
        entries,
        relations: relation_check(&massive_model),
        rotation: rotation_summary(&massive_model, opts),
        commentary,
    }
}

pub fn audit(model: &HamiltonianModel) -> SymmetryReport {
    audit_with(model, &CheckOptions::default())
}
