use std::fmt::Write as _;

use serde::Serialize;

use super::render::pauli_expression;
use super::CheckOptions;
use crate::error::{Error, Result};
use crate::hammodel::{random_momenta, HamiltonianModel, Monomial, Term};
use crate::matcore::{all_factor_lists, ComplexMatrix, PauliString};
use crate::symsolve::{
    defining_residual, label_particle_hole, solve_with_tol, Pair, Representative, SymmetryKind,
    SymmetryQuery, SymmetrySolution,
};

/// Generic values of the perturbation strength.
pub const LAMBDAS: [f64; 2] = [0.37, 1.0];

/// A candidate term `monomial(p) * matrix` added to a Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub struct Perturbation {
    pub monomial: Monomial,
    pub matrix: ComplexMatrix,
    pub label: String,
}

impl Perturbation {
    pub fn from_pauli(monomial: Monomial, string: &PauliString) -> Self {
        Perturbation {
            label: string.to_string(),
            matrix: string.to_matrix(),
            monomial,
        }
    }

    pub fn from_matrix(monomial: Monomial, matrix: ComplexMatrix) -> Self {
        Perturbation {
            label: pauli_expression(&matrix),
            matrix,
            monomial,
        }
    }

    fn term(&self) -> Term {
        Term::new(self.monomial.clone(), self.matrix.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepresentativeVerdict {
    pub symmetry: SymmetryKind,
    /// `+` or `-` for the two members of a duplicated symmetry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub representative: PauliString,
    pub preserves: bool,
    /// Largest residual at each of [`LAMBDAS`].
    pub residuals: [f64; 2],
    pub lambda_independent: bool,
}

impl RepresentativeVerdict {
    pub fn column(&self) -> String {
        match &self.branch {
            Some(b) => format!("{}{b}", self.symmetry),
            None => self.symmetry.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerturbationVerdict {
    pub term: String,
    pub monomial: Monomial,
    pub verdicts: Vec<RepresentativeVerdict>,
    /// Symmetries with at least one preserved representative.
    pub surviving: Vec<String>,
}

impl PerturbationVerdict {
    pub fn verdict(&self, kind: SymmetryKind) -> impl Iterator<Item = &RepresentativeVerdict> {
        self.verdicts.iter().filter(move |v| v.symmetry == kind)
    }

    pub fn preserves_all(&self, kind: SymmetryKind) -> bool {
        self.verdict(kind).all(|v| v.preserves)
    }

    /// True when `kind` has representatives and all of them break.
    pub fn breaks_all(&self, kind: SymmetryKind) -> bool {
        let mut any = false;
        for v in self.verdict(kind) {
            if v.preserves {
                return false;
            }
            any = true;
        }
        any
    }
}

/// Markdown table with one row per term and one column per representative.
pub fn verdicts_markdown(model: &str, verdicts: &[PerturbationVerdict]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Perturbations of {model}\n");
    let Some(first) = verdicts.first() else {
        let _ = writeln!(out, "no symmetries to test");
        return out;
    };
    let columns: Vec<String> = first.verdicts.iter().map(|v| v.column()).collect();
    let _ = writeln!(out, "| term | {} | surviving |", columns.join(" | "));
    let _ = writeln!(out, "|---|{}---|", "---|".repeat(columns.len()));
    for v in verdicts {
        let flags: Vec<&str> = v
            .verdicts
            .iter()
            .map(|r| if r.preserves { "preserves" } else { "breaks" })
            .collect();
        let _ = writeln!(
            out,
            "| {}·{} | {} | {} |",
            v.monomial,
            v.term,
            flags.join(" | "),
            v.surviving.join(", ")
        );
    }
    out
}

/// The unperturbed representatives, with `+`/`-` tags for duplicated symmetries.
fn reference_representatives(
    model: &HamiltonianModel,
    tol: f64,
) -> Vec<(SymmetryKind, Option<&'static str>, Representative)> {
    let massless = model.is_massless();
    let solutions: Vec<(SymmetryKind, SymmetrySolution)> = SymmetryKind::standard_set(model.dim())
        .into_iter()
        .map(|k| {
            let q = SymmetryQuery::new(k, model.dim(), massless).expect("standard query");
            (k, solve_with_tol(model, &q, tol))
        })
        .collect();
    let pair_of = |kind| {
        solutions
            .iter()
            .find(|(k, _)| *k == kind)
            .and_then(|(_, s)| Pair::by_square(s))
    };
    let (t, m) = (
        pair_of(SymmetryKind::TimeReversal),
        pair_of(SymmetryKind::EnergyReflection),
    );
    let mut out = Vec::new();
    for (kind, sol) in &solutions {
        let pair = if *kind == SymmetryKind::ParticleHole {
            match (&t, &m) {
                (Some(t), Some(m)) => label_particle_hole(sol, t, m),
                _ => None,
            }
        } else {
            Pair::by_square(sol)
        };
        match pair {
            Some(p) => {
                out.push((*kind, Some("+"), p.plus));
                out.push((*kind, Some("-"), p.minus));
            }
            None => out.extend(sol.representatives.iter().map(|r| (*kind, None, r.clone()))),
        }
    }
    out
}

fn classify_against(
    model: &HamiltonianModel,
    refs: &[(SymmetryKind, Option<&'static str>, Representative)],
    p: &Perturbation,
    opts: &CheckOptions,
) -> Result<PerturbationVerdict> {
    if p.matrix.side() != model.side() {
        return Err(Error::DimensionMismatch {
            expected: model.side(),
            got: p.matrix.side(),
        });
    }
    if p.monomial.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            got: p.monomial.dim(),
        });
    }
    let term = p.term();
    let momenta = random_momenta(model.dim(), opts.samples, opts.seed);
    let mut verdicts = Vec::with_capacity(refs.len());
    for (kind, branch, rep) in refs {
        let q = SymmetryQuery::new(*kind, model.dim(), model.is_massless())?;
        let d = rep.matrix();
        let mut residuals = [0.0; 2];
        for (slot, lambda) in residuals.iter_mut().zip(LAMBDAS) {
            for k in &momenta {
                *slot = f64::max(
                    *slot,
                    defining_residual(model, &q, &d, k, Some((&term, lambda)))?,
                );
            }
        }
        let flags = residuals.map(|r| r <= opts.tol);
        verdicts.push(RepresentativeVerdict {
            symmetry: *kind,
            branch: branch.map(str::to_string),
            representative: rep.string.clone(),
            preserves: flags[0] && flags[1],
            residuals,
            lambda_independent: flags[0] == flags[1],
        });
    }
    let mut surviving: Vec<String> = Vec::new();
    for v in &verdicts {
        let label = v.symmetry.label().to_string();
        if v.preserves && !surviving.contains(&label) {
            surviving.push(label);
        }
    }
    Ok(PerturbationVerdict {
        term: p.label.clone(),
        monomial: p.monomial.clone(),
        verdicts,
        surviving,
    })
}

/// Grades `p` against every representative of the unperturbed model. The
/// symmetries are solved at the model's own mass setting.
pub fn classify_perturbation_with(
    model: &HamiltonianModel,
    p: &Perturbation,
    opts: &CheckOptions,
) -> Result<PerturbationVerdict> {
    classify_against(model, &reference_representatives(model, opts.tol), p, opts)
}

pub fn classify_perturbation(
    model: &HamiltonianModel,
    p: &Perturbation,
) -> Result<PerturbationVerdict> {
    classify_perturbation_with(model, p, &CheckOptions::default())
}

/// Every Hermitian Pauli string times every monomial of degree at most
/// `max_degree`, in Pauli order and then by degree.
pub fn enumerate_perturbations_with(
    model: &HamiltonianModel,
    max_degree: usize,
    opts: &CheckOptions,
) -> Result<Vec<PerturbationVerdict>> {
    if max_degree > 1 {
        return Err(Error::Unsupported(format!(
            "perturbation degree {max_degree}; only 0 and 1 are enumerated"
        )));
    }
    let dim = model.dim();
    let mut monomials = vec![Monomial::constant(dim)];
    if max_degree == 1 {
        monomials.extend((0..dim).map(|axis| Monomial::linear(dim, axis)));
    }
    let refs = reference_representatives(model, opts.tol);
    let mut out = Vec::new();
    for factors in all_factor_lists(model.qubits()) {
        let string = PauliString::hermitian(factors);
        for mono in &monomials {
            let p = Perturbation::from_pauli(mono.clone(), &string);
            out.push(classify_against(model, &refs, &p, opts)?);
        }
    }
    Ok(out)
}

pub fn enumerate_perturbations(
    model: &HamiltonianModel,
    max_degree: usize,
) -> Result<Vec<PerturbationVerdict>> {
    enumerate_perturbations_with(model, max_degree, &CheckOptions::default())
}
