//! Algebraic relations between representation matrices of different
//! symmetries of one model, each verified up to a unit-modulus scalar.

use num_complex::Complex64;
use serde::Serialize;

use super::query::{SymmetryKind, SymmetryQuery};
use super::solve::{solve, Representative, SquareSign, SymmetrySolution};
use crate::hammodel::HamiltonianModel;
use crate::matcore::{ComplexMatrix, Pauli, PauliString, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RelationStatus {
    Holds { scalar: [f64; 2], residual: f64 },
    Fails { residual: f64 },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationResult {
    pub relation: String,
    #[serde(flatten)]
    pub status: RelationStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub model: String,
    pub relations: Vec<RelationResult>,
}

impl RelationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationResult> {
        self.relations
            .iter()
            .filter(|r| matches!(r.status, RelationStatus::Fails { .. }))
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// The two inequivalent representatives of a duplicated symmetry.
#[derive(Clone, Debug)]
pub struct Pair {
    pub plus: Representative,
    pub minus: Representative,
}

impl Pair {
    /// Splits two representatives by their square signs; `None` unless there
    /// are exactly two with opposite signs.
    pub fn by_square(sol: &SymmetrySolution) -> Option<Pair> {
        let [a, b] = sol.representatives.as_slice() else {
            return None;
        };
        match (a.square, b.square) {
            (SquareSign::Plus, SquareSign::Minus) => Some(Pair {
                plus: a.clone(),
                minus: b.clone(),
            }),
            (SquareSign::Minus, SquareSign::Plus) => Some(Pair {
                plus: b.clone(),
                minus: a.clone(),
            }),
            _ => None,
        }
    }
}

/// `Some((c, residual))` with `a = c b` and `|c| = 1` within tolerance.
pub fn unit_proportionality(a: &ComplexMatrix, b: &ComplexMatrix) -> (Option<Complex64>, f64) {
    match a.proportionality(b, DEFAULT_TOL) {
        Some(c) if (c.norm() - 1.0).abs() <= DEFAULT_TOL => (Some(c), (a - &b.scale(c)).max_abs()),
        Some(c) => (None, (c.norm() - 1.0).abs()),
        None => {
            // Residual against the best unit scalar for reporting.
            let tr: Complex64 = b
                .entries()
                .iter()
                .zip(a.entries())
                .map(|(x, y)| x.conj() * y)
                .sum();
            let c = if tr.norm() > 0.0 {
                tr / tr.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            (None, (a - &b.scale(c)).max_abs())
        }
    }
}

fn relation(name: impl Into<String>, a: &ComplexMatrix, b: &ComplexMatrix) -> RelationResult {
    let status = match unit_proportionality(a, b) {
        (Some(c), residual) => RelationStatus::Holds {
            scalar: [c.re, c.im],
            residual,
        },
        (None, residual) => RelationStatus::Fails { residual },
    };
    RelationResult {
        relation: name.into(),
        status,
    }
}

fn skipped(name: impl Into<String>, reason: impl Into<String>) -> RelationResult {
    RelationResult {
        relation: name.into(),
        status: RelationStatus::Skipped {
            reason: reason.into(),
        },
    }
}

/// Massive solution when it exists, massless otherwise.
pub fn preferred_solution(
    model: &HamiltonianModel,
    kind: SymmetryKind,
) -> Option<SymmetrySolution> {
    let massive = solve(model, &SymmetryQuery::new(kind, model.dim(), false).ok()?);
    if massive.exists {
        return Some(massive);
    }
    let massless = solve(model, &SymmetryQuery::new(kind, model.dim(), true).ok()?);
    massless.exists.then_some(massless)
}

fn unique(sol: &Option<SymmetrySolution>) -> Option<ComplexMatrix> {
    match sol {
        Some(s) if s.representatives.len() == 1 => Some(s.representatives[0].matrix()),
        _ => None,
    }
}

/// Labels the particle-hole pair through `D_+(M) ∝ D_+(C) D_+(T)*`; both
/// particle-hole representatives square to `+1`, so their squares cannot.
pub fn label_particle_hole(c: &SymmetrySolution, t: &Pair, m: &Pair) -> Option<Pair> {
    let [a, b] = c.representatives.as_slice() else {
        return None;
    };
    let fits = |r: &Representative| {
        unit_proportionality(&(&r.matrix() * &t.plus.matrix().conj()), &m.plus.matrix())
            .0
            .is_some()
    };
    match (fits(a), fits(b)) {
        (true, false) => Some(Pair {
            plus: a.clone(),
            minus: b.clone(),
        }),
        (false, true) => Some(Pair {
            plus: b.clone(),
            minus: a.clone(),
        }),
        _ => None,
    }
}

/// `1 ⊗ ... ⊗ 1 ⊗ Z` on the flavour qubit.
pub fn flavour_z(qubits: usize) -> ComplexMatrix {
    let mut factors = vec![Pauli::I; qubits];
    factors[qubits - 1] = Pauli::Z;
    PauliString::hermitian(factors).to_matrix()
}

pub fn relation_check(model: &HamiltonianModel) -> RelationReport {
    let dim = model.dim();
    let get = |k| preferred_solution(model, k);
    let (t, c, m, chi) = (
        get(SymmetryKind::TimeReversal),
        get(SymmetryKind::ParticleHole),
        get(SymmetryKind::EnergyReflection),
        get(SymmetryKind::Chirality),
    );
    let beta = model.mass_matrix();
    let mut out = Vec::new();

    // Energy reflection as the product of particle-hole conjugation and time reversal.
    match (unique(&c), unique(&t), unique(&m)) {
        (Some(dc), Some(dt), Some(dm)) => {
            out.push(relation("D(M) ∝ D(C)·D(T)*", &dm, &(&dc * &dt.conj())));
        }
        _ => {
            let pairs = (
                t.as_ref().and_then(Pair::by_square),
                m.as_ref().and_then(Pair::by_square),
            );
            match (pairs, c.as_ref()) {
                ((Some(tp), Some(mp)), Some(cs)) => match label_particle_hole(cs, &tp, &mp) {
                    Some(cp) => {
                        let pick = |p: &Pair, s: i8| {
                            if s > 0 {
                                p.plus.matrix()
                            } else {
                                p.minus.matrix()
                            }
                        };
                        for eps in [1i8, -1] {
                            for pm in [1i8, -1] {
                                let name = format!(
                                    "D{}(M) ∝ D{}(C)·D{}(T)*",
                                    sign(eps),
                                    sign(pm),
                                    sign(pm * eps)
                                );
                                let rhs = &pick(&cp, pm) * &pick(&tp, pm * eps).conj();
                                out.push(relation(name, &pick(&mp, eps), &rhs));
                            }
                        }
                    }
                    None => out.push(skipped(
                        "D(M) ∝ D(C)·D(T)*",
                        "particle-hole representatives cannot be labelled",
                    )),
                },
                _ => out.push(skipped(
                    "D(M) ∝ D(C)·D(T)*",
                    "C, T or M lacks a unique representative or sign-split pair",
                )),
            }
        }
    }

    // Energy reflection against chirality.
    match (unique(&m), unique(&chi), beta.as_ref()) {
        (Some(dm), Some(dchi), Some(b)) => {
            out.push(relation("D(M) ∝ β·D(χ)", &dm, &(b * &dchi)));
        }
        _ => {
            let mp = m.as_ref().and_then(Pair::by_square);
            let cp = chi.as_ref().and_then(Pair::by_square);
            match (
                mp,
                cp,
                beta.as_ref(),
                model.velocity(0),
                model.velocity(1.min(dim - 1)),
            ) {
                (Some(mp), Some(cp), Some(b), Some(vx), Some(vy)) if dim >= 2 => {
                    let ivv = (&vx * &vy).scale(Complex64::new(0.0, -1.0));
                    out.push(relation(
                        "D+(χ) ∝ -i·v_x·v_y·D+(M)",
                        &cp.plus.matrix(),
                        &(&ivv * &mp.plus.matrix()),
                    ));
                    out.push(relation(
                        "D-(χ) ∝ -i·v_x·v_y·D-(M)",
                        &cp.minus.matrix(),
                        &(&ivv * &mp.minus.matrix()),
                    ));
                    out.push(relation(
                        "D+(χ) ∝ β·D-(M)",
                        &cp.plus.matrix(),
                        &(b * &mp.minus.matrix()),
                    ));
                    out.push(relation(
                        "D-(χ) ∝ β·D+(M)",
                        &cp.minus.matrix(),
                        &(b * &mp.plus.matrix()),
                    ));
                }
                _ => out.push(skipped(
                    "D(M) ∝ β·D(χ)",
                    "M or χ lacks a unique representative or sign-split pair",
                )),
            }
        }
    }

    // Products of the two representatives of each duplicated symmetry.
    if model.flavour_qubits() == 1 {
        let fz = flavour_z(model.qubits());
        for kind in SymmetryKind::standard_set(dim) {
            let name = format!("D+({kind})·D-({kind}) ∝ σ0⊗τz");
            match get(kind) {
                Some(sol) if sol.representatives.len() == 2 => {
                    let (a, b) = (&sol.representatives[0], &sol.representatives[1]);
                    out.push(relation(name, &(&a.matrix() * &b.matrix()), &fz));
                }
                Some(sol) => out.push(skipped(
                    name,
                    format!("{} representatives, expected 2", sol.representatives.len()),
                )),
                None => out.push(skipped(name, "no representative")),
            }
        }
    }

    RelationReport {
        model: model.name().to_string(),
        relations: out,
    }
}

fn sign(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}
