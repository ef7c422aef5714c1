use std::fmt::Write as _;

use serde::Serialize;

use super::render::{pauli_expression, tensor_notation};
use super::CheckOptions;
use crate::error::Result;
use crate::hammodel::{random_momenta, zoo, HamiltonianModel};
use crate::matcore::{ComplexMatrix, PauliString};
use crate::symsolve::{
    defining_residual, label_particle_hole, solve_with_tol, unit_proportionality, Pair, ParityAxis,
    Representative, SymmetryKind, SymmetryQuery,
};

/// One entry of the two-flavour operator table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableCell {
    pub operator: String,
    pub expected: PauliString,
    pub notation: String,
    /// What the solver or the model produced, as a Pauli expression.
    pub found: String,
    /// Proportionality residual for model matrices; largest defining-equation
    /// residual for symmetry representatives.
    pub residual: f64,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OperatorTable {
    pub model: String,
    pub cells: Vec<TableCell>,
    pub matched: usize,
    pub total: usize,
}

impl OperatorTable {
    pub fn all_matched(&self) -> bool {
        self.matched == self.total
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Operators of {}\n", self.model);
        let _ = writeln!(
            out,
            "| operator | σ⊗τ | Pauli string | found | residual | match |"
        );
        let _ = writeln!(out, "|---|---|---|---|---|---|");
        for c in &self.cells {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {:.1e} | {} |",
                c.operator,
                c.notation,
                c.expected,
                c.found,
                c.residual,
                if c.matched { "yes" } else { "NO" }
            );
        }
        let _ = writeln!(out, "\n{}/{} entries matched", self.matched, self.total);
        out
    }
}

fn ps(s: &str) -> PauliString {
    s.parse().expect("table literal")
}

fn model_cell(operator: &str, expected: &str, found: Option<ComplexMatrix>, tol: f64) -> TableCell {
    let expected = ps(expected);
    let (found, residual, matched) = match found {
        Some(m) => {
            let (c, residual) = unit_proportionality(&m, &expected.to_matrix());
            (
                pauli_expression(&m),
                residual,
                c.is_some() && residual <= tol,
            )
        }
        None => ("missing".to_string(), f64::INFINITY, false),
    };
    TableCell {
        operator: operator.to_string(),
        notation: tensor_notation(&expected),
        expected,
        found,
        residual,
        matched,
    }
}

struct Checker<'a> {
    model: &'a HamiltonianModel,
    momenta: Vec<Vec<f64>>,
    tol: f64,
}

impl Checker<'_> {
    fn solve_pair(&self, kind: SymmetryKind) -> Option<Pair> {
        let q = SymmetryQuery::new(kind, self.model.dim(), false).ok()?;
        Pair::by_square(&solve_with_tol(self.model, &q, self.tol))
    }

    fn residual(&self, kind: SymmetryKind, d: &ComplexMatrix) -> f64 {
        let Ok(q) = SymmetryQuery::new(kind, self.model.dim(), false) else {
            return f64::INFINITY;
        };
        self.momenta
            .iter()
            .map(|p| defining_residual(self.model, &q, d, p, None).unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// A representative cell: the solver's output must be the expected
    /// string up to a unit phase and must satisfy the defining equation.
    fn cell(
        &self,
        operator: &str,
        kind: SymmetryKind,
        expected: &str,
        found: Option<&Representative>,
    ) -> TableCell {
        let expected = ps(expected);
        let (found_text, residual, matched) = match found {
            Some(r) => {
                let m = r.matrix();
                let eq = self.residual(kind, &m);
                let same = unit_proportionality(&m, &expected.to_matrix()).0.is_some();
                (r.string.to_string(), eq, same && eq <= self.tol)
            }
            None => ("missing".to_string(), f64::INFINITY, false),
        };
        TableCell {
            operator: operator.to_string(),
            notation: tensor_notation(&expected),
            expected,
            found: found_text,
            residual,
            matched,
        }
    }

    /// Both parity axes share a row; a cell matches only if both axes do.
    fn parity_cell(&self, plus: bool, pairs: &[(ParityAxis, Option<Pair>, &str)]) -> TableCell {
        let sub: Vec<TableCell> = pairs
            .iter()
            .map(|(axis, pair, expected)| {
                let rep = pair.as_ref().map(|p| if plus { &p.plus } else { &p.minus });
                self.cell("", SymmetryKind::Parity(*axis), expected, rep)
            })
            .collect();
        let sign = if plus { "+" } else { "-" };
        TableCell {
            operator: format!("D{sign}(P_ν)"),
            expected: sub[0].expected.clone(),
            notation: sub
                .iter()
                .map(|c| c.notation.clone())
                .collect::<Vec<_>>()
                .join(", "),
            found: sub
                .iter()
                .map(|c| c.found.clone())
                .collect::<Vec<_>>()
                .join(", "),
            residual: sub.iter().map(|c| c.residual).fold(0.0, f64::max),
            matched: sub.iter().all(|c| c.matched),
        }
    }
}

/// Rebuilds the operator table of the two-flavour (2+1)D model from scratch
/// and compares every entry against the reference strings.
pub fn operator_table_with(opts: &CheckOptions) -> Result<OperatorTable> {
    let model = zoo("dirac_2f_2p1")?;
    let checker = Checker {
        model: &model,
        momenta: random_momenta(model.dim(), opts.samples, opts.seed),
        tol: opts.tol,
    };
    let tol = opts.tol;
    let vx = model.velocity(0);
    let vy = model.velocity(1);
    let beta = model.mass_matrix();
    let gamma = |v: &Option<ComplexMatrix>| match (&beta, v) {
        (Some(b), Some(v)) => Some(b * v),
        _ => None,
    };
    let two_sz = model.spin_z().ok().map(|s| s.scale_real(2.0));

    let mut cells = vec![
        model_cell("v_x", "XI", vx.clone(), tol),
        model_cell("v_y", "YI", vy.clone(), tol),
        model_cell("β", "ZZ", beta.clone(), tol),
        model_cell("γ¹", "i·YZ", gamma(&vx), tol),
        model_cell("γ²", "-i·XZ", gamma(&vy), tol),
        model_cell("2S_z", "ZI", two_sz, tol),
    ];

    let parity = [
        (
            ParityAxis::X,
            checker.solve_pair(SymmetryKind::Parity(ParityAxis::X)),
            "XX",
            "i·XY",
        ),
        (
            ParityAxis::Y,
            checker.solve_pair(SymmetryKind::Parity(ParityAxis::Y)),
            "YX",
            "i·YY",
        ),
    ];
    let plus: Vec<_> = parity
        .iter()
        .map(|(a, p, e, _)| (*a, p.clone(), *e))
        .collect();
    let minus: Vec<_> = parity
        .iter()
        .map(|(a, p, _, e)| (*a, p.clone(), *e))
        .collect();
    cells.push(checker.parity_cell(true, &plus));
    cells.push(checker.parity_cell(false, &minus));

    let t = checker.solve_pair(SymmetryKind::TimeReversal);
    let m = checker.solve_pair(SymmetryKind::EnergyReflection);
    let chi = checker.solve_pair(SymmetryKind::Chirality);
    let c = match (&t, &m) {
        (Some(t), Some(m)) => {
            let q = SymmetryQuery::new(SymmetryKind::ParticleHole, model.dim(), false)?;
            label_particle_hole(&solve_with_tol(&model, &q, tol), t, m)
        }
        _ => None,
    };
    for (kind, pair, plus, minus) in [
        (SymmetryKind::TimeReversal, &t, "YY", "-i·YX"),
        (SymmetryKind::ParticleHole, &c, "XZ", "XI"),
        (SymmetryKind::EnergyReflection, &m, "ZX", "i·ZY"),
        (SymmetryKind::Chirality, &chi, "IX", "i·IY"),
    ] {
        let label = kind.label();
        cells.push(checker.cell(
            &format!("D+({label})"),
            kind,
            plus,
            pair.as_ref().map(|p| &p.plus),
        ));
        cells.push(checker.cell(
            &format!("D-({label})"),
            kind,
            minus,
            pair.as_ref().map(|p| &p.minus),
        ));
    }

    let matched = cells.iter().filter(|c| c.matched).count();
    Ok(OperatorTable {
        model: model.name().to_string(),
        total: cells.len(),
        matched,
        cells,
    })
}

pub fn operator_table() -> Result<OperatorTable> {
    operator_table_with(&CheckOptions::default())
}
