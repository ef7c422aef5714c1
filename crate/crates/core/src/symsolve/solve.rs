use serde::{Serialize, Serializer};

use super::constraints::build_constraints;
use super::query::{SymmetryKind, SymmetryQuery};
use crate::error::{Error, Result};
use crate::hammodel::{HamiltonianModel, Term};
use crate::matcore::{
    all_factor_lists, inner, nullspace, unitarity_defect, ComplexMatrix, Pauli, PauliString, Phase,
    DEFAULT_TOL,
};

/// Sign `s` of `D^2 = s I` (unitary) or `D conj(D) = s I` (antiunitary).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareSign {
    Plus,
    Minus,
    NonScalar,
}

impl SquareSign {
    pub fn label(self) -> &'static str {
        match self {
            SquareSign::Plus => "+1",
            SquareSign::Minus => "-1",
            SquareSign::NonScalar => "non-scalar",
        }
    }
}

impl Serialize for SquareSign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Representative {
    /// Pauli string in canonical phase.
    pub string: PauliString,
    pub square: SquareSign,
    /// Largest entry of the vectorised constraint residual.
    pub residual: f64,
}

impl Representative {
    pub fn matrix(&self) -> ComplexMatrix {
        self.string.to_matrix()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetrySolution {
    pub query: SymmetryQuery,
    pub nullity: usize,
    pub representatives: Vec<Representative>,
    pub exists: bool,
}

/// Phase from `{1, i}` for a representative.
///
/// Antiunitary kinds: the phase that makes the matrix real. Their square sign
/// does not depend on this choice.
///
/// Unitary kinds: the Dirac-space factors stay Hermitian and the flavour
/// factors (the trailing `flavour_qubits`) are made real, so a flavour `Y`
/// becomes `i·Y`. This is the block form `[[0, A], [±A, 0]]` with Hermitian
/// `A`; without flavour factors it reduces to the Hermitian choice.
pub fn canonical_phase(factors: &[Pauli], conjugate: bool, flavour_qubits: usize) -> Phase {
    let ys = |fs: &[Pauli]| fs.iter().filter(|&&p| p == Pauli::Y).count();
    let odd = if conjugate {
        ys(factors) % 2 == 1
    } else {
        let start = factors.len().saturating_sub(flavour_qubits);
        ys(&factors[start..]) % 2 == 1
    };
    if odd {
        Phase::I
    } else {
        Phase::ONE
    }
}

/// Sign of `d d` (unitary) or `d conj(d)` (antiunitary) when the product is `±I`
/// within `1e-10`.
pub fn classify_square(d: &ComplexMatrix, conjugate: bool) -> Result<SquareSign> {
    let defect = unitarity_defect(d);
    if defect > DEFAULT_TOL {
        return Err(Error::NotUnitary(defect));
    }
    let sq = if conjugate { d * &d.conj() } else { d * d };
    let id = ComplexMatrix::identity(d.side());
    Ok(if sq.approx_eq(&id, DEFAULT_TOL) {
        SquareSign::Plus
    } else if sq.approx_eq(&-&id, DEFAULT_TOL) {
        SquareSign::Minus
    } else {
        SquareSign::NonScalar
    })
}

pub fn solve(model: &HamiltonianModel, q: &SymmetryQuery) -> SymmetrySolution {
    solve_with_tol(model, q, DEFAULT_TOL)
}

/// Nullspace of the vectorised defining equation plus every Pauli string
/// lying in it, one per factor list.
pub fn solve_with_tol(model: &HamiltonianModel, q: &SymmetryQuery, tol: f64) -> SymmetrySolution {
    let system = build_constraints(model, q);
    let basis = nullspace(&system.matrix(), tol);
    let mut representatives = Vec::new();
    if !basis.is_empty() {
        for factors in all_factor_lists(model.qubits()) {
            let raw = PauliString::hermitian(factors.clone()).to_matrix();
            let v = raw.entries();
            let norm_sq = model.side() as f64;
            let captured: f64 = basis.iter().map(|b| inner(b, v).norm_sqr()).sum();
            let outside = (norm_sq - captured).max(0.0).sqrt() / norm_sq.sqrt();
            if outside > tol.sqrt() {
                continue;
            }
            let phase = canonical_phase(&factors, q.conjugate, model.flavour_qubits());
            let string = PauliString::new(factors, phase);
            let m = string.to_matrix();
            let square = classify_square(&m, q.conjugate).expect("Pauli strings are unitary");
            representatives.push(Representative {
                residual: system.residual(&m),
                string,
                square,
            });
        }
    }
    SymmetrySolution {
        query: q.clone(),
        nullity: basis.len(),
        exists: !representatives.is_empty(),
        representatives,
    }
}

/// Residual of the defining equation for `d` evaluated at one momentum,
/// optionally with a perturbation `lambda * term` added to the Hamiltonian.
///
/// For chirality this is `|[D, H_0(p)]| + |{D, beta}|` with `H_0` the
/// massless Hamiltonian.
pub fn defining_residual(
    model: &HamiltonianModel,
    q: &SymmetryQuery,
    d: &ComplexMatrix,
    p: &[f64],
    perturbation: Option<(&Term, f64)>,
) -> Result<f64> {
    let massless = q.massless || q.kind == SymmetryKind::Chirality;
    let h = |k: &[f64]| -> Result<ComplexMatrix> {
        let mut h = model.evaluate_with(k, massless)?;
        if let Some((term, lambda)) = perturbation {
            h = &h + &term.matrix.scale_real(lambda * term.monomial.eval(k));
        }
        Ok(h)
    };
    if q.kind == SymmetryKind::Chirality {
        let mut res = d.commutator(&h(p)?).max_abs();
        if let Some(beta) = model.mass_matrix() {
            res += d.anticommutator(&beta).max_abs();
        }
        return Ok(res);
    }
    let hp = h(p)?;
    let lhs_h = if q.conjugate { hp.conj() } else { hp };
    let rhs_h = h(&q.apply_map(p))?.scale_real(q.energy_sign);
    Ok((&(d * &lhs_h) - &(&rhs_h * d)).max_abs())
}
