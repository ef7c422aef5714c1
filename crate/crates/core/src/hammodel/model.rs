use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::matcore::{
    expm_i_hermitian, hermitian_eigen, qubit_count, vector_norm, ComplexMatrix, ComplexVector,
    DEFAULT_TOL, ONE,
};

/// One summand `coefficient * monomial(p)` of a Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub monomial: Monomial,
    pub matrix: ComplexMatrix,
}

impl Term {
    pub fn new(monomial: Monomial, matrix: ComplexMatrix) -> Self {
        Self { monomial, matrix }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }
}

/// A momentum-polynomial Hamiltonian `H(p) = sum_a M_a p^a`.
///
/// Constant (degree-zero) terms form the mass term and are multiplied by
/// `mass` on evaluation; they are dropped entirely in the massless limit.
/// `flavour_qubits` counts the trailing tensor factors that act in flavour
/// rather than Dirac space.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianModel {
    name: String,
    dim: usize,
    side: usize,
    terms: Vec<Term>,
    mass: f64,
    flavour_qubits: usize,
}

impl HamiltonianModel {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        terms: Vec<Term>,
        mass: f64,
        flavour_qubits: usize,
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |msg: String| Err(Error::InvalidModel(format!("{name}: {msg}")));
        if dim == 0 {
            return invalid("spatial dimension must be at least 1".into());
        }
        let Some(first) = terms.first() else {
            return invalid("model has no terms".into());
        };
        let side = first.matrix.side();
        let qubits = qubit_count(side)?;
        if flavour_qubits > qubits {
            return invalid(format!(
                "{flavour_qubits} flavour qubits exceed {qubits} total"
            ));
        }
        if !mass.is_finite() || mass < 0.0 {
            return invalid(format!("mass must be finite and non-negative, got {mass}"));
        }
        for term in &terms {
            if term.matrix.side() != side {
                return invalid(format!(
                    "coefficient of {} has side {}, expected {side}",
                    term.monomial,
                    term.matrix.side()
                ));
            }
            if term.monomial.dim() != dim {
                return invalid(format!(
                    "monomial has {} exponents, expected {dim}",
                    term.monomial.dim()
                ));
            }
            if term.monomial.degree() > 2 {
                return invalid(format!("degree {} exceeds 2", term.monomial.degree()));
            }
            if !term.matrix.is_hermitian(DEFAULT_TOL) {
                return invalid(format!("coefficient of {} is not Hermitian", term.monomial));
            }
        }
        Ok(Self {
            name,
            dim,
            side,
            terms,
            mass,
            flavour_qubits,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn flavour_qubits(&self) -> usize {
        self.flavour_qubits
    }

    pub fn qubits(&self) -> usize {
        self.side.trailing_zeros() as usize
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_massless(&self) -> bool {
        self.mass == 0.0
    }

    pub fn with_mass(&self, mass: f64) -> Result<Self> {
        if !mass.is_finite() || mass < 0.0 {
            return Err(Error::InvalidModel(format!(
                "mass must be finite and non-negative, got {mass}"
            )));
        }
        Ok(Self {
            mass,
            ..self.clone()
        })
    }

    pub fn massless(&self) -> Self {
        Self {
            mass: 0.0,
            ..self.clone()
        }
    }

    /// Sum of the constant coefficients (the matrix `beta`), before scaling by mass.
    pub fn mass_matrix(&self) -> Option<ComplexMatrix> {
        self.sum_terms(|m| m.is_constant())
    }

    /// Coefficient of the linear monomial `p_axis`.
    pub fn velocity(&self, axis: usize) -> Option<ComplexMatrix> {
        let target = Monomial::linear(self.dim, axis);
        self.sum_terms(|m| *m == target)
    }

    fn sum_terms(&self, select: impl Fn(&Monomial) -> bool) -> Option<ComplexMatrix> {
        self.terms
            .iter()
            .filter(|t| select(&t.monomial))
            .map(|t| t.matrix.clone())
            .reduce(|a, b| &a + &b)
    }

    /// Terms with the mass folded into the constant coefficients; constant
    /// terms are omitted when `massless` is set or the mass is zero.
    pub fn effective_terms(&self, massless: bool) -> Vec<Term> {
        let drop_mass = massless || self.is_massless();
        self.terms
            .iter()
            .filter(|t| !(drop_mass && t.monomial.is_constant()))
            .map(|t| {
                if t.monomial.is_constant() {
                    Term::new(t.monomial.clone(), t.matrix.scale_real(self.mass))
                } else {
                    t.clone()
                }
            })
            .collect()
    }

    fn check_momentum(&self, p: &[f64]) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, p: &[f64]) -> Result<ComplexMatrix> {
        self.evaluate_with(p, false)
    }

    /// `H(p)`, optionally in the massless limit.
    pub fn evaluate_with(&self, p: &[f64], massless: bool) -> Result<ComplexMatrix> {
        self.check_momentum(p)?;
        Ok(self
            .effective_terms(massless)
            .iter()
            .fold(ComplexMatrix::zeros(self.side), |acc, t| {
                &acc + &t.matrix.scale_real(t.monomial.eval(p))
            }))
    }

    /// Eigenvalues of `H(p)` in ascending order.
    pub fn spectrum(&self, p: &[f64]) -> Result<Vec<f64>> {
        Ok(hermitian_eigen(&self.evaluate(p)?).0)
    }

    /// Unit eigenvector of `H(p)` on the given branch, with its first nonzero
    /// component made real and positive. On a degenerate branch an arbitrary
    /// vector of the eigenspace is returned.
    pub fn eigenspinor(&self, branch: Branch, p: &[f64]) -> Result<ComplexVector> {
        let h = self.evaluate(p)?;
        let (values, vectors) = hermitian_eigen(&h);
        if values[values.len() - 1] - values[0] <= DEFAULT_TOL {
            return Err(Error::Degenerate(format!(
                "H(p) is proportional to the identity at p = {p:?}, m = {}",
                self.mass
            )));
        }
        let raw = if self.name == "dirac_2p1" && self.is_massless() {
            // Closed form (E, p_x + i p_y) for v = (sigma_x, sigma_y).
            let e = branch.sign() * (p[0] * p[0] + p[1] * p[1]).sqrt();
            vec![Complex64::new(e, 0.0), Complex64::new(p[0], p[1])]
        } else {
            match branch {
                Branch::Positive => vectors[vectors.len() - 1].clone(),
                Branch::Negative => vectors[0].clone(),
            }
        };
        Ok(normalise_spinor(raw))
    }

    /// `S_z = (v_x v_y - v_y v_x) / 4i`.
    pub fn spin_z(&self) -> Result<ComplexMatrix> {
        if self.dim < 2 {
            return Err(Error::Unsupported(format!(
                "{} has d = {}; spin needs at least two spatial dimensions",
                self.name, self.dim
            )));
        }
        let zero = || ComplexMatrix::zeros(self.side);
        let vx = self.velocity(0).unwrap_or_else(zero);
        let vy = self.velocity(1).unwrap_or_else(zero);
        Ok(vx.commutator(&vy).scale(Complex64::new(0.0, -0.25)))
    }

    /// Compares `exp(i phi S_z) H(p) exp(-i phi S_z)` against `H(R_z(phi) p)`.
    ///
    /// `R_z(phi)` maps `(p_x, p_y)` to
    /// `(p_x cos phi + p_y sin phi, -p_x sin phi + p_y cos phi)`, which is the
    /// momentum rotation that conjugation by `exp(i phi S_z)` induces.
    pub fn rotation_check(&self, angle: f64, p: &[f64]) -> Result<RotationCheck> {
        self.check_momentum(p)?;
        let sz = self.spin_z()?;
        let u = expm_i_hermitian(&sz, angle);
        let lhs = &(&u * &self.evaluate(p)?) * &u.adjoint();
        let rhs = self.evaluate(&rotate_z(angle, p))?;
        Ok(RotationCheck {
            residual: (&lhs - &rhs).max_abs(),
            spin_rotation: u,
        })
    }

    /// `exp(2 pi i S_z)`; equals `-I` for half-integer spin.
    pub fn full_turn(&self) -> Result<ComplexMatrix> {
        Ok(expm_i_hermitian(&self.spin_z()?, 2.0 * PI))
    }

    /// Largest deviation from `{G_a, G_b} = 2 delta_ab I` over the velocity
    /// matrices and the mass matrix.
    pub fn clifford_defect(&self) -> f64 {
        let mut gammas: Vec<ComplexMatrix> =
            (0..self.dim).filter_map(|j| self.velocity(j)).collect();
        gammas.extend(self.mass_matrix());
        let id = ComplexMatrix::identity(self.side);
        let mut worst = 0.0f64;
        for (a, ga) in gammas.iter().enumerate() {
            for (b, gb) in gammas.iter().enumerate() {
                let target = if a == b {
                    id.scale_real(2.0)
                } else {
                    ComplexMatrix::zeros(self.side)
                };
                worst = worst.max((&ga.anticommutator(gb) - &target).max_abs());
            }
        }
        worst
    }
}

#[derive(Clone, Debug)]
pub struct RotationCheck {
    pub residual: f64,
    pub spin_rotation: ComplexMatrix,
}

/// The momentum map paired with the spin rotation `exp(i phi S_z)`.
pub fn rotate_z(angle: f64, p: &[f64]) -> Vec<f64> {
    let (s, c) = angle.sin_cos();
    let mut out = p.to_vec();
    out[0] = p[0] * c + p[1] * s;
    out[1] = -p[0] * s + p[1] * c;
    out
}

/// Normalises to unit length and fixes the phase so that the first
/// component with modulus above `1e-12` is real and positive.
pub fn normalise_spinor(v: ComplexVector) -> ComplexVector {
    let norm = vector_norm(&v);
    let lead = v
        .iter()
        .find(|z| z.norm() > 1e-12)
        .map(|z| z.conj() / z.norm())
        .unwrap_or(ONE);
    v.into_iter().map(|z| z * lead / norm).collect()
}

/// Expectation value `<psi|op|psi>` for a unit vector.
pub fn expectation(op: &ComplexMatrix, psi: &[Complex64]) -> f64 {
    let v = op.mul_vec(psi);
    crate::matcore::inner(psi, &v).re
}
