//! Vectorisation of the defining equation into a homogeneous linear system
//! over the `n^2` entries of the unknown representation matrix.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::query::{SymmetryKind, SymmetryQuery};
use crate::hammodel::{HamiltonianModel, Monomial};
use crate::matcore::{kron, ComplexMatrix, ZERO};

/// `D * lhs - rhs * D = 0` for the coefficient of one momentum monomial.
#[derive(Clone, Debug)]
pub struct ConstraintBlock {
    pub monomial: Monomial,
    pub lhs: ComplexMatrix,
    pub rhs: ComplexMatrix,
}

#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    side: usize,
    blocks: Vec<ConstraintBlock>,
}

impl ConstraintSystem {
    pub fn side(&self) -> usize {
        self.side
    }

    pub fn blocks(&self) -> &[ConstraintBlock] {
        &self.blocks
    }

    /// Stacked `(blocks * n^2) x n^2` matrix acting on the row-major `vec(D)`.
    ///
    /// Row-major: `vec(D A) = (I ⊗ A^T) vec(D)` and `vec(B D) = (B ⊗ I) vec(D)`.
    pub fn matrix(&self) -> DMatrix<Complex64> {
        let n = self.side;
        let nn = n * n;
        let id = ComplexMatrix::identity(n);
        let mut out = DMatrix::from_element(self.blocks.len() * nn, nn, ZERO);
        for (b, block) in self.blocks.iter().enumerate() {
            let op = &kron(&id, &block.lhs.transpose()) - &kron(&block.rhs, &id);
            for r in 0..nn {
                for c in 0..nn {
                    out[(b * nn + r, c)] = op[(r, c)];
                }
            }
        }
        out
    }

    /// Largest entry of `D lhs - rhs D` over all blocks.
    pub fn residual(&self, d: &ComplexMatrix) -> f64 {
        self.blocks
            .iter()
            .map(|b| (&(d * &b.lhs) - &(&b.rhs * d)).max_abs())
            .fold(0.0, f64::max)
    }
}

/// Matches monomial coefficients of `D H^(c)(p) = s H(S p) D`.
///
/// Constant terms enter with unit mass (the value of a nonzero mass does not
/// change the solution space) and are omitted in the massless limit. Chirality
/// keeps the mass matrix regardless, as the anticommutation partner of the
/// generator.
pub fn build_constraints(model: &HamiltonianModel, q: &SymmetryQuery) -> ConstraintSystem {
    let n = model.side();
    let blocks = if q.kind == SymmetryKind::Chirality {
        chirality_blocks(model)
    } else {
        let drop_mass = q.massless || model.is_massless();
        let mut lhs: BTreeMap<Monomial, ComplexMatrix> = BTreeMap::new();
        let mut rhs: BTreeMap<Monomial, ComplexMatrix> = BTreeMap::new();
        for term in model.terms() {
            if drop_mass && term.monomial.is_constant() {
                continue;
            }
            let m = if q.conjugate {
                term.matrix.conj()
            } else {
                term.matrix.clone()
            };
            accumulate(&mut lhs, term.monomial.clone(), &m, n);
            for (mono, c) in term.monomial.substitute(&q.momentum_map) {
                accumulate(
                    &mut rhs,
                    mono,
                    &term.matrix.scale_real(c * q.energy_sign),
                    n,
                );
            }
        }
        let monomials: Vec<Monomial> = lhs.keys().chain(rhs.keys()).cloned().collect();
        let mut seen = std::collections::BTreeSet::new();
        monomials
            .into_iter()
            .filter(|m| seen.insert(m.clone()))
            .map(|mono| ConstraintBlock {
                lhs: lhs
                    .get(&mono)
                    .cloned()
                    .unwrap_or_else(|| ComplexMatrix::zeros(n)),
                rhs: rhs
                    .get(&mono)
                    .cloned()
                    .unwrap_or_else(|| ComplexMatrix::zeros(n)),
                monomial: mono,
            })
            .filter(|b| b.lhs.max_abs() > 0.0 || b.rhs.max_abs() > 0.0)
            .collect()
    };
    ConstraintSystem { side: n, blocks }
}

fn chirality_blocks(model: &HamiltonianModel) -> Vec<ConstraintBlock> {
    let n = model.side();
    let mut grouped: BTreeMap<Monomial, ComplexMatrix> = BTreeMap::new();
    for term in model.terms() {
        accumulate(&mut grouped, term.monomial.clone(), &term.matrix, n);
    }
    grouped
        .into_iter()
        .filter(|(_, m)| m.max_abs() > 0.0)
        .map(|(monomial, m)| {
            let rhs = if monomial.is_constant() {
                -&m
            } else {
                m.clone()
            };
            ConstraintBlock {
                monomial,
                lhs: m,
                rhs,
            }
        })
        .collect()
}

fn accumulate(
    map: &mut BTreeMap<Monomial, ComplexMatrix>,
    key: Monomial,
    m: &ComplexMatrix,
    n: usize,
) {
    let slot = map.entry(key).or_insert_with(|| ComplexMatrix::zeros(n));
    *slot = &*slot + m;
}
