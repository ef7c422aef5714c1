//! Momentum-polynomial Hamiltonians, the built-in Dirac models and their
//! spectra, eigenspinors, spin and rotation operators.
//!
//! Only the spin part of a rotation is materialised. The orbital factor
//! `exp(2 pi i L_z)` is `+1` because `L_z` has integer spectrum, so the
//! double-group sign of a `2 pi` rotation is carried entirely by
//! `exp(2 pi i S_z)`.

mod json;
mod model;
mod monomial;
mod zoo;

pub use json::{load_model, model_from_json, MatrixDocument, ModelDocument, TermDocument};
pub use model::{
    expectation, normalise_spinor, rotate_z, Branch, HamiltonianModel, RotationCheck, Term,
};
pub use monomial::Monomial;
pub use zoo::{zoo, ZOO_NAMES};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` momenta with components uniform in `[-2, 2)`, reproducible from `seed`.
pub fn random_momenta(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| rng.random_range(-2.0..2.0)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use num_complex::Complex64;

    use super::*;
    use crate::error::Error;
    use crate::matcore::{ComplexMatrix, PauliString, I, ONE};

    fn pm(s: &str) -> ComplexMatrix {
        s.parse::<PauliString>().unwrap().to_matrix()
    }

    #[test]
    fn zoo_dirac_2p1_terms() {
        let m = zoo("dirac_2p1").unwrap();
        assert_eq!(m.velocity(0).unwrap(), pm("X"));
        assert_eq!(m.velocity(1).unwrap(), pm("Y"));
        assert_eq!(m.mass_matrix().unwrap(), pm("Z"));
        assert_eq!(m.mass(), 1.0);
        assert_eq!(m.terms().len(), 3);
    }

    #[test]
    fn zoo_two_flavour_matrices() {
        let m = zoo("dirac_2f_2p1").unwrap();
        assert_eq!(m.mass_matrix().unwrap(), pm("ZZ"));
        assert_eq!(m.velocity(0).unwrap(), pm("XI"));
        assert_eq!(m.velocity(1).unwrap(), pm("YI"));
        assert_eq!(m.flavour_qubits(), 1);
    }

    #[test]
    fn zoo_dirac_1p1_terms() {
        let m = zoo("dirac_1p1").unwrap();
        assert_eq!(m.velocity(0).unwrap(), pm("X"));
        assert_eq!(m.mass_matrix().unwrap(), pm("Z"));
    }

    #[test]
    fn zoo_unknown_name_lists_valid_names() {
        let err = zoo("dirac_9p1").unwrap_err();
        let msg = err.to_string();
        assert!(matches!(err, Error::UnknownModel { .. }));
        for name in ZOO_NAMES {
            assert!(msg.contains(name), "{msg}");
        }
    }

    #[test]
    fn zoo_models_satisfy_clifford_relations_exactly() {
        for name in ZOO_NAMES {
            assert_eq!(zoo(name).unwrap().clifford_defect(), 0.0, "{name}");
        }
    }

    #[test]
    fn evaluate_examples() {
        let m = zoo("dirac_2p1").unwrap();
        assert_eq!(m.massless().evaluate(&[1.0, 0.0]).unwrap(), pm("X"));
        assert_eq!(m.evaluate(&[0.0, 0.0]).unwrap(), pm("Z"));
        assert!(matches!(
            m.evaluate(&[1.0]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn evaluate_dirac_1p1_and_closed_form_eigenvalues() {
        let m = zoo("dirac_1p1").unwrap().with_mass(3.0).unwrap();
        let h = m.evaluate(&[4.0]).unwrap();
        assert_eq!(h, &pm("X").scale_real(4.0) + &pm("Z").scale_real(3.0));
        // 2x2 Hermitian oracle: (a+d)/2 ± sqrt(((a-d)/2)^2 + |b|^2).
        let (a, b, d) = (h[(0, 0)].re, h[(0, 1)], h[(1, 1)].re);
        let r = (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
        let oracle = [(a + d) / 2.0 - r, (a + d) / 2.0 + r];
        assert_eq!(oracle, [-5.0, 5.0]);
        let spec = m.spectrum(&[4.0]).unwrap();
        for (x, y) in spec.iter().zip(oracle) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_examples() {
        let close = |got: Vec<f64>, want: &[f64]| {
            assert_eq!(got.len(), want.len());
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-10, "{got:?} vs {want:?}");
            }
        };
        close(
            zoo("dirac_2p1")
                .unwrap()
                .massless()
                .spectrum(&[3.0, 4.0])
                .unwrap(),
            &[-5.0, 5.0],
        );
        close(
            zoo("dirac_2f_2p1")
                .unwrap()
                .with_mass(2.0)
                .unwrap()
                .spectrum(&[0.0, 0.0])
                .unwrap(),
            &[-2.0, -2.0, 2.0, 2.0],
        );
        // Independent check: H^2 = 4 I and tr H = 0 force {-2, -2, 2, 2}.
        let m3 = zoo("dirac_3p1").unwrap();
        let h = m3.evaluate(&[1.0, 1.0, 1.0]).unwrap();
        assert!((&h * &h).approx_eq(&ComplexMatrix::identity(4).scale_real(4.0), 1e-12));
        assert!(h.trace().norm() < 1e-12);
        close(
            m3.spectrum(&[1.0, 1.0, 1.0]).unwrap(),
            &[-2.0, -2.0, 2.0, 2.0],
        );
    }

    #[test]
    fn eigenspinor_examples() {
        let m = zoo("dirac_2p1").unwrap().massless();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = m.eigenspinor(Branch::Positive, &[1.0, 0.0]).unwrap();
        assert!((plus[0] - Complex64::new(s, 0.0)).norm() < 1e-12);
        assert!((plus[1] - Complex64::new(s, 0.0)).norm() < 1e-12);

        // Proportional to (-1, i); phase convention makes the first entry positive.
        let minus = m.eigenspinor(Branch::Negative, &[0.0, 1.0]).unwrap();
        let reference = [-ONE, I];
        let ratio = minus[0] / reference[0];
        assert!((ratio.norm() - s).abs() < 1e-12);
        assert!((minus[1] - ratio * reference[1]).norm() < 1e-12);
        assert!(minus[0].im == 0.0 && minus[0].re > 0.0);

        let massive = zoo("dirac_2p1").unwrap();
        let up = massive.eigenspinor(Branch::Positive, &[0.0, 0.0]).unwrap();
        assert!((up[0] - ONE).norm() < 1e-12 && up[1].norm() < 1e-12);
    }

    #[test]
    fn eigenspinor_refuses_degenerate_point() {
        let m = zoo("dirac_2p1").unwrap().massless();
        assert!(matches!(
            m.eigenspinor(Branch::Positive, &[0.0, 0.0]),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn spin_z_examples() {
        assert_eq!(
            zoo("dirac_2p1").unwrap().spin_z().unwrap(),
            pm("Z").scale_real(0.5)
        );
        assert_eq!(
            zoo("dirac_2f_2p1").unwrap().spin_z().unwrap(),
            pm("ZI").scale_real(0.5)
        );
        // Standard representation: direct commutator gives diag(sigma_z, sigma_z)/2.
        let half = ComplexMatrix::diagonal(&[ONE, -ONE, ONE, -ONE]).scale_real(0.5);
        assert_eq!(zoo("dirac_3p1").unwrap().spin_z().unwrap(), half);
        assert!(matches!(
            zoo("dirac_1p1").unwrap().spin_z(),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn full_turn_is_minus_identity() {
        for (name, n) in [("dirac_2p1", 2), ("dirac_2f_2p1", 4), ("dirac_3p1", 4)] {
            let m = zoo(name).unwrap();
            let u = m
                .rotation_check(2.0 * PI, &vec![0.3; m.dim()])
                .unwrap()
                .spin_rotation;
            assert!(
                u.approx_eq(&ComplexMatrix::identity(n).scale_real(-1.0), 1e-12),
                "{name}"
            );
            assert!(m.full_turn().unwrap().approx_eq(&u, 1e-14));
        }
    }

    #[test]
    fn finite_rotation_invariance() {
        let m = zoo("dirac_2p1").unwrap().with_mass(0.5).unwrap();
        let check = m.rotation_check(PI / 3.0, &[1.0, 2.0]).unwrap();
        assert!(check.residual <= 1e-10, "{}", check.residual);
        assert!(matches!(
            zoo("dirac_1p1").unwrap().rotation_check(1.0, &[1.0]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn json_model_round_trip() {
        let text = r#"{
            "name": "custom_2f",
            "d": 2,
            "n": 4,
            "terms": [
                {"exponents": [1, 0], "matrix": "XI"},
                {"exponents": [0, 1], "matrix": "YI"},
                {"exponents": [0, 0], "matrix": "ZZ"}
            ],
            "mass": 0.5,
            "flavour_qubits": 1
        }"#;
        let m = model_from_json(text).unwrap();
        let z = zoo("dirac_2f_2p1").unwrap().with_mass(0.5).unwrap();
        assert_eq!(
            m.evaluate(&[0.2, -0.7]).unwrap(),
            z.evaluate(&[0.2, -0.7]).unwrap()
        );
    }

    #[test]
    fn json_explicit_entries_and_scaled_pauli() {
        let text = r#"{
            "name": "explicit",
            "d": 1,
            "n": 2,
            "terms": [
                {"exponents": [1], "matrix": [[0,0],[1,0],[1,0],[0,0]]},
                {"exponents": [0], "matrix": "2 * Z"}
            ]
        }"#;
        let m = model_from_json(text).unwrap();
        assert_eq!(m.mass(), 1.0);
        assert_eq!(
            m.evaluate(&[1.0]).unwrap(),
            &pm("X") + &pm("Z").scale_real(2.0)
        );
    }

    #[test]
    fn json_rejects_non_hermitian_coefficient() {
        let text = r#"{"name": "bad", "d": 1, "n": 2,
            "terms": [{"exponents": [1], "matrix": "i·X"}]}"#;
        assert!(matches!(model_from_json(text), Err(Error::InvalidModel(_))));
    }
}
