//! Solving the defining equations of discrete symmetries.
//!
//! For a model and a [`SymmetryQuery`] the defining equation is linear in the
//! unknown representation matrix `D`, so the full solution space is the
//! nullspace of a vectorised system. Pauli strings in that nullspace are the
//! canonical representatives; two representatives are equivalent iff they
//! differ by a unit-modulus scalar.

mod constraints;
mod query;
mod relations;
mod solve;

pub use constraints::{build_constraints, ConstraintBlock, ConstraintSystem};
pub use query::{ParityAxis, SymmetryKind, SymmetryQuery};
pub use relations::{
    flavour_z, label_particle_hole, preferred_solution, relation_check, unit_proportionality, Pair,
    RelationReport, RelationResult, RelationStatus,
};
pub use solve::{
    canonical_phase, classify_square, defining_residual, solve, solve_with_tol, Representative,
    SquareSign, SymmetrySolution,
};

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::error::Error;
    use crate::hammodel::zoo;
    use crate::matcore::{ComplexMatrix, PauliString};

    fn pm(s: &str) -> ComplexMatrix {
        s.parse::<PauliString>().unwrap().to_matrix()
    }

    fn query(
        model: &str,
        kind: SymmetryKind,
        massless: bool,
    ) -> (crate::hammodel::HamiltonianModel, SymmetryQuery) {
        let m = zoo(model).unwrap();
        let q = SymmetryQuery::new(kind, m.dim(), massless).unwrap();
        (m, q)
    }

    fn labels(sol: &SymmetrySolution) -> Vec<String> {
        sol.representatives
            .iter()
            .map(|r| r.string.to_string())
            .collect()
    }

    #[test]
    fn query_invariants() {
        for kind in SymmetryKind::standard_set(2) {
            let q = SymmetryQuery::new(kind, 2, false).unwrap();
            assert_eq!(
                q.conjugate,
                matches!(
                    kind,
                    SymmetryKind::TimeReversal | SymmetryKind::ParticleHole
                )
            );
            let expected_sign = match kind {
                SymmetryKind::ParticleHole | SymmetryKind::EnergyReflection => -1.0,
                _ => 1.0,
            };
            assert_eq!(q.energy_sign, expected_sign);
        }
        let px = SymmetryQuery::new(SymmetryKind::Parity(ParityAxis::X), 2, false).unwrap();
        assert_eq!(px.apply_map(&[1.0, 2.0]), vec![1.0, -2.0]);
        let py = SymmetryQuery::new(SymmetryKind::Parity(ParityAxis::Y), 2, false).unwrap();
        assert_eq!(py.apply_map(&[1.0, 2.0]), vec![-1.0, 2.0]);
        assert!(matches!(
            SymmetryQuery::new(SymmetryKind::Parity(ParityAxis::X), 3, false),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            "Q".parse::<SymmetryKind>(),
            Err(Error::UnknownSymmetry(_))
        ));
    }

    #[test]
    fn constraints_time_reversal_massless_2p1() {
        let (m, q) = query("dirac_2p1", SymmetryKind::TimeReversal, true);
        let sys = build_constraints(&m, &q);
        assert_eq!(sys.blocks().len(), 2);
        // D sigma_x* = -sigma_x D and D sigma_y* = -sigma_y D.
        let block = |axis| {
            let mono = crate::hammodel::Monomial::linear(2, axis);
            sys.blocks()
                .iter()
                .find(|b| b.monomial == mono)
                .unwrap()
                .clone()
        };
        assert_eq!(block(0).lhs, pm("X").conj());
        assert_eq!(block(0).rhs, -&pm("X"));
        assert_eq!(block(1).lhs, pm("Y").conj());
        assert_eq!(block(1).rhs, -&pm("Y"));
        // sigma_y commutes with sigma_y, anticommutes with sigma_x: satisfies both.
        assert_eq!(sys.residual(&pm("Y")), 0.0);
    }

    #[test]
    fn constraints_time_reversal_massive_adds_mass_block() {
        let (m, q) = query("dirac_2p1", SymmetryKind::TimeReversal, false);
        let sys = build_constraints(&m, &q);
        assert_eq!(sys.blocks().len(), 3);
        let mass = sys
            .blocks()
            .iter()
            .find(|b| b.monomial.is_constant())
            .unwrap();
        assert_eq!(mass.lhs, pm("Z"));
        assert_eq!(mass.rhs, pm("Z"));
    }

    #[test]
    fn constraints_parity_1p1() {
        let (m, q) = query("dirac_1p1", SymmetryKind::Parity(ParityAxis::Full), false);
        let sys = build_constraints(&m, &q);
        assert_eq!(sys.blocks().len(), 2);
        assert_eq!(sys.residual(&pm("Z")), 0.0);
        assert!(sys.residual(&pm("X")) > 1.0);
    }

    #[test]
    fn solve_time_reversal_2p1() {
        let (m, q) = query("dirac_2p1", SymmetryKind::TimeReversal, true);
        let sol = solve(&m, &q);
        assert_eq!(sol.nullity, 1);
        assert_eq!(labels(&sol), ["i·Y"]);
        assert_eq!(sol.representatives[0].square, SquareSign::Minus);

        let (m, q) = query("dirac_2p1", SymmetryKind::TimeReversal, false);
        let sol = solve(&m, &q);
        assert_eq!(sol.nullity, 0);
        assert!(!sol.exists);
    }

    #[test]
    fn solve_chirality_2p1_does_not_exist() {
        for massless in [false, true] {
            let (m, q) = query("dirac_2p1", SymmetryKind::Chirality, massless);
            assert!(!solve(&m, &q).exists);
        }
    }

    #[test]
    fn solve_two_flavour_time_reversal() {
        let (m, q) = query("dirac_2f_2p1", SymmetryKind::TimeReversal, false);
        let sol = solve(&m, &q);
        assert_eq!(sol.nullity, 2);
        let pair = Pair::by_square(&sol).unwrap();
        assert!(pair
            .plus
            .matrix()
            .proportionality(&pm("YY"), 1e-12)
            .is_some());
        assert!(pair
            .minus
            .matrix()
            .proportionality(&pm("-i·YX"), 1e-12)
            .is_some());
    }

    #[test]
    fn solve_single_flavour_particle_hole_and_energy_reflection() {
        let (m, q) = query("dirac_2p1", SymmetryKind::ParticleHole, false);
        let sol = solve(&m, &q);
        assert_eq!(labels(&sol), ["X"]);
        assert_eq!(sol.representatives[0].square, SquareSign::Plus);

        let (m, q) = query("dirac_2p1", SymmetryKind::EnergyReflection, true);
        let sol = solve(&m, &q);
        assert_eq!(labels(&sol), ["Z"]);
        assert_eq!(sol.representatives[0].square, SquareSign::Plus);
    }

    #[test]
    fn solve_dirac_1p1_all_five() {
        let expect = [
            (SymmetryKind::Parity(ParityAxis::Full), "Z"),
            (SymmetryKind::TimeReversal, "Z"),
            (SymmetryKind::ParticleHole, "X"),
            (SymmetryKind::EnergyReflection, "Y"),
            (SymmetryKind::Chirality, "X"),
        ];
        for (kind, want) in expect {
            let (m, q) = query("dirac_1p1", kind, false);
            let sol = solve(&m, &q);
            assert_eq!(labels(&sol), [want], "{kind}");
            assert_eq!(sol.representatives[0].square, SquareSign::Plus, "{kind}");
        }
    }

    #[test]
    fn solve_dirac_3p1_time_reversal() {
        let (m, q) = query("dirac_3p1", SymmetryKind::TimeReversal, false);
        let sol = solve(&m, &q);
        assert_eq!(sol.representatives.len(), 1);
        // -i v_1 v_3 from the model's own velocity matrices.
        let v1 = m.velocity(0).unwrap();
        let v3 = m.velocity(2).unwrap();
        let dt = (&v1 * &v3).scale(Complex64::new(0.0, -1.0));
        assert!(sol.representatives[0]
            .matrix()
            .proportionality(&dt, 1e-12)
            .is_some());
        assert_eq!(sol.representatives[0].square, SquareSign::Minus);
    }

    #[test]
    fn two_flavour_each_duplicated_symmetry_has_two_representatives() {
        for kind in SymmetryKind::standard_set(2) {
            let (m, q) = query("dirac_2f_2p1", kind, false);
            let sol = solve(&m, &q);
            assert_eq!(sol.representatives.len(), 2, "{kind}");
            assert_eq!(sol.nullity, 2, "{kind}");
        }
    }

    #[test]
    fn classify_square_examples() {
        assert_eq!(
            classify_square(&pm("i·Y"), true).unwrap(),
            SquareSign::Minus
        );
        assert_eq!(classify_square(&pm("X"), true).unwrap(), SquareSign::Plus);
        let reflection = (&pm("X") + &pm("Z")).scale_real(std::f64::consts::FRAC_1_SQRT_2);
        assert_eq!(
            classify_square(&reflection, false).unwrap(),
            SquareSign::Plus
        );
        let rot = (&pm("I") + &pm("i·Y")).scale_real(std::f64::consts::FRAC_1_SQRT_2);
        assert_eq!(classify_square(&rot, false).unwrap(), SquareSign::NonScalar);
        assert!(matches!(
            classify_square(&pm("X").scale_real(2.0), false),
            Err(Error::NotUnitary(_))
        ));
    }

    #[test]
    fn relations_single_flavour_2p1() {
        let report = relation_check(&zoo("dirac_2p1").unwrap());
        let first = &report.relations[0];
        assert!(
            matches!(first.status, RelationStatus::Holds { .. }),
            "{first:?}"
        );
        // χ does not exist in (2+1)D.
        assert!(matches!(
            report.relations[1].status,
            RelationStatus::Skipped { .. }
        ));
        // Direct: sigma_x (i sigma_y)* = sigma_x (i sigma_y) ∝ sigma_z.
        let direct = &pm("X") * &pm("i·Y").conj();
        assert!(direct.proportionality(&pm("Z"), 1e-12).is_some());
    }

    #[test]
    fn relations_two_flavour_all_hold() {
        let report = relation_check(&zoo("dirac_2f_2p1").unwrap());
        assert!(report.all_hold(), "{report:#?}");
        let held = report
            .relations
            .iter()
            .filter(|r| matches!(r.status, RelationStatus::Holds { .. }))
            .count();
        // 4 (M from C, T) + 4 (χ from M) + 6 flavour products.
        assert_eq!(held, 14);
    }

    #[test]
    fn relations_dirac_3p1() {
        let report = relation_check(&zoo("dirac_3p1").unwrap());
        assert!(report.all_hold());
        assert!(matches!(
            report.relations[0].status,
            RelationStatus::Holds { .. }
        ));
    }
}
