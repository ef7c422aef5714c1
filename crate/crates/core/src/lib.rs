//! Discrete symmetries of low-dimensional Dirac Hamiltonians.
//!
//! Hamiltonians are polynomials in momentum with constant matrix coefficients.
//! For parity, time reversal, particle-hole conjugation, energy reflection and
//! chirality the crate solves the defining operator equation as a linear
//! system, enumerates the Pauli-string representatives of the solution space
//! and classifies them by the sign of their square.
//!
//! ```
//! use diracsym::hammodel::zoo;
//! use diracsym::symsolve::{solve, SymmetryKind, SymmetryQuery};
//!
//! let model = zoo("dirac_2p1").unwrap();
//! let query = SymmetryQuery::new(SymmetryKind::TimeReversal, model.dim(), true).unwrap();
//! let sol = solve(&model, &query);
//! assert_eq!(sol.representatives[0].string.to_string(), "i·Y");
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod hammodel;
pub mod matcore;
pub mod symsolve;

pub use error::{Error, Result};
