use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityAxis {
    /// `(x, y) -> (x, -y)`
    X,
    /// `(x, y) -> (-x, y)`
    Y,
    /// Full inversion `p -> -p`.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryKind {
    Parity(ParityAxis),
    TimeReversal,
    ParticleHole,
    EnergyReflection,
    Chirality,
}

impl SymmetryKind {
    pub fn label(self) -> &'static str {
        match self {
            SymmetryKind::Parity(ParityAxis::X) => "P_x",
            SymmetryKind::Parity(ParityAxis::Y) => "P_y",
            SymmetryKind::Parity(ParityAxis::Full) => "P",
            SymmetryKind::TimeReversal => "T",
            SymmetryKind::ParticleHole => "C",
            SymmetryKind::EnergyReflection => "M",
            SymmetryKind::Chirality => "chi",
        }
    }

    /// Time reversal and particle-hole conjugation carry complex conjugation.
    pub fn is_antiunitary(self) -> bool {
        matches!(
            self,
            SymmetryKind::TimeReversal | SymmetryKind::ParticleHole
        )
    }

    pub fn energy_sign(self) -> f64 {
        match self {
            SymmetryKind::ParticleHole | SymmetryKind::EnergyReflection => -1.0,
            _ => 1.0,
        }
    }

    /// The symmetries audited for a model in `dim` spatial dimensions: the two
    /// axis reflections in 2D, full inversion otherwise.
    pub fn standard_set(dim: usize) -> Vec<SymmetryKind> {
        let mut kinds = if dim == 2 {
            vec![
                SymmetryKind::Parity(ParityAxis::X),
                SymmetryKind::Parity(ParityAxis::Y),
            ]
        } else {
            vec![SymmetryKind::Parity(ParityAxis::Full)]
        };
        kinds.extend([
            SymmetryKind::TimeReversal,
            SymmetryKind::ParticleHole,
            SymmetryKind::EnergyReflection,
            SymmetryKind::Chirality,
        ]);
        kinds
    }
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SymmetryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "P_x" | "Px" => SymmetryKind::Parity(ParityAxis::X),
            "P_y" | "Py" => SymmetryKind::Parity(ParityAxis::Y),
            "P" => SymmetryKind::Parity(ParityAxis::Full),
            "T" => SymmetryKind::TimeReversal,
            "C" => SymmetryKind::ParticleHole,
            "M" => SymmetryKind::EnergyReflection,
            "chi" | "χ" => SymmetryKind::Chirality,
            _ => return Err(Error::UnknownSymmetry(s.to_string())),
        })
    }
}

impl Serialize for SymmetryKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// A symmetry to solve for, with the action it induces on momentum.
///
/// The defining equation is `D H^(c)(p) D^-1 = s H(S p)`, where `^(c)` is
/// entrywise conjugation iff `conjugate`, `s` the energy sign and `S` the
/// momentum map. Chirality instead imposes the generator conditions
/// `[D, v_j] = 0` and `{D, beta} = 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryQuery {
    pub kind: SymmetryKind,
    pub conjugate: bool,
    pub momentum_map: Vec<Vec<f64>>,
    pub energy_sign: f64,
    pub massless: bool,
}

impl SymmetryQuery {
    pub fn new(kind: SymmetryKind, dim: usize, massless: bool) -> Result<Self> {
        let diag = |signs: Vec<f64>| -> Vec<Vec<f64>> {
            (0..signs.len())
                .map(|i| {
                    (0..signs.len())
                        .map(|j| if i == j { signs[i] } else { 0.0 })
                        .collect()
                })
                .collect()
        };
        let momentum_map = match kind {
            SymmetryKind::Parity(axis @ (ParityAxis::X | ParityAxis::Y)) => {
                if dim != 2 {
                    return Err(Error::Unsupported(format!(
                        "axis reflection {kind} needs d = 2, model has d = {dim}"
                    )));
                }
                if axis == ParityAxis::X {
                    diag(vec![1.0, -1.0])
                } else {
                    diag(vec![-1.0, 1.0])
                }
            }
            SymmetryKind::Parity(ParityAxis::Full)
            | SymmetryKind::TimeReversal
            | SymmetryKind::ParticleHole => diag(vec![-1.0; dim]),
            SymmetryKind::EnergyReflection | SymmetryKind::Chirality => diag(vec![1.0; dim]),
        };
        Ok(Self {
            kind,
            conjugate: kind.is_antiunitary(),
            momentum_map,
            energy_sign: kind.energy_sign(),
            massless,
        })
    }

    pub fn apply_map(&self, p: &[f64]) -> Vec<f64> {
        self.momentum_map
            .iter()
            .map(|row| row.iter().zip(p).map(|(s, x)| s * x).sum())
            .collect()
    }
}
