//! Pauli strings: tensor products of single-qubit Pauli factors carrying a
//! phase from {+1, -1, +i, -i}.
//!
//! The leftmost factor is the outermost tensor slot (Dirac space for the
//! built-in models), the rightmost the innermost (flavour space). Factor lists
//! order lexicographically with `I < X < Y < Z`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::{kron, ComplexMatrix, I, ONE, ZERO};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> ComplexMatrix {
        match self {
            Pauli::I => ComplexMatrix::identity(2),
            Pauli::X => ComplexMatrix::from_rows(&[[ZERO, ONE], [ONE, ZERO]]),
            Pauli::Y => ComplexMatrix::from_rows(&[[ZERO, -I], [I, ZERO]]),
            Pauli::Z => ComplexMatrix::from_rows(&[[ONE, ZERO], [ZERO, -ONE]]),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    /// Single-qubit product `self * other = phase * result`.
    pub fn product(self, other: Pauli) -> (Phase, Pauli) {
        use Pauli::*;
        match (self, other) {
            (I, p) | (p, I) => (Phase::ONE, p),
            (a, b) if a == b => (Phase::ONE, I),
            (X, Y) => (Phase::I, Z),
            (Y, Z) => (Phase::I, X),
            (Z, X) => (Phase::I, Y),
            (Y, X) => (Phase::MINUS_I, Z),
            (Z, Y) => (Phase::MINUS_I, X),
            (X, Z) => (Phase::MINUS_I, Y),
            _ => unreachable!(),
        }
    }

    /// Only `Y` has imaginary entries.
    pub fn is_real(self) -> bool {
        self != Pauli::Y
    }
}

/// A power of `i`: `Phase(k)` stands for `i^k`, `k` in `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_power(k: u32) -> Self {
        Phase((k % 4) as u8)
    }

    pub fn power(self) -> u8 {
        self.0
    }

    pub fn value(self) -> Complex64 {
        match self.0 {
            0 => ONE,
            1 => I,
            2 => -ONE,
            _ => -I,
        }
    }

    pub fn conj(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    /// Phases `±1` leave a Pauli string Hermitian; `±i` make it anti-Hermitian.
    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    factors: Vec<Pauli>,
    phase: Phase,
}

impl PauliString {
    pub fn new(factors: Vec<Pauli>, phase: Phase) -> Self {
        Self { factors, phase }
    }

    /// Phase-free string; always Hermitian.
    pub fn hermitian(factors: Vec<Pauli>) -> Self {
        Self::new(factors, Phase::ONE)
    }

    pub fn factors(&self) -> &[Pauli] {
        &self.factors
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        Self::new(self.factors.clone(), phase)
    }

    pub fn qubits(&self) -> usize {
        self.factors.len()
    }

    pub fn side(&self) -> usize {
        1 << self.factors.len()
    }

    pub fn y_count(&self) -> usize {
        self.factors.iter().filter(|&&p| p == Pauli::Y).count()
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    /// Materialises the string; entries lie in {0, ±1, ±i}.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let base = self
            .factors
            .iter()
            .fold(ComplexMatrix::identity(1), |acc, p| kron(&acc, &p.matrix()));
        base.scale(self.phase.value())
    }

    /// Symbolic product, exact.
    pub fn multiply(&self, other: &PauliString) -> PauliString {
        assert_eq!(self.qubits(), other.qubits(), "Pauli string lengths differ");
        let mut phase = self.phase * other.phase;
        let factors = self
            .factors
            .iter()
            .zip(&other.factors)
            .map(|(&a, &b)| {
                let (ph, p) = a.product(b);
                phase = phase * ph;
                p
            })
            .collect();
        PauliString::new(factors, phase)
    }

    /// True iff the strings commute (they either commute or anticommute).
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        let anti = self
            .factors
            .iter()
            .zip(&other.factors)
            .filter(|(&a, &b)| a != Pauli::I && b != Pauli::I && a != b)
            .count();
        anti % 2 == 0
    }

    pub fn factor_label(&self) -> String {
        self.factors.iter().map(|p| p.symbol()).collect()
    }
}

/// Every factor list of length `k` in lexicographic order (`4^k` entries).
pub fn all_factor_lists(k: usize) -> impl Iterator<Item = Vec<Pauli>> {
    (0..4usize.pow(k as u32)).map(move |mut idx| {
        let mut factors = vec![Pauli::I; k];
        for slot in factors.iter_mut().rev() {
            *slot = Pauli::ALL[idx % 4];
            idx /= 4;
        }
        factors
    })
}

/// Number of qubits for a side length, or an error when `n` is not `2^k`.
pub fn qubit_count(n: usize) -> Result<usize> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(n.trailing_zeros() as usize)
}

/// Coefficients `c_P = tr(P^† m) / n` of `m` in the Pauli basis. Coefficients
/// below `1e-14 * max(1, |m|_max)` are omitted.
pub fn pauli_decompose(m: &ComplexMatrix) -> Result<BTreeMap<Vec<Pauli>, Complex64>> {
    let k = qubit_count(m.side())?;
    let n = m.side() as f64;
    let cutoff = 1e-14 * m.max_abs().max(1.0);
    let mut out = BTreeMap::new();
    for factors in all_factor_lists(k) {
        let p = PauliString::hermitian(factors.clone()).to_matrix();
        // P is Hermitian: tr(P^† m) = tr(P m).
        let c = (&p * m).trace() / n;
        if c.norm() > cutoff {
            out.insert(factors, c);
        }
    }
    Ok(out)
}

/// Inverse of [`pauli_decompose`].
pub fn pauli_reconstruct(coeffs: &BTreeMap<Vec<Pauli>, Complex64>, qubits: usize) -> ComplexMatrix {
    let mut acc = ComplexMatrix::zeros(1 << qubits);
    for (factors, &c) in coeffs {
        assert_eq!(factors.len(), qubits, "factor list length mismatch");
        acc = &acc + &PauliString::hermitian(factors.clone()).to_matrix().scale(c);
    }
    acc
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase.0 {
            0 => "",
            1 => "i·",
            2 => "-",
            _ => "-i·",
        };
        write!(f, "{prefix}{}", self.factor_label())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Accepts forms like `XZ`, `-YX`, `i·ZY`, `i * ZY`, `-i YX`, `iIY`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::PauliParse(s.to_string());
        let mut rest = s.trim();
        let mut phase = Phase::ONE;
        if let Some(r) = rest.strip_prefix('-') {
            phase = Phase::MINUS_ONE;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        if let Some(r) = rest.strip_prefix('i') {
            phase = phase * Phase::I;
            rest = r.trim_start();
        }
        for sep in ["*", "·"] {
            if let Some(r) = rest.strip_prefix(sep) {
                rest = r.trim_start();
                break;
            }
        }
        if rest.is_empty() {
            return Err(err());
        }
        let factors = rest
            .chars()
            .map(Pauli::from_symbol)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(err)?;
        Ok(PauliString::new(factors, phase))
    }
}

impl Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
