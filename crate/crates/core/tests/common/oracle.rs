//! Brute-force reference: materialise every Pauli string with plain nested
//! loops and test the defining equation directly at random momenta. Shares
//! nothing with the solver except the model's own `evaluate_with`.

use std::collections::BTreeSet;

use diracsym::hammodel::HamiltonianModel;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Dense = Vec<Vec<Complex64>>;

const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pauli(letter: char) -> Dense {
    let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
    match letter {
        'I' => vec![vec![o, z], vec![z, o]],
        'X' => vec![vec![z, o], vec![o, z]],
        'Y' => vec![vec![z, c(0.0, -1.0)], vec![c(0.0, 1.0), z]],
        'Z' => vec![vec![o, z], vec![z, -o]],
        _ => unreachable!(),
    }
}

fn tensor(a: &Dense, b: &Dense) -> Dense {
    let (na, nb) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0, 0.0); na * nb]; na * nb];
    for i in 0..na {
        for j in 0..na {
            for k in 0..nb {
                for l in 0..nb {
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn product(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![c(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn max_diff(a: &Dense, b: &Dense) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// The matrix of the string written with letters, e.g. `"XY"`.
pub fn string_matrix(label: &str) -> Dense {
    let mut m = vec![vec![c(1.0, 0.0)]];
    for ch in label.chars() {
        m = tensor(&m, &pauli(ch));
    }
    m
}

fn all_labels(qubits: usize) -> Vec<String> {
    let mut labels = vec![String::new()];
    for _ in 0..qubits {
        labels = labels
            .iter()
            .flat_map(|l| LETTERS.iter().map(move |ch| format!("{l}{ch}")))
            .collect();
    }
    labels
}

fn hamiltonian(model: &HamiltonianModel, p: &[f64], massless: bool) -> Dense {
    let h = model.evaluate_with(p, massless).unwrap();
    let n = h.side();
    (0..n)
        .map(|i| (0..n).map(|j| h[(i, j)]).collect())
        .collect()
}

/// Symmetry names used by the oracle: `P_x`, `P_y`, `P`, `T`, `C`, `M`, `chi`.
pub fn symmetry_names(dim: usize) -> Vec<&'static str> {
    let mut v = if dim == 2 {
        vec!["P_x", "P_y"]
    } else {
        vec!["P"]
    };
    v.extend(["T", "C", "M", "chi"]);
    v
}

/// Momentum map, complex conjugation and energy sign straight from the
/// textbook definitions.
fn action(name: &str, p: &[f64]) -> (Vec<f64>, bool, f64) {
    let neg: Vec<f64> = p.iter().map(|x| -x).collect();
    match name {
        "P_x" => (vec![p[0], -p[1]], false, 1.0),
        "P_y" => (vec![-p[0], p[1]], false, 1.0),
        "P" => (neg, false, 1.0),
        "T" => (neg, true, 1.0),
        "C" => (neg, true, -1.0),
        "M" => (p.to_vec(), false, -1.0),
        _ => unreachable!("{name}"),
    }
}

fn satisfies(
    model: &HamiltonianModel,
    name: &str,
    massless: bool,
    d: &Dense,
    momenta: &[Vec<f64>],
) -> bool {
    const TOL: f64 = 1e-9;
    if name == "chi" {
        let beta = hamiltonian(model, &vec![0.0; model.dim()], false);
        let anti: Dense = {
            let (a, b) = (product(d, &beta), product(&beta, d));
            a.iter()
                .zip(&b)
                .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
                .collect()
        };
        let zero = vec![vec![c(0.0, 0.0); d.len()]; d.len()];
        if max_diff(&anti, &zero) > TOL {
            return false;
        }
        return momenta.iter().all(|p| {
            let h = hamiltonian(model, p, true);
            max_diff(&product(d, &h), &product(&h, d)) <= TOL
        });
    }
    momenta.iter().all(|p| {
        let (sp, conj, sign) = action(name, p);
        let mut h = hamiltonian(model, p, massless);
        if conj {
            h = h
                .iter()
                .map(|r| r.iter().map(|z| z.conj()).collect())
                .collect();
        }
        let hs: Dense = hamiltonian(model, &sp, massless)
            .iter()
            .map(|r| r.iter().map(|z| z * sign).collect())
            .collect();
        max_diff(&product(d, &h), &product(&hs, d)) <= TOL
    })
}

/// Letters of every Pauli string (phase-free; any global phase of a solution
/// is again a solution) that satisfies the symmetry's defining equation.
pub fn oracle_strings(
    model: &HamiltonianModel,
    name: &str,
    massless: bool,
    seed: u64,
) -> BTreeSet<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let momenta: Vec<Vec<f64>> = (0..8)
        .map(|_| {
            (0..model.dim())
                .map(|_| rng.random_range(-2.0..2.0))
                .collect()
        })
        .collect();
    let qubits = model.side().trailing_zeros() as usize;
    all_labels(qubits)
        .into_iter()
        .filter(|l| satisfies(model, name, massless, &string_matrix(l), &momenta))
        .collect()
}
