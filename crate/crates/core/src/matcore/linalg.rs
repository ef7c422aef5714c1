//! Decompositions backed by nalgebra: nullspaces, Hermitian eigenproblems and
//! unitary exponentials.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ComplexVector, ZERO};

/// Orthonormal basis of the numerical nullspace
/// `{x : |m x| <= tol * |m| * |x|}` of a (possibly rectangular) matrix, with
/// `|m|` the spectral norm. A zero matrix has the full space as nullspace.
pub fn nullspace(m: &DMatrix<Complex64>, tol: f64) -> Vec<ComplexVector> {
    let cols = m.ncols();
    if cols == 0 {
        return Vec::new();
    }
    // The thin SVD only yields min(rows, cols) right vectors; pad so the full
    // right-singular basis is available.
    let padded = if m.nrows() < cols {
        let mut p = DMatrix::from_element(cols, cols, ZERO);
        p.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let norm = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if norm == 0.0 {
        return (0..cols)
            .map(|i| {
                let mut e = vec![ZERO; cols];
                e[i] = Complex64::new(1.0, 0.0);
                e
            })
            .collect();
    }
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= tol * norm)
        .map(|(i, _)| v_t.row(i).iter().map(|z| z.conj()).collect())
        .collect()
}

/// Eigenvalues (ascending) and matching unit eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, Vec<ComplexVector>) {
    let eig = SymmetricEigen::new(m.to_nalgebra());
    let mut order: Vec<usize> = (0..m.side()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = order
        .iter()
        .map(|&i| eig.eigenvectors.column(i).iter().cloned().collect())
        .collect();
    (values, vectors)
}

/// `exp(i t h)` for Hermitian `h`.
pub fn expm_i_hermitian(h: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let (values, vectors) = hermitian_eigen(h);
    let n = h.side();
    let mut out = ComplexMatrix::zeros(n);
    for (lambda, v) in values.iter().zip(&vectors) {
        let w = Complex64::from_polar(1.0, t * lambda);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] += w * v[r] * v[c].conj();
            }
        }
    }
    out
}

pub fn vector_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
