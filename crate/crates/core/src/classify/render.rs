//! Human-readable renderings of operators.

use crate::matcore::{pauli_decompose, ComplexMatrix, Pauli, PauliString};

/// `m` as a sum of Pauli strings, e.g. `0.5·ZI` or `XI + i·YZ`.
pub fn pauli_expression(m: &ComplexMatrix) -> String {
    let Ok(coeffs) = pauli_decompose(m) else {
        return "<not a power-of-two matrix>".to_string();
    };
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = coeffs
        .iter()
        .map(|(factors, c)| {
            let label = PauliString::hermitian(factors.clone()).factor_label();
            let (re, im) = (c.re, c.im);
            let coef = if im.abs() < 1e-12 {
                fmt_real(re)
            } else if re.abs() < 1e-12 {
                match fmt_real(im).as_str() {
                    "" => "i·".to_string(),
                    "-" => "-i·".to_string(),
                    s => format!("{}i·", s.trim_end_matches('·')),
                }
            } else {
                format!("({re}{im:+}i)·")
            };
            format!("{coef}{label}")
        })
        .collect();
    parts.join(" + ").replace("+ -", "- ")
}

fn fmt_real(x: f64) -> String {
    if (x - 1.0).abs() < 1e-12 {
        String::new()
    } else if (x + 1.0).abs() < 1e-12 {
        "-".to_string()
    } else {
        format!("{x}·")
    }
}

/// `σ ⊗ τ` notation: the first factor in Dirac space, the rest in flavour space.
pub fn tensor_notation(s: &PauliString) -> String {
    let sub = |p: Pauli| match p {
        Pauli::I => '0',
        Pauli::X => 'x',
        Pauli::Y => 'y',
        Pauli::Z => 'z',
    };
    let prefix = match s.phase().power() {
        0 => "",
        1 => "i·",
        2 => "-",
        _ => "-i·",
    };
    let body: Vec<String> = s
        .factors()
        .iter()
        .enumerate()
        .map(|(k, &p)| format!("{}_{}", if k == 0 { 'σ' } else { 'τ' }, sub(p)))
        .collect();
    format!("{prefix}{}", body.join("⊗"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let ps = |s: &str| s.parse::<PauliString>().unwrap();
        assert_eq!(
            pauli_expression(&ps("ZI").to_matrix().scale_real(0.5)),
            "0.5·ZI"
        );
        assert_eq!(pauli_expression(&ps("i·YZ").to_matrix()), "i·YZ");
        assert_eq!(pauli_expression(&ps("-i·XZ").to_matrix()), "-i·XZ");
        assert_eq!(pauli_expression(&ComplexMatrix::zeros(2)), "0");
        assert_eq!(tensor_notation(&ps("i·XY")), "i·σ_x⊗τ_y");
    }
}
