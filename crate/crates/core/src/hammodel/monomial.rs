use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A product `p_1^a_1 ... p_d^a_d` of momentum components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn constant(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    /// The monomial `p_axis`.
    pub fn linear(dim: usize, axis: usize) -> Self {
        let mut e = vec![0; dim];
        e[axis] = 1;
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn eval(&self, p: &[f64]) -> f64 {
        self.exponents
            .iter()
            .zip(p)
            .map(|(&e, &x)| x.powi(e as i32))
            .product()
    }

    /// Expands the monomial after the substitution `p_j -> sum_k map[j][k] p_k`.
    pub fn substitute(&self, map: &[Vec<f64>]) -> BTreeMap<Monomial, f64> {
        let d = self.dim();
        let mut poly = BTreeMap::from([(Monomial::constant(d), 1.0)]);
        for (j, &e) in self.exponents.iter().enumerate() {
            for _ in 0..e {
                let mut next = BTreeMap::new();
                for (mono, c) in &poly {
                    for (k, &s) in map[j].iter().enumerate() {
                        if s == 0.0 {
                            continue;
                        }
                        let mut exps = mono.exponents.clone();
                        exps[k] += 1;
                        *next.entry(Monomial::new(exps)).or_insert(0.0) += c * s;
                    }
                }
                poly = next;
            }
        }
        poly.retain(|_, c| c.abs() > 1e-15);
        poly
    }
}

fn axis_name(dim: usize, axis: usize) -> String {
    if dim <= 3 {
        format!("p_{}", ['x', 'y', 'z'][axis])
    } else {
        format!("p_{}", axis + 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let d = self.dim();
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| match e {
                1 => axis_name(d, k),
                _ => format!("{}^{}", axis_name(d, k), e),
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_flips_odd_powers() {
        let map = vec![vec![1.0, 0.0], vec![0.0, -1.0]];
        let py = Monomial::linear(2, 1);
        assert_eq!(py.substitute(&map), BTreeMap::from([(py.clone(), -1.0)]));
        let py2 = Monomial::new(vec![0, 2]);
        assert_eq!(py2.substitute(&map), BTreeMap::from([(py2.clone(), 1.0)]));
    }

    #[test]
    fn rotation_mixes_components() {
        // p_x -> (p_x + p_y)/sqrt2 squared gives (p_x^2 + 2 p_x p_y + p_y^2)/2.
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let map = vec![vec![r, r], vec![-r, r]];
        let got = Monomial::new(vec![2, 0]).substitute(&map);
        assert!((got[&Monomial::new(vec![2, 0])] - 0.5).abs() < 1e-15);
        assert!((got[&Monomial::new(vec![1, 1])] - 1.0).abs() < 1e-15);
        assert!((got[&Monomial::new(vec![0, 2])] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::constant(2).to_string(), "1");
        assert_eq!(Monomial::linear(3, 2).to_string(), "p_z");
        assert_eq!(Monomial::new(vec![1, 2]).to_string(), "p_x·p_y^2");
    }
}
