//! Small dense real-symmetric matrices and their spectra.
//!
//! Blocks in this crate are at most a few rows, so the solver favors
//! robustness over asymptotics: closed forms for 1x1 and 2x2, cyclic Jacobi
//! rotations with an accumulated eigenvector matrix for anything larger.

use crate::error::{Error, Result};
use crate::series::KahanSum;

const ASYMMETRY_TOL: f64 = 1e-12;
const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 60;

/// Dense symmetric matrix, full row-major storage. `set` writes both
/// triangles, so matrices built through it are symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

/// Spectral decomposition: `values[k]` descending, `vectors[k]` the matching
/// orthonormal eigenvector.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    /// Validate and adopt a full matrix; rejects non-square data, non-finite
    /// entries, and asymmetry beyond tolerance.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotHermitian {
                    max_asymmetry: f64::INFINITY,
                });
            }
            data.extend_from_slice(row);
        }
        let m = Self { dim, data };
        for &v in &m.data {
            if !v.is_finite() {
                return Err(Error::NotHermitian {
                    max_asymmetry: f64::INFINITY,
                });
            }
        }
        let asym = m.max_asymmetry();
        let scale = m.data.iter().fold(1.0_f64, |acc, v| acc.max(v.abs()));
        if asym > ASYMMETRY_TOL * scale {
            return Err(Error::NotHermitian {
                max_asymmetry: asym,
            });
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Symmetric write of (i, j) and (j, i).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
        self.data[j * self.dim + i] = value;
    }

    pub fn trace(&self) -> f64 {
        let mut acc = KahanSum::new();
        for i in 0..self.dim {
            acc.add(self.get(i, i));
        }
        acc.value()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn max_entry_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Eigenvalues sorted descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(self.eigen_decomposition()?.values)
    }

    /// Full spectral decomposition, eigenvalues descending.
    pub fn eigen_decomposition(&self) -> Result<Eigen> {
        match self.dim {
            0 => Ok(Eigen {
                values: vec![],
                vectors: vec![],
            }),
            1 => Ok(Eigen {
                values: vec![self.get(0, 0)],
                vectors: vec![vec![1.0]],
            }),
            2 => Ok(self.eigen_2x2()),
            _ => self.eigen_jacobi(),
        }
    }

    /// Closed form for a symmetric 2x2 block, stable for near-degenerate and
    /// near-diagonal inputs.
    fn eigen_2x2(&self) -> Eigen {
        let (a, b, d) = (self.get(0, 0), self.get(0, 1), self.get(1, 1));
        if b == 0.0 {
            return if a >= d {
                Eigen {
                    values: vec![a, d],
                    vectors: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
                }
            } else {
                Eigen {
                    values: vec![d, a],
                    vectors: vec![vec![0.0, 1.0], vec![1.0, 0.0]],
                }
            };
        }
        let mean = 0.5 * (a + d);
        let half_gap = 0.5 * (a - d);
        let radius = half_gap.hypot(b);
        let hi = mean + radius;
        let lo = mean - radius;
        // Eigenvector for hi: (b, hi - a), unless that direction degenerates.
        let mut v_hi = [b, hi - a];
        if v_hi[0].abs().max(v_hi[1].abs()) < f64::MIN_POSITIVE {
            v_hi = [hi - d, b];
        }
        let norm = v_hi[0].hypot(v_hi[1]);
        let v_hi = [v_hi[0] / norm, v_hi[1] / norm];
        let v_lo = [-v_hi[1], v_hi[0]];
        Eigen {
            values: vec![hi, lo],
            vectors: vec![v_hi.to_vec(), v_lo.to_vec()],
        }
    }

    fn off_diagonal_norm(a: &[f64], dim: usize) -> f64 {
        let mut acc = 0.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let v = a[i * dim + j];
                acc += 2.0 * v * v;
            }
        }
        acc.sqrt()
    }

    /// Cyclic Jacobi rotations until the off-diagonal norm drops below
    /// tolerance (scaled by the matrix magnitude).
    fn eigen_jacobi(&self) -> Result<Eigen> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
        let scale = self
            .data
            .iter()
            .fold(0.0_f64, |acc, x| acc.max(x.abs()))
            .max(1.0);
        let tol = JACOBI_OFF_TOL * scale;

        for _sweep in 0..JACOBI_MAX_SWEEPS {
            if Self::off_diagonal_norm(&a, n) <= tol {
                break;
            }
            for p in 0..(n - 1) {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let theta = 0.5 * (aqq - app) / apq;
                    let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;

                    for k in 0..n {
                        let akp = a[k * n + p];
                        let akq = a[k * n + q];
                        a[k * n + p] = c * akp - s * akq;
                        a[k * n + q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p * n + k];
                        let aqk = a[q * n + k];
                        a[p * n + k] = c * apk - s * aqk;
                        a[q * n + k] = s * apk + c * aqk;
                    }
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }

        let off = Self::off_diagonal_norm(&a, n);
        if off > tol {
            return Err(Error::EigenNoConvergence { dim: n, off_norm: off });
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| {
            a[j * n + j]
                .partial_cmp(&a[i * n + i])
                .expect("finite eigenvalues")
        });
        let values = order.iter().map(|&i| a[i * n + i]).collect();
        let vectors = order
            .iter()
            .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
            .collect();
        Ok(Eigen { values, vectors })
    }
}

impl Eigen {
    /// Rebuild sum_k values[k] * v_k v_k^T; used to check decompositions.
    pub fn reconstruct(&self) -> SymMatrix {
        let dim = self.vectors.first().map_or(0, Vec::len);
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let mut acc = KahanSum::new();
                for (value, vector) in self.values.iter().zip(&self.vectors) {
                    acc.add(value * vector[i] * vector[j]);
                }
                m.set(i, j, acc.value());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_projector_spectrum() {
        // [[1,1],[1,1]]/2 has eigenvalues {1, 0}.
        let mut m = SymMatrix::zeros(2);
        m.set(0, 0, 0.5);
        m.set(0, 1, 0.5);
        m.set(1, 1, 0.5);
        let eigs = m.eigenvalues().unwrap();
        assert!((eigs[0] - 1.0).abs() < 1e-15);
        assert!(eigs[1].abs() < 1e-15);
    }

    #[test]
    fn pauli_x_spectrum() {
        let mut m = SymMatrix::zeros(2);
        m.set(0, 1, 1.0);
        let eigs = m.eigenvalues().unwrap();
        assert_eq!(eigs, vec![1.0, -1.0]);
    }

    #[test]
    fn jacobi_matches_known_3x3() {
        // Same fixture as classic Jacobi references: eigenvalues {2, 1, 11}.
        let m = SymMatrix::from_rows(&[
            vec![2.0, 0.0, 0.0],
            vec![0.0, 3.0, 4.0],
            vec![0.0, 4.0, 9.0],
        ])
        .unwrap();
        let eigs = m.eigenvalues().unwrap();
        assert!((eigs[0] - 11.0).abs() < 1e-13);
        assert!((eigs[1] - 2.0).abs() < 1e-13);
        assert!((eigs[2] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn decomposition_reconstructs_input() {
        let m = SymMatrix::from_rows(&[
            vec![1.0, 2.0, 3.0, 0.5],
            vec![2.0, 3.0, 2.0, -1.0],
            vec![3.0, 2.0, 2.0, 0.25],
            vec![0.5, -1.0, 0.25, -2.0],
        ])
        .unwrap();
        let eig = m.eigen_decomposition().unwrap();
        assert!(eig.reconstruct().max_entry_diff(&m) < 1e-12);
        // Orthonormality of the eigenbasis.
        for i in 0..4 {
            for j in 0..4 {
                let dot: f64 = eig.vectors[i]
                    .iter()
                    .zip(&eig.vectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn asymmetric_input_is_a_contract_violation() {
        let err = SymMatrix::from_rows(&[vec![1.0, 0.5], vec![0.4, 1.0]]).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));
        assert!(SymMatrix::from_rows(&[vec![1.0, f64::NAN], vec![f64::NAN, 1.0]]).is_err());
    }

    #[test]
    fn trace_is_diagonal_sum() {
        let mut m = SymMatrix::zeros(3);
        m.set(0, 0, 0.25);
        m.set(1, 1, 0.5);
        m.set(2, 2, 0.125);
        m.set(0, 2, 7.0);
        assert!((m.trace() - 0.875).abs() < 1e-16);
    }

    #[test]
    fn scaling_scales_spectrum() {
        let m = SymMatrix::from_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let doubled = m.scaled(2.0);
        assert!((doubled.trace() - 2.0 * m.trace()).abs() < 1e-16);
        let eigs = doubled.eigenvalues().unwrap();
        assert!((eigs[0] - 2.0).abs() < 1e-15);
    }
}
