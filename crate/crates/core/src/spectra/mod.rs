//! Dense symmetric eigensolver, spectrum bookkeeping and interlacing.

mod jacobi;
mod staircase;

pub use staircase::{psd_identity_check, PsdReport, StaircaseBlock};

use thiserror::Error;

use crate::config::Tolerances;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {diff:e}")]
    NotSymmetric { i: usize, j: usize, diff: f64 },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("child spectrum must be smaller than the parent: parent has {parent}, child has {child}")]
    DimensionMismatch { parent: usize, child: usize },
}

/// Eigenvalues sorted descending with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<f64>>,
    group_tol: f64,
}

/// A maximal run of sorted eigenvalues whose consecutive gaps are at most
/// the grouping tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    /// Index of the first (largest) eigenvalue of the run.
    pub start: usize,
    pub len: usize,
    pub mean: f64,
}

/// Result of counting eigenvalues near λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FloatMultiplicity {
    pub count: usize,
    /// Some eigenvalue sits just outside the counting window, so the count
    /// depends on the tolerance.
    pub ambiguous: bool,
}

impl Spectrum {
    /// A spectrum without eigenvectors, mostly for tests and interlacing.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, group_tol: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Self {
            eigenvalues,
            eigenvectors: Vec::new(),
            group_tol,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unit eigenvectors; `eigenvectors()[j]` belongs to `eigenvalues()[j]`.
    pub fn eigenvectors(&self) -> &[Vec<f64>] {
        &self.eigenvectors
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn group_tol(&self) -> f64 {
        self.group_tol
    }

    /// Single-linkage clusters over the sorted eigenvalues.
    pub fn clusters(&self) -> Vec<Cluster> {
        let mut out: Vec<Cluster> = Vec::new();
        let mut start = 0;
        for i in 1..=self.len() {
            if i == self.len() || self.eigenvalues[i - 1] - self.eigenvalues[i] > self.group_tol {
                let run = &self.eigenvalues[start..i];
                out.push(Cluster {
                    start,
                    len: i - start,
                    mean: run.iter().sum::<f64>() / run.len() as f64,
                });
                start = i;
            }
        }
        out
    }

    /// Clusters whose mean is farther than the grouping tolerance from zero.
    pub fn nonzero_clusters(&self) -> Vec<Cluster> {
        self.clusters()
            .into_iter()
            .filter(|c| c.mean.abs() > self.group_tol)
            .collect()
    }

    /// Index of the eigenvalue closest to `lambda`.
    pub fn closest(&self, lambda: f64) -> Option<usize> {
        (0..self.len()).min_by(|&i, &j| {
            (self.eigenvalues[i] - lambda)
                .abs()
                .total_cmp(&(self.eigenvalues[j] - lambda).abs())
        })
    }

    /// Largest entry of `A − V·diag(λ)·Vᵀ` in absolute value.
    pub fn reconstruction_residual(&self, a: &[Vec<f64>]) -> f64 {
        let n = self.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n)
                    .map(|k| self.eigenvectors[k][i] * self.eigenvalues[k] * self.eigenvectors[k][j])
                    .sum();
                worst = worst.max((a[i][j] - r).abs());
            }
        }
        worst
    }

    /// Largest entry of `VᵀV − I` in absolute value.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, x) in self.eigenvectors.iter().enumerate() {
            for (j, y) in self.eigenvectors.iter().enumerate() {
                let dot: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Eigen-decomposition of a real symmetric matrix.
///
/// Eigenvalues are sorted descending; each eigenvector is scaled so that
/// its first entry larger than `zero_tol` in magnitude is positive.
pub fn eig_symmetric(a: &[Vec<f64>], tol: &Tolerances) -> Result<Spectrum, SpectraError> {
    let (values, vectors) = jacobi::jacobi(a, tol)?;
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    let eigenvalues = order.iter().map(|&i| values[i]).collect();
    let eigenvectors = order
        .iter()
        .map(|&i| {
            let mut x = vectors[i].clone();
            normalize_sign(&mut x, tol.zero_tol);
            x
        })
        .collect();
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        group_tol: tol.group_tol,
    })
}

/// Spectrum of the adjacency matrix of `g`.
pub fn graph_spectrum(g: &Graph, tol: &Tolerances) -> Result<Spectrum, SpectraError> {
    eig_symmetric(&g.adjacency_matrix(), tol)
}

/// Scales `x` to unit length with its first significant entry positive.
pub fn normalize_sign(x: &mut [f64], zero_tol: f64) {
    let norm = x.iter().map(|e| e * e).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let lead = x.iter().copied().find(|e| e.abs() > zero_tol).unwrap_or(1.0);
    let scale = lead.signum() / norm;
    for e in x.iter_mut() {
        *e *= scale;
    }
}

/// Counts eigenvalues within `group_tol` of `lambda`.
pub fn float_multiplicity(s: &Spectrum, lambda: f64, tol: &Tolerances) -> FloatMultiplicity {
    let mut count = 0;
    let mut ambiguous = false;
    for &e in &s.eigenvalues {
        let d = (e - lambda).abs();
        if d <= s.group_tol {
            count += 1;
        } else if d <= tol.ambiguity_factor * s.group_tol {
            ambiguous = true;
        }
    }
    FloatMultiplicity { count, ambiguous }
}

/// Cauchy interlacing between the descending eigenvalues of a graph
/// (`parent`, length n) and of an induced subgraph (`child`, length m < n):
/// `λᵢ ≥ μᵢ ≥ λ_{n−m+i}` up to `tol`.
pub fn check_interlacing(parent: &[f64], child: &[f64], tol: f64) -> Result<bool, SpectraError> {
    let (n, m) = (parent.len(), child.len());
    if m >= n {
        return Err(SpectraError::DimensionMismatch { parent: n, child: m });
    }
    Ok((0..m).all(|i| parent[i] + tol >= child[i] && child[i] + tol >= parent[n - m + i]))
}
