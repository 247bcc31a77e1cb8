//! Exact arithmetic over ℚ and ℚ(√5), and the exact linear algebra used to
//! certify eigenvalue multiplicities.

mod matrix;
mod quadratic;

pub use matrix::ExactMatrix;
pub use quadratic::QuadraticNumber;

use thiserror::Error;

use crate::graph::Graph;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("matrix rows have different lengths")]
    RaggedRows,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// `A(g) − λI` as an exact matrix, or `None` for the empty graph.
pub fn shifted_adjacency(g: &Graph, lambda: &QuadraticNumber) -> Option<ExactMatrix> {
    let n = g.n();
    let mut m = ExactMatrix::zeros(n, n).ok()?;
    let one = QuadraticNumber::one();
    let minus_lambda = -lambda;
    for v in 0..n {
        for &u in g.neighbors(v) {
            m.set(v, u, one.clone());
        }
        m.set(v, v, minus_lambda.clone());
    }
    Some(m)
}

/// `mul(λ, g) = n − rank(A(g) − λI)`, computed exactly.
pub fn exact_multiplicity(g: &Graph, lambda: &QuadraticNumber) -> usize {
    match shifted_adjacency(g, lambda) {
        Some(m) => g.n() - m.rank(),
        None => 0,
    }
}

/// A basis of the λ-eigenspace of `A(g)`; empty when λ is not an eigenvalue.
pub fn exact_eigenspace(g: &Graph, lambda: &QuadraticNumber) -> Vec<Vec<QuadraticNumber>> {
    shifted_adjacency(g, lambda).map_or_else(Vec::new, |m| m.null_space())
}

/// Scales `x` so its first nonzero entry is 1. Zero vectors are left alone.
pub fn normalize_leading(x: &mut [QuadraticNumber]) {
    let Some(lead) = x.iter().find(|e| !e.is_zero()).cloned() else {
        return;
    };
    let inv = lead.inv().expect("leading entry is nonzero");
    for e in x.iter_mut() {
        if !e.is_zero() {
            *e = &*e * &inv;
        }
    }
}
