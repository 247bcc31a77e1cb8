//! Sum rule, periodic eigenvectors of half graphs, downer vertices, and
//! checks of the structural theorems about chain-graph spectra.

mod downer;
mod patterns;
mod sum_rule;
mod verify;

pub use downer::{downer_classify, DownerReport, VertexDowner};
pub use patterns::{
    extend_by_duplicate, negate_classes, period10_vector, period6_vector, table_fixture_check, PatternCase,
    PatternFamily, PatternRefusal, PatternVector, SignLayout, TableCell, TableReport, TableRow,
};
pub use sum_rule::{sum_rule_holds, sum_rule_residual, sum_rule_violations};
pub use verify::{
    cell_constancy_deviation, check_nonzero_simplicity, eigenvalue_gap_check, verify_max_degree_downer,
    verify_pattern_family, GapReport, MaxDegreeReport, MaxDegreeViolation, PatternSweep, SimplicityReport,
};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::QuadraticNumber;
use crate::graph::GraphError;
use crate::spectra::SpectraError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("vector has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("exact mode needs an eigenvalue in Q(√5), got {0}")]
    NotRepresentable(f64),
    #[error("vertex {vertex}: eigenvector entry is {entry} but the vertex is {}downer", if *.is_downer { "" } else { "not " })]
    EquivalenceViolated { vertex: usize, entry: String, is_downer: bool },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// How multiplicities are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Rank of `A − λI` over ℚ(√5).
    Exact,
    /// Counting eigenvalues of the floating-point spectrum.
    Float,
}

/// An eigenvalue, exact when it lies in ℚ(√5).
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    Exact(QuadraticNumber),
    Float(f64),
}

impl Eigenvalue {
    pub fn approx(&self) -> f64 {
        match self {
            Eigenvalue::Exact(q) => q.to_f64(),
            Eigenvalue::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&QuadraticNumber> {
        match self {
            Eigenvalue::Exact(q) => Some(q),
            Eigenvalue::Float(_) => None,
        }
    }

    /// The exact value, recognizing floats close to ±1 or ±ω.
    pub fn representable(&self, tol: f64) -> Option<QuadraticNumber> {
        match self {
            Eigenvalue::Exact(q) => Some(q.clone()),
            Eigenvalue::Float(x) => recognize_exact(*x, tol),
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(q) => write!(f, "{q}"),
            Eigenvalue::Float(x) => write!(f, "{x}"),
        }
    }
}

/// The eigenvalues whose exact form the search and verifiers use:
/// `1, ω, −ω, −1` (descending).
pub fn exact_candidates() -> [QuadraticNumber; 4] {
    let w = QuadraticNumber::omega();
    [QuadraticNumber::one(), w.clone(), -w, -QuadraticNumber::one()]
}

/// Matches `x` against ±1 and ±ω within `tol`.
pub fn recognize_exact(x: f64, tol: f64) -> Option<QuadraticNumber> {
    exact_candidates().into_iter().find(|q| (q.to_f64() - x).abs() <= tol)
}

/// An eigenvector offered as evidence.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Exact(Vec<QuadraticNumber>),
    /// Unit length, first significant entry positive.
    Float(Vec<f64>),
}

impl Certificate {
    pub fn len(&self) -> usize {
        match self {
            Certificate::Exact(x) => x.len(),
            Certificate::Float(x) => x.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
