/// Every numerical threshold used by the floating-point paths.
///
/// Passed explicitly to the operations that need it; [`Tolerances::default`]
/// holds the standard values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Eigenvalues closer than this are grouped into one cluster, and
    /// `|λ| ≤ group_tol` counts as a zero eigenvalue.
    pub group_tol: f64,
    /// Slack allowed in each interlacing inequality.
    pub interlace_tol: f64,
    /// An entry of a unit eigenvector with `|x(v)| ≤ zero_tol` counts as zero.
    pub zero_tol: f64,
    /// Margin kept from the endpoint `1/2` in the eigenvalue gap check and
    /// from `1/4` in the Gram matrix bound.
    pub gap_margin: f64,
    /// Maximum asymmetry `|a_ij − a_ji|` accepted by the eigensolver.
    pub symmetry_tol: f64,
    /// Jacobi stops once the off-diagonal Frobenius norm is at most
    /// `jacobi_tol · (1 + ‖A‖_F)`.
    pub jacobi_tol: f64,
    pub max_sweeps: usize,
    /// A multiplicity count is flagged ambiguous when an eigenvalue lies
    /// between `group_tol` and `ambiguity_factor · group_tol` from λ.
    pub ambiguity_factor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            group_tol: 1e-7,
            interlace_tol: 1e-8,
            zero_tol: 1e-7,
            gap_margin: 1e-9,
            symmetry_tol: 1e-12,
            jacobi_tol: 1e-12,
            max_sweeps: 100,
            ambiguity_factor: 3.0,
        }
    }
}

impl Tolerances {
    /// Window within which a float is identified with an exact candidate
    /// eigenvalue (±1, ±ω).
    pub fn recognition_tol(&self) -> f64 {
        self.ambiguity_factor * self.group_tol
    }
}
