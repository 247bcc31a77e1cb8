use super::TheoremError;
use crate::exact::QuadraticNumber;
use crate::graph::Graph;

fn check_len(g: &Graph, len: usize) -> Result<(), TheoremError> {
    if len == g.n() {
        Ok(())
    } else {
        Err(TheoremError::LengthMismatch { expected: g.n(), found: len })
    }
}

/// Vertices where `λ·x(v) ≠ Σ_{u∼v} x(u)`, in exact arithmetic. Empty means
/// `x` satisfies the eigenvalue equation everywhere.
pub fn sum_rule_violations(
    g: &Graph,
    x: &[QuadraticNumber],
    lambda: &QuadraticNumber,
) -> Result<Vec<usize>, TheoremError> {
    check_len(g, x.len())?;
    Ok((0..g.n())
        .filter(|&v| {
            let mut sum = QuadraticNumber::zero();
            for &u in g.neighbors(v) {
                if !x[u].is_zero() {
                    sum += &x[u];
                }
            }
            lambda * &x[v] != sum
        })
        .collect())
}

/// True iff `x` satisfies the sum rule for `lambda` at every vertex.
pub fn sum_rule_holds(g: &Graph, x: &[QuadraticNumber], lambda: &QuadraticNumber) -> Result<bool, TheoremError> {
    Ok(sum_rule_violations(g, x, lambda)?.is_empty())
}

/// `max_v |λ·x(v) − Σ_{u∼v} x(u)|`.
pub fn sum_rule_residual(g: &Graph, x: &[f64], lambda: f64) -> Result<f64, TheoremError> {
    check_len(g, x.len())?;
    Ok((0..g.n())
        .map(|v| {
            let sum: f64 = g.neighbors(v).iter().map(|&u| x[u]).sum();
            (lambda * x[v] - sum).abs()
        })
        .fold(0.0, f64::max))
}
