use super::SpectraError;
use crate::config::Tolerances;

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi
/// rotations.
///
/// Returns unsorted `(eigenvalues, eigenvectors)`, where `eigenvectors[j]`
/// belongs to `eigenvalues[j]`. Sweeps visit the pairs `(p, q)`, `p < q`, in
/// row-major order, so the result is a deterministic function of the input.
pub(super) fn jacobi(a: &[Vec<f64>], tol: &Tolerances) -> Result<(Vec<f64>, Vec<Vec<f64>>), SpectraError> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(SpectraError::NotSquare { rows: n, row: i, len: row.len() });
        }
    }
    for i in 0..n {
        for j in 0..i {
            let diff = (a[i][j] - a[j][i]).abs();
            if diff > tol.symmetry_tol || !diff.is_finite() {
                return Err(SpectraError::NotSymmetric { i, j, diff });
            }
        }
    }

    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let frobenius = m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol.jacobi_tol * (1.0 + frobenius);

    let mut converged = false;
    for done in 0..=tol.max_sweeps {
        if off_diagonal_norm(&m) <= threshold {
            converged = true;
            break;
        }
        if done == tol.max_sweeps {
            break;
        }
        sweep(&mut m, &mut v);
    }
    if !converged {
        return Err(SpectraError::NoConvergence {
            sweeps: tol.max_sweeps,
            off_norm: off_diagonal_norm(&m),
        });
    }

    let values = (0..n).map(|i| m[i][i]).collect();
    // columns of v are the eigenvectors
    let vectors = (0..n).map(|j| (0..n).map(|i| v[i][j]).collect()).collect();
    Ok((values, vectors))
}

fn off_diagonal_norm(m: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in m.iter().enumerate() {
        for x in &row[i + 1..] {
            s += x * x;
        }
    }
    (2.0 * s).sqrt()
}

fn sweep(m: &mut [Vec<f64>], v: &mut [Vec<f64>]) {
    let n = m.len();
    for p in 0..n {
        for q in p + 1..n {
            let apq = m[p][q];
            if apq == 0.0 {
                continue;
            }
            let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
            let t = if theta.abs() > 1e150 {
                0.5 / theta
            } else {
                theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
            };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            for r in 0..n {
                if r == p || r == q {
                    continue;
                }
                let arp = m[r][p];
                let arq = m[r][q];
                let new_p = c * arp - s * arq;
                let new_q = s * arp + c * arq;
                m[r][p] = new_p;
                m[p][r] = new_p;
                m[r][q] = new_q;
                m[q][r] = new_q;
            }
            m[p][p] -= t * apq;
            m[q][q] += t * apq;
            m[p][q] = 0.0;
            m[q][p] = 0.0;

            for row in v.iter_mut() {
                let vp = row[p];
                let vq = row[q];
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
}
