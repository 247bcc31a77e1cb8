use std::sync::OnceLock;

use rayon::prelude::*;

use super::{Certificate, Eigenvalue, Mode, TheoremError};
use crate::config::Tolerances;
use crate::exact::{exact_eigenspace, exact_multiplicity, normalize_leading, QuadraticNumber};
use crate::graph::Graph;
use crate::spectra::{float_multiplicity, graph_spectrum};

/// Multiplicity bookkeeping for one deleted vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexDowner {
    pub vertex: usize,
    pub name: String,
    pub mul_parent: usize,
    pub mul_child: usize,
    /// `mul(λ, G − v) = mul(λ, G) − 1`.
    pub is_downer: bool,
    /// How this vertex was decided (floating runs escalate ambiguous counts).
    pub mode: Mode,
    /// The count could not be settled: the floating count is tolerance
    /// sensitive and λ has no exact form.
    pub ambiguous: bool,
    /// For a non-downer vertex of a simple eigenvalue: the eigenvector,
    /// which vanishes at this vertex.
    pub zero_component_certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DownerReport {
    pub graph: String,
    pub eigenvalue: Eigenvalue,
    pub mode: Mode,
    pub mul_parent: usize,
    pub parent_ambiguous: bool,
    /// The eigenvector when λ is a simple nonzero eigenvalue.
    pub eigenvector: Option<Certificate>,
    pub vertices: Vec<VertexDowner>,
}

impl DownerReport {
    pub fn non_downers(&self) -> Vec<usize> {
        self.vertices.iter().filter(|v| !v.is_downer).map(|v| v.vertex).collect()
    }

    pub fn non_downer_names(&self) -> Vec<String> {
        self.vertices.iter().filter(|v| !v.is_downer).map(|v| v.name.clone()).collect()
    }
}

pub(crate) fn graph_label(g: &Graph) -> String {
    match g.spec() {
        Some(s) => s.to_string(),
        None => format!("edge-list n={} m={}", g.n(), g.edge_count()),
    }
}

/// Decides for every vertex `v` whether it is downer for `lambda`, i.e.
/// whether `mul(λ, G − v) = mul(λ, G) − 1`.
///
/// When λ is a simple nonzero eigenvalue the report also carries its
/// eigenvector `x`, and the classification is cross-checked against the
/// zero pattern of `x`: `v` is not downer exactly when `x(v) = 0`. A
/// mismatch is returned as [`TheoremError::EquivalenceViolated`].
///
/// In [`Mode::Float`], tolerance-ambiguous counts are settled exactly when
/// λ is representable and flagged otherwise.
pub fn downer_classify(
    g: &Graph,
    lambda: &Eigenvalue,
    mode: Mode,
    tol: &Tolerances,
) -> Result<DownerReport, TheoremError> {
    match mode {
        Mode::Exact => {
            let q = lambda
                .representable(tol.recognition_tol())
                .ok_or(TheoremError::NotRepresentable(lambda.approx()))?;
            exact_report(g, &q)
        }
        Mode::Float => float_report(g, lambda, tol),
    }
}

fn exact_report(g: &Graph, lambda: &QuadraticNumber) -> Result<DownerReport, TheoremError> {
    let mul_parent = exact_multiplicity(g, lambda);
    let eigenvector = (mul_parent == 1 && !lambda.is_zero()).then(|| {
        let mut x = exact_eigenspace(g, lambda).swap_remove(0);
        normalize_leading(&mut x);
        x
    });
    let vertices = (0..g.n())
        .into_par_iter()
        .map(|v| -> Result<VertexDowner, TheoremError> {
            let mul_child = exact_multiplicity(&g.delete_vertex(v)?, lambda);
            let is_downer = mul_child + 1 == mul_parent;
            let mut certificate = None;
            if let Some(x) = &eigenvector {
                let zero = x[v].is_zero();
                if zero == is_downer {
                    return Err(TheoremError::EquivalenceViolated {
                        vertex: v,
                        entry: x[v].to_string(),
                        is_downer,
                    });
                }
                if zero {
                    certificate = Some(Certificate::Exact(x.clone()));
                }
            }
            Ok(VertexDowner {
                vertex: v,
                name: g.vertex_name(v),
                mul_parent,
                mul_child,
                is_downer,
                mode: Mode::Exact,
                ambiguous: false,
                zero_component_certificate: certificate,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DownerReport {
        graph: graph_label(g),
        eigenvalue: Eigenvalue::Exact(lambda.clone()),
        mode: Mode::Exact,
        mul_parent,
        parent_ambiguous: false,
        eigenvector: eigenvector.map(Certificate::Exact),
        vertices,
    })
}

fn float_report(g: &Graph, lambda: &Eigenvalue, tol: &Tolerances) -> Result<DownerReport, TheoremError> {
    let value = lambda.approx();
    let exact = lambda.representable(tol.recognition_tol());
    let spectrum = graph_spectrum(g, tol)?;
    let parent = float_multiplicity(&spectrum, value, tol);
    if parent.ambiguous {
        if let Some(q) = &exact {
            return exact_report(g, q);
        }
    }
    let mul_parent = parent.count;
    let eigenvector = (mul_parent == 1 && value.abs() > tol.group_tol)
        .then(|| spectrum.closest(value).map(|i| spectrum.eigenvectors()[i].clone()))
        .flatten();
    let exact_parent = OnceLock::new();

    let vertices = (0..g.n())
        .into_par_iter()
        .map(|v| -> Result<VertexDowner, TheoremError> {
            let child_graph = g.delete_vertex(v)?;
            let child = float_multiplicity(&graph_spectrum(&child_graph, tol)?, value, tol);
            let (mut parent_count, mut mul_child, mut mode, mut ambiguous) =
                (mul_parent, child.count, Mode::Float, parent.ambiguous || child.ambiguous);
            if child.ambiguous {
                if let Some(q) = &exact {
                    parent_count = *exact_parent.get_or_init(|| exact_multiplicity(g, q));
                    mul_child = exact_multiplicity(&child_graph, q);
                    mode = Mode::Exact;
                    ambiguous = false;
                }
            }
            let is_downer = mul_child + 1 == parent_count;
            let mut certificate = None;
            if let (Some(x), false) = (&eigenvector, ambiguous) {
                let zero = x[v].abs() <= tol.zero_tol;
                if zero == is_downer {
                    return Err(TheoremError::EquivalenceViolated {
                        vertex: v,
                        entry: format!("{:e}", x[v]),
                        is_downer,
                    });
                }
                if zero {
                    certificate = Some(Certificate::Float(x.clone()));
                }
            }
            Ok(VertexDowner {
                vertex: v,
                name: g.vertex_name(v),
                mul_parent: parent_count,
                mul_child,
                is_downer,
                mode,
                ambiguous,
                zero_component_certificate: certificate,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DownerReport {
        graph: graph_label(g),
        eigenvalue: lambda.clone(),
        mode: Mode::Float,
        mul_parent,
        parent_ambiguous: parent.ambiguous,
        eigenvector: eigenvector.map(Certificate::Float),
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::half_graph;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn k2_both_downer() {
        let k2 = half_graph(1).unwrap();
        for mode in [Mode::Exact, Mode::Float] {
            let r = downer_classify(&k2, &Eigenvalue::Exact(QuadraticNumber::one()), mode, &tol()).unwrap();
            assert_eq!(r.mul_parent, 1);
            assert!(r.non_downers().is_empty());
        }
    }

    #[test]
    fn h7_at_one() {
        let h7 = half_graph(7).unwrap();
        for mode in [Mode::Exact, Mode::Float] {
            let r = downer_classify(&h7, &Eigenvalue::Exact(QuadraticNumber::one()), mode, &tol()).unwrap();
            assert_eq!(r.non_downer_names(), ["u2", "u5", "v2", "v5"], "{mode:?}");
            for v in &r.vertices {
                assert_eq!(v.zero_component_certificate.is_some(), !v.is_downer);
            }
        }
    }

    #[test]
    fn h12_at_minus_omega() {
        let g = half_graph(12).unwrap();
        let r = downer_classify(&g, &Eigenvalue::Exact(-QuadraticNumber::omega()), Mode::Exact, &tol()).unwrap();
        assert_eq!(r.non_downer_names(), ["u3", "u8", "v3", "v8"]);
    }

    #[test]
    fn float_lambda_in_exact_mode() {
        let h7 = half_graph(7).unwrap();
        let r = downer_classify(&h7, &Eigenvalue::Float(1.0), Mode::Exact, &tol()).unwrap();
        assert_eq!(r.eigenvalue, Eigenvalue::Exact(QuadraticNumber::one()));
        assert_eq!(
            downer_classify(&h7, &Eigenvalue::Float(1.5), Mode::Exact, &tol()),
            Err(TheoremError::NotRepresentable(1.5))
        );
    }

    #[test]
    fn non_eigenvalue() {
        let h7 = half_graph(7).unwrap();
        let r = downer_classify(&h7, &Eigenvalue::Float(0.37), Mode::Float, &tol()).unwrap();
        assert_eq!(r.mul_parent, 0);
        assert!(r.eigenvector.is_none());
        assert!(r.vertices.iter().all(|v| !v.is_downer));
    }

    #[test]
    fn ambiguous_float_escalates() {
        // 1 + 2e-7 is close enough to 1 to be ambiguous but far enough to
        // miss it; recognition then settles the count exactly.
        let h7 = half_graph(7).unwrap();
        let r = downer_classify(&h7, &Eigenvalue::Float(1.0 + 2e-7), Mode::Float, &tol()).unwrap();
        assert_eq!(r.mode, Mode::Exact);
        assert_eq!(r.non_downer_names(), ["u2", "u5", "v2", "v5"]);
    }
}
