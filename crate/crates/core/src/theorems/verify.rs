use serde::Serialize;

use super::patterns::pattern_vector_for;
use super::{negate_classes, recognize_exact, sum_rule_holds, Mode, PatternFamily, TheoremError};
use crate::config::Tolerances;
use crate::exact::exact_multiplicity;
use crate::graph::{ChainGraphSpec, Graph};
use crate::spectra::{float_multiplicity, graph_spectrum, Spectrum};

/// A vertex of `U₁ ∪ V₁` that failed to be downer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxDegreeViolation {
    pub vertex: usize,
    pub name: String,
    pub eigenvalue: f64,
    pub mul_parent: usize,
    pub mul_child: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxDegreeReport {
    pub spec: String,
    pub eigenvalues_checked: usize,
    pub violations: Vec<MaxDegreeViolation>,
}

impl MaxDegreeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every vertex of the first cells `U₁` and `V₁` (the maximum
/// degree vertices of each class) is downer for every nonzero eigenvalue.
///
/// Eigenvalues come from the floating spectrum; `|λ| > group_tol` counts as
/// nonzero. In [`Mode::Exact`], eigenvalues recognized as ±1 or ±ω are
/// decided by exact rank. In [`Mode::Float`] they are decided exactly only
/// when the floating count is ambiguous.
pub fn verify_max_degree_downer(
    spec: &ChainGraphSpec,
    mode: Mode,
    tol: &Tolerances,
) -> Result<MaxDegreeReport, TheoremError> {
    let g = spec.build();
    let parent = graph_spectrum(&g, tol)?;
    let clusters = parent.nonzero_clusters();
    let mut violations = Vec::new();
    for v in spec.first_cells() {
        let child_graph = g.delete_vertex(v)?;
        let child = graph_spectrum(&child_graph, tol)?;
        for cluster in &clusters {
            let value = cluster.mean;
            let exact = recognize_exact(value, tol.recognition_tol());
            let float_child = float_multiplicity(&child, value, tol);
            let float_parent = float_multiplicity(&parent, value, tol);
            let use_exact = match mode {
                Mode::Exact => exact.is_some(),
                Mode::Float => exact.is_some() && (float_child.ambiguous || float_parent.ambiguous),
            };
            let (mul_parent, mul_child) = match (&exact, use_exact) {
                (Some(q), true) => (exact_multiplicity(&g, q), exact_multiplicity(&child_graph, q)),
                _ => (cluster.len, float_child.count),
            };
            if mul_child + 1 != mul_parent {
                violations.push(MaxDegreeViolation {
                    vertex: v,
                    name: g.vertex_name(v),
                    eigenvalue: value,
                    mul_parent,
                    mul_child,
                });
            }
        }
    }
    Ok(MaxDegreeReport {
        spec: spec.to_string(),
        eigenvalues_checked: clusters.len(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub ok: bool,
    /// The nonzero eigenvalue of smallest magnitude (the positive one on a
    /// tie), i.e. the one closest to the excluded interval.
    pub closest_to_gap: Option<f64>,
    /// Eigenvalues found inside `(group_tol, 1/2 − margin)` or its mirror.
    pub inside: Vec<f64>,
}

/// No eigenvalue in `(group_tol, 0.5 − margin)` or `(−0.5 + margin, −group_tol)`.
pub fn eigenvalue_gap_check(s: &Spectrum, tol: &Tolerances) -> GapReport {
    let upper = 0.5 - tol.gap_margin;
    let inside: Vec<f64> = s
        .eigenvalues()
        .iter()
        .copied()
        .filter(|x| x.abs() > tol.group_tol && x.abs() < upper)
        .collect();
    let closest_to_gap = s
        .eigenvalues()
        .iter()
        .copied()
        .filter(|x| x.abs() > tol.group_tol)
        .fold(None, |best: Option<f64>, x| match best {
            Some(b) if b.abs() <= x.abs() + tol.group_tol => Some(b),
            _ => Some(x),
        });
    GapReport {
        ok: inside.is_empty(),
        closest_to_gap,
        inside,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimplicityReport {
    /// Nonzero eigenvalues (cluster means) with multiplicity above one,
    /// paired with that multiplicity.
    pub repeated: Vec<(f64, usize)>,
}

impl SimplicityReport {
    pub fn passed(&self) -> bool {
        self.repeated.is_empty()
    }
}

/// Every nonzero eigenvalue is simple: exactly checked at ±1 and ±ω,
/// by floating clustering elsewhere.
pub fn check_nonzero_simplicity(g: &Graph, s: &Spectrum, tol: &Tolerances) -> SimplicityReport {
    let mut repeated = Vec::new();
    for cluster in s.nonzero_clusters() {
        if recognize_exact(cluster.mean, tol.recognition_tol()).is_none() && cluster.len > 1 {
            repeated.push((cluster.mean, cluster.len));
        }
    }
    for q in super::exact_candidates() {
        let m = exact_multiplicity(g, &q);
        if m > 1 {
            repeated.push((q.to_f64(), m));
        }
    }
    SimplicityReport { repeated }
}

/// Largest spread of an eigenvector over a cell, across all simple nonzero
/// eigenvalues. `None` when the graph has no cell labels.
pub fn cell_constancy_deviation(g: &Graph, s: &Spectrum) -> Option<f64> {
    if g.labels().iter().any(|l| l.cell.is_none()) {
        return None;
    }
    let mut worst: f64 = 0.0;
    for cluster in s.nonzero_clusters().into_iter().filter(|c| c.len == 1) {
        let x = &s.eigenvectors()[cluster.start];
        for v in 0..g.n() {
            // compare with the first vertex of the same cell
            let label = g.label(v);
            let first = (0..g.n())
                .find(|&u| g.label(u).class == label.class && g.label(u).cell == label.cell)
                .expect("v itself qualifies");
            worst = worst.max((x[v] - x[first]).abs());
        }
    }
    Some(worst)
}

/// Outcome of sweeping one pattern family over `k ≤ max_k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternSweep {
    pub family: PatternFamily,
    pub max_k: usize,
    /// Every `k` whose pattern (and its class-negated partner) was checked.
    pub checked: Vec<usize>,
    /// Values of `k` where the exact sum rule failed.
    pub failures: Vec<usize>,
}

impl PatternSweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && !self.checked.is_empty()
    }
}

/// Exact sum-rule check of the family's eigenvector for every admissible
/// `k ≤ max_k`, together with the class-negated vector for `−λ`.
pub fn verify_pattern_family(family: PatternFamily, max_k: usize) -> Result<PatternSweep, TheoremError> {
    let mut checked = Vec::new();
    let mut failures = Vec::new();
    for k in 1..=max_k {
        let Ok(p) = pattern_vector_for(family, k) else {
            continue;
        };
        let g = p.graph();
        let flipped = negate_classes(&p);
        let nonzero = p.entries.iter().any(|e| !e.is_zero());
        let ok = nonzero
            && sum_rule_holds(&g, &p.full_vector(), &p.eigenvalue)?
            && sum_rule_holds(&g, &flipped.full_vector(), &flipped.eigenvalue)?;
        checked.push(k);
        if !ok {
            failures.push(k);
        }
    }
    Ok(PatternSweep {
        family,
        max_k,
        checked,
        failures,
    })
}
