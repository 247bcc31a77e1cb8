//! Exhaustive search for non-downer vertices of nonzero eigenvalues.
//!
//! Each spec is one job: its spectrum and the spectra of all its
//! single-vertex deletions are computed on one worker, and results are
//! merged back in enumeration order.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::config::Tolerances;
use crate::exact::{exact_eigenspace, exact_multiplicity, normalize_leading, QuadraticNumber};
use crate::graph::{enumerate_chain_specs, enumerate_half_graphs, ChainGraphSpec, Graph};
use crate::spectra::{float_multiplicity, graph_spectrum, Spectrum};
use crate::theorems::{
    exact_candidates, recognize_exact, sum_rule_holds, sum_rule_residual, Certificate, Eigenvalue, Mode,
    TheoremError,
};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search job: {0}")]
    InvalidJob(String),
    #[error("could not start worker pool: {0}")]
    Workers(String),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}

impl From<crate::spectra::SpectraError> for SearchError {
    fn from(e: crate::spectra::SpectraError) -> Self {
        SearchError::Theorem(e.into())
    }
}

impl From<crate::graph::GraphError> for SearchError {
    fn from(e: crate::graph::GraphError) -> Self {
        SearchError::Theorem(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Exact ranks at ±1 and ±ω (or the filter values) only.
    Exact,
    /// Floating spectra only.
    Float,
    /// Floating screen, exact confirmation whenever λ ∈ {±1, ±ω}.
    #[default]
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpecFamily {
    #[default]
    All,
    HalfGraphs,
}

#[derive(Debug, Clone)]
pub struct SearchJob {
    pub max_n: usize,
    pub mode: SearchMode,
    /// Restrict to these eigenvalues.
    pub eigenvalue_filter: Option<Vec<QuadraticNumber>>,
    pub workers: usize,
    pub family: SpecFamily,
}

impl SearchJob {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            mode: SearchMode::Hybrid,
            eigenvalue_filter: None,
            workers: 1,
            family: SpecFamily::All,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_n < 2 {
            return Err(SearchError::InvalidJob(format!("max_n must be ≥ 2, got {}", self.max_n)));
        }
        if self.workers == 0 {
            return Err(SearchError::InvalidJob("workers must be ≥ 1".into()));
        }
        Ok(())
    }

    pub fn specs(&self) -> Vec<ChainGraphSpec> {
        match self.family {
            SpecFamily::All => enumerate_chain_specs(self.max_n).collect(),
            SpecFamily::HalfGraphs => enumerate_half_graphs(self.max_n).collect(),
        }
    }
}

/// A vertex `v` and a nonzero eigenvalue λ with `mul(λ, G − v) = mul(λ, G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleRecord {
    pub spec: ChainGraphSpec,
    pub vertex: usize,
    pub name: String,
    pub eigenvalue: Eigenvalue,
    pub mul_parent: usize,
    pub mul_child: usize,
    pub mode: Mode,
    /// λ-eigenvector of the graph vanishing at `vertex`.
    pub certificate: Certificate,
}

/// A floating-point hit that could not be confirmed exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct UnconfirmedCandidate {
    pub spec: ChainGraphSpec,
    pub vertex: usize,
    pub name: String,
    pub eigenvalue: f64,
    pub mul_parent: usize,
    pub mul_child: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SearchOutcome {
    pub specs_examined: usize,
    pub records: Vec<CounterexampleRecord>,
    pub unconfirmed: Vec<UnconfirmedCandidate>,
}

/// Every (spec, vertex, λ) violating "every vertex is downer for every
/// nonzero eigenvalue", in enumeration order, then vertex, then λ
/// descending.
pub fn find_non_downer(job: &SearchJob, tol: &Tolerances) -> Result<SearchOutcome, SearchError> {
    job.validate()?;
    let specs = job.specs();
    let per_spec = map_specs(&specs, job.workers, |spec| scan_spec(spec, job, tol))?;
    let mut outcome = SearchOutcome {
        specs_examined: specs.len(),
        ..SearchOutcome::default()
    };
    for findings in per_spec {
        outcome.records.extend(findings.records);
        outcome.unconfirmed.extend(findings.unconfirmed);
    }
    Ok(outcome)
}

/// Applies `f` to every spec on a pool of `workers` threads and returns the
/// results in input order. The first error (in input order) is returned.
pub fn map_specs<T, E, F>(specs: &[ChainGraphSpec], workers: usize, f: F) -> Result<Vec<T>, SearchError>
where
    T: Send,
    E: Into<SearchError> + Send,
    F: Fn(&ChainGraphSpec) -> Result<T, E> + Sync,
{
    if workers == 0 {
        return Err(SearchError::InvalidJob("workers must be ≥ 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SearchError::Workers(e.to_string()))?;
    pool.install(|| specs.par_iter().map(|s| f(s).map_err(Into::into)).collect())
}

/// The first confirmed record in enumeration order over all specs with at
/// most `max_n` vertices.
pub fn smallest_counterexample(max_n: usize, tol: &Tolerances) -> Result<Option<CounterexampleRecord>, SearchError> {
    let job = SearchJob::new(max_n.max(2));
    for spec in enumerate_chain_specs(max_n) {
        let findings = scan_spec(&spec, &job, tol)?;
        if let Some(first) = findings.records.into_iter().next() {
            return Ok(Some(first));
        }
    }
    Ok(None)
}

/// Re-checks a record from scratch: the certificate is a nonzero
/// λ-eigenvector vanishing at the vertex, its restriction is a
/// λ-eigenvector of `G − v`, and the multiplicities agree.
pub fn verify_record(record: &CounterexampleRecord, tol: &Tolerances) -> Result<bool, SearchError> {
    let g = record.spec.build();
    let child = g.delete_vertex(record.vertex)?;
    match (&record.certificate, &record.eigenvalue) {
        (Certificate::Exact(x), Eigenvalue::Exact(q)) => {
            let mut restricted = x.clone();
            let removed = restricted.remove(record.vertex);
            let mul_parent = exact_multiplicity(&g, q);
            let mul_child = exact_multiplicity(&child, q);
            Ok(!q.is_zero()
                && removed.is_zero()
                && x.iter().any(|e| !e.is_zero())
                && sum_rule_holds(&g, x, q)?
                && sum_rule_holds(&child, &restricted, q)?
                && mul_parent >= 1
                && mul_parent == record.mul_parent
                && mul_child == record.mul_child
                && mul_child == mul_parent)
        }
        (Certificate::Float(x), lambda) => {
            let value = lambda.approx();
            let parent = float_multiplicity(&graph_spectrum(&g, tol)?, value, tol);
            let child_m = float_multiplicity(&graph_spectrum(&child, tol)?, value, tol);
            let mut restricted = x.clone();
            let removed = restricted.remove(record.vertex);
            let scale = 1.0 + g.n() as f64;
            Ok(value.abs() > tol.group_tol
                && removed.abs() <= tol.zero_tol
                && sum_rule_residual(&g, x, value)? <= tol.group_tol * scale
                && sum_rule_residual(&child, &restricted, value)? <= tol.group_tol * scale
                && !parent.ambiguous
                && !child_m.ambiguous
                && parent.count == child_m.count
                && parent.count >= 1)
        }
        (Certificate::Exact(_), Eigenvalue::Float(_)) => Ok(false),
    }
}

#[derive(Debug, Default)]
struct SpecFindings {
    records: Vec<CounterexampleRecord>,
    unconfirmed: Vec<UnconfirmedCandidate>,
}

/// Exact data about λ on the parent graph, computed at most once per spec.
struct ExactParent {
    multiplicity: usize,
    basis: Vec<Vec<QuadraticNumber>>,
}

impl ExactParent {
    fn new(g: &Graph, q: &QuadraticNumber) -> Self {
        let basis = exact_eigenspace(g, q);
        Self {
            multiplicity: basis.len(),
            basis,
        }
    }

    /// An eigenvector vanishing at `v`, if the eigenspace has one.
    fn vanishing_at(&self, v: usize) -> Option<Vec<QuadraticNumber>> {
        let mut x = if let Some(b) = self.basis.iter().find(|b| b[v].is_zero()) {
            b.clone()
        } else if self.basis.len() >= 2 {
            // b₀·b₁(v) − b₁·b₀(v) is nonzero because the basis is independent
            let (b0, b1) = (&self.basis[0], &self.basis[1]);
            b0.iter().zip(b1).map(|(p, q)| p * &b1[v] - q * &b0[v]).collect()
        } else {
            return None;
        };
        normalize_leading(&mut x);
        Some(x)
    }
}

fn allowed(job: &SearchJob, value: f64, tol: &Tolerances) -> bool {
    match &job.eigenvalue_filter {
        None => true,
        Some(filter) => filter.iter().any(|q| (q.to_f64() - value).abs() <= tol.recognition_tol()),
    }
}

fn scan_spec(spec: &ChainGraphSpec, job: &SearchJob, tol: &Tolerances) -> Result<SpecFindings, SearchError> {
    let g = spec.build();
    match job.mode {
        SearchMode::Exact => scan_exact(spec, &g, job),
        SearchMode::Float | SearchMode::Hybrid => scan_screened(spec, &g, job, tol),
    }
}

fn scan_exact(spec: &ChainGraphSpec, g: &Graph, job: &SearchJob) -> Result<SpecFindings, SearchError> {
    let mut values: Vec<QuadraticNumber> = job
        .eigenvalue_filter
        .clone()
        .unwrap_or_else(|| exact_candidates().to_vec());
    values.retain(|q| !q.is_zero());
    values.sort_by(|a, b| b.to_f64().total_cmp(&a.to_f64()));
    values.dedup();
    let parents: Vec<(QuadraticNumber, ExactParent)> = values
        .into_iter()
        .map(|q| {
            let p = ExactParent::new(g, &q);
            (q, p)
        })
        .filter(|(_, p)| p.multiplicity > 0)
        .collect();
    let mut findings = SpecFindings::default();
    if parents.is_empty() {
        return Ok(findings);
    }
    for v in 0..g.n() {
        let child = g.delete_vertex(v)?;
        for (q, parent) in &parents {
            let mul_child = exact_multiplicity(&child, q);
            if mul_child == parent.multiplicity {
                if let Some(x) = parent.vanishing_at(v) {
                    findings.records.push(CounterexampleRecord {
                        spec: spec.clone(),
                        vertex: v,
                        name: g.vertex_name(v),
                        eigenvalue: Eigenvalue::Exact(q.clone()),
                        mul_parent: parent.multiplicity,
                        mul_child,
                        mode: Mode::Exact,
                        certificate: Certificate::Exact(x),
                    });
                }
            }
        }
    }
    Ok(findings)
}

fn scan_screened(
    spec: &ChainGraphSpec,
    g: &Graph,
    job: &SearchJob,
    tol: &Tolerances,
) -> Result<SpecFindings, SearchError> {
    let parent = graph_spectrum(g, tol)?;
    let clusters: Vec<_> = parent
        .nonzero_clusters()
        .into_iter()
        .filter(|c| allowed(job, c.mean, tol))
        .collect();
    let mut findings = SpecFindings::default();
    if clusters.is_empty() {
        return Ok(findings);
    }
    let mut exact_parents: HashMap<usize, ExactParent> = HashMap::new();
    for v in 0..g.n() {
        let child_graph = g.delete_vertex(v)?;
        let child = graph_spectrum(&child_graph, tol)?;
        for (ci, cluster) in clusters.iter().enumerate() {
            let screen = float_multiplicity(&child, cluster.mean, tol);
            if screen.count < cluster.len && !screen.ambiguous {
                continue;
            }
            let exact = recognize_exact(cluster.mean, tol.recognition_tol());
            match (job.mode, exact) {
                (SearchMode::Hybrid, Some(q)) => {
                    let ep = exact_parents.entry(ci).or_insert_with(|| ExactParent::new(g, &q));
                    let mul_child = exact_multiplicity(&child_graph, &q);
                    if ep.multiplicity == 0 || mul_child != ep.multiplicity {
                        continue;
                    }
                    let Some(x) = ep.vanishing_at(v) else {
                        continue;
                    };
                    let record = CounterexampleRecord {
                        spec: spec.clone(),
                        vertex: v,
                        name: g.vertex_name(v),
                        eigenvalue: Eigenvalue::Exact(q),
                        mul_parent: ep.multiplicity,
                        mul_child,
                        mode: Mode::Exact,
                        certificate: Certificate::Exact(x),
                    };
                    push_verified(&mut findings, record, tol)?;
                }
                _ => {
                    let unconfirmed = |reason: &str| UnconfirmedCandidate {
                        spec: spec.clone(),
                        vertex: v,
                        name: g.vertex_name(v),
                        eigenvalue: cluster.mean,
                        mul_parent: cluster.len,
                        mul_child: screen.count,
                        reason: reason.to_string(),
                    };
                    if job.mode == SearchMode::Hybrid {
                        findings.unconfirmed.push(unconfirmed("eigenvalue is not one of ±1, ±ω"));
                        continue;
                    }
                    if screen.ambiguous || cluster.len != 1 {
                        findings.unconfirmed.push(unconfirmed("multiplicity is tolerance-ambiguous"));
                        continue;
                    }
                    let x = float_certificate(&parent, cluster.start);
                    let record = CounterexampleRecord {
                        spec: spec.clone(),
                        vertex: v,
                        name: g.vertex_name(v),
                        eigenvalue: Eigenvalue::Float(cluster.mean),
                        mul_parent: cluster.len,
                        mul_child: screen.count,
                        mode: Mode::Float,
                        certificate: Certificate::Float(x),
                    };
                    if verify_record(&record, tol)? {
                        findings.records.push(record);
                    } else {
                        findings.unconfirmed.push(unconfirmed("floating certificate failed re-verification"));
                    }
                }
            }
        }
    }
    Ok(findings)
}

fn float_certificate(s: &Spectrum, index: usize) -> Vec<f64> {
    s.eigenvectors()[index].clone()
}

fn push_verified(findings: &mut SpecFindings, record: CounterexampleRecord, tol: &Tolerances) -> Result<(), SearchError> {
    if verify_record(&record, tol)? {
        findings.records.push(record);
    } else {
        findings.unconfirmed.push(UnconfirmedCandidate {
            spec: record.spec,
            vertex: record.vertex,
            name: record.name,
            eigenvalue: record.eigenvalue.approx(),
            mul_parent: record.mul_parent,
            mul_child: record.mul_child,
            reason: "exact certificate failed re-verification".into(),
        });
    }
    Ok(())
}
