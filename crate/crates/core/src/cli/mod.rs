//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when a mathematical check fails (the
//! report then carries a witness) and 2 for usage or input errors.

pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::config::Tolerances;
use crate::exact::{QuadraticNumber, Rational};
use crate::graph::io::{parse_graph, write_graph, GraphDocument};
use crate::graph::{enumerate_chain_specs, half_graph, ChainGraphSpec, Graph};
use crate::search::{find_non_downer, map_specs, SearchJob, SearchMode, SpecFamily};
use crate::spectra::{graph_spectrum, psd_identity_check};
use crate::theorems::{
    downer_classify, eigenvalue_gap_check, table_fixture_check, verify_max_degree_downer, verify_pattern_family,
    Eigenvalue, Mode, PatternFamily,
};

use report::{downer_json, record_json, spec_json, table_json, unconfirmed_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chain-spectra", version, about = "Spectra, downer vertices and eigenvalue patterns of chain graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Clone, Args)]
struct RunArgs {
    /// How multiplicities are decided.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Eigenvector entries at most this large count as zero.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Eigenvalue clustering tolerance.
    #[arg(long = "group-tol", global = true)]
    group_tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the graph file of a chain graph.
    Build {
        /// Inline JSON document, a file path, or `H(k)`.
        spec: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long = "u-sizes", value_delimiter = ',')]
        u_sizes: Option<Vec<usize>>,
        #[arg(long = "v-sizes", value_delimiter = ',')]
        v_sizes: Option<Vec<usize>>,
    },
    /// Eigenvalues, optionally with eigenvectors.
    Spectrum {
        graph: String,
        #[arg(long)]
        vectors: bool,
    },
    /// Classify every vertex as downer or not for one eigenvalue.
    Downer {
        graph: String,
        /// `1`, `-1`, `w`, `-w`, `p/q` or a decimal.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Run one of the built-in checks.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long = "max-k")]
        max_k: Option<usize>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
    /// Search all chain graphs for non-downer vertices of nonzero eigenvalues.
    Search {
        #[arg(long = "max-n")]
        max_n: usize,
        /// Only half graphs.
        #[arg(long = "half-graphs")]
        half_graphs: bool,
        /// Comma-separated exact eigenvalues to restrict to.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<String>>,
    },
    /// Look for eigenvalues with `0 < |λ| < 1/2`.
    #[command(name = "gap-check")]
    GapCheck { graph: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Maximum-degree vertices are downer (all specs up to --max-n).
    #[value(name = "thm3.1", alias = "max-degree")]
    MaxDegree,
    /// Period-6 eigenvectors at ±1 (half graphs up to --max-k).
    #[value(name = "thm3.2", alias = "period6")]
    Period6,
    /// Period-10 eigenvectors at ±ω (half graphs up to --max-k).
    #[value(name = "thm3.3", alias = "period10")]
    Period10,
    /// No eigenvalue strictly between 0 and 1/2 in absolute value.
    #[value(name = "thm4.1", alias = "gap")]
    Gap,
    /// Prefix-sum tables of both patterns.
    Tables,
    /// Gram matrix identity and bound of the staircase block.
    Psd,
}

impl Check {
    fn label(self) -> &'static str {
        match self {
            Check::MaxDegree => "thm3.1",
            Check::Period6 => "thm3.2",
            Check::Period10 => "thm3.3",
            Check::Gap => "thm4.1",
            Check::Tables => "tables",
            Check::Psd => "psd",
        }
    }
}

/// What went wrong, always reported with exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

struct Rendered {
    body: String,
    failed: bool,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli.run, &out.body) {
                eprintln!("error: {}", e.0);
                return EXIT_USAGE;
            }
            if out.failed {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            EXIT_USAGE
        }
    }
}

fn emit(run: &RunArgs, body: &str) -> CliResult<()> {
    match &run.output {
        Some(path) => std::fs::write(path, body).map_err(|e| usage(format!("output: cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn tolerances(run: &RunArgs) -> CliResult<Tolerances> {
    let mut tol = Tolerances::default();
    if let Some(t) = run.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(usage(format!("tol: must be a positive number, got {t}")));
        }
        tol.zero_tol = t;
    }
    if let Some(t) = run.group_tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(usage(format!("group-tol: must be a positive number, got {t}")));
        }
        tol.group_tol = t;
    }
    if run.workers == 0 {
        return Err(usage("workers: must be ≥ 1"));
    }
    Ok(tol)
}

fn execute(cli: &Cli) -> CliResult<Rendered> {
    let run = &cli.run;
    let tol = tolerances(run)?;
    match &cli.command {
        Command::Build { spec, k, u_sizes, v_sizes } => build(run, spec.as_deref(), *k, u_sizes, v_sizes),
        Command::Spectrum { graph, vectors } => spectrum(run, &load_graph(graph)?, *vectors, &tol),
        Command::Downer { graph, lambda } => downer(run, &load_graph(graph)?, lambda, &tol),
        Command::Verify { check, max_k, max_n } => verify(run, *check, *max_k, *max_n, &tol),
        Command::Search { max_n, half_graphs, lambda } => search(run, *max_n, *half_graphs, lambda.as_deref(), &tol),
        Command::GapCheck { graph } => gap_check(run, &load_graph(graph)?, &tol),
    }
}

/// `H(7)` or `H7`.
fn parse_half_graph(s: &str) -> Option<usize> {
    let rest = s.strip_prefix('H')?;
    let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    inner.trim().parse().ok()
}

/// An inline document, `H(k)`, or a path to a graph file.
fn load_graph(arg: &str) -> CliResult<Graph> {
    let trimmed = arg.trim();
    if let Some(k) = parse_half_graph(trimmed) {
        return half_graph(k).map_err(|e| usage(format!("graph: {e}")));
    }
    let text = if trimmed.starts_with('{') {
        trimmed.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| usage(format!("graph: cannot read {arg}: {e}")))?
    };
    parse_graph(&text).map_err(|e| usage(format!("graph: {e}")))
}

/// `1`, `-1`, `w`, `-w` (also `ω`), `p/q` and integers are exact; anything
/// else must be a finite decimal.
pub fn parse_lambda(s: &str) -> Result<Eigenvalue, String> {
    let t = s.trim();
    let bad = |why: &str| format!("lambda: cannot parse {s:?}: {why}");
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t.strip_prefix('+').unwrap_or(t).trim()),
    };
    let sign = |q: QuadraticNumber| if neg { -q } else { q };
    if body == "w" || body == "ω" {
        return Ok(Eigenvalue::Exact(sign(QuadraticNumber::omega())));
    }
    if let Some((p, q)) = body.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad("numerator is not an integer"))?;
        let q: BigInt = q.trim().parse().map_err(|_| bad("denominator is not an integer"))?;
        if q.is_zero() {
            return Err(bad("denominator is zero"));
        }
        return Ok(Eigenvalue::Exact(sign(QuadraticNumber::from_rational(Rational::new(p, q)))));
    }
    if !body.is_empty() && body.chars().all(|c| c.is_ascii_digit()) {
        let n: BigInt = body.parse().map_err(|_| bad("not an integer"))?;
        return Ok(Eigenvalue::Exact(sign(QuadraticNumber::from_rational(Rational::from_integer(n)))));
    }
    match t.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(Eigenvalue::Float(x)),
        _ => Err(bad("expected 1, -1, w, -w, p/q or a decimal")),
    }
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
    Ok(String::from_utf8(bytes)?)
}

fn json_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn build(
    run: &RunArgs,
    spec: Option<&str>,
    k: Option<usize>,
    u_sizes: &Option<Vec<usize>>,
    v_sizes: &Option<Vec<usize>>,
) -> CliResult<Rendered> {
    let g = match (spec, u_sizes, v_sizes) {
        (Some(s), None, None) => load_graph(s)?,
        (None, Some(u), Some(v)) => {
            let k = k.unwrap_or(u.len());
            GraphDocument::ChainSpec {
                k,
                u_sizes: u.clone(),
                v_sizes: v.clone(),
            }
            .into_graph()
            .map_err(|e| usage(format!("spec: {e}")))?
        }
        (None, None, None) => match k {
            Some(k) => half_graph(k).map_err(|e| usage(format!("spec: {e}")))?,
            None => return Err(usage("spec: give a document, H(k), --k, or --u-sizes with --v-sizes")),
        },
        (None, _, _) => return Err(usage("spec: --u-sizes and --v-sizes go together")),
        (Some(_), _, _) => return Err(usage("spec: give either a document or --u-sizes/--v-sizes")),
    };
    let body = match run.format {
        Format::Json => format!("{}\n", write_graph(&g)),
        Format::Csv => {
            let rows: Vec<Vec<String>> = g.edges().into_iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect();
            to_csv(&["u", "v"], &rows)?
        }
        Format::Text => {
            let mut s = format!("{} vertices, {} edges\n", g.n(), g.edge_count());
            for v in 0..g.n() {
                let names: Vec<String> = g.neighbors(v).iter().map(|&u| g.vertex_name(u)).collect();
                let _ = writeln!(s, "{}: {}", g.vertex_name(v), names.join(" "));
            }
            s
        }
    };
    Ok(Rendered { body, failed: false })
}

fn graph_name(g: &Graph) -> String {
    match g.spec() {
        Some(s) => s.to_string(),
        None => format!("edge-list n={} m={}", g.n(), g.edge_count()),
    }
}

fn spectrum(run: &RunArgs, g: &Graph, vectors: bool, tol: &Tolerances) -> CliResult<Rendered> {
    let s = graph_spectrum(g, tol)?;
    let body = match run.format {
        Format::Json => {
            let mut v = json!({
                "graph": graph_name(g),
                "n": g.n(),
                "eigenvalues": s.eigenvalues(),
            });
            if vectors {
                v["eigenvectors"] = json!(s.eigenvectors());
            }
            json_line(&v)
        }
        Format::Csv => {
            let mut header = vec!["index".to_string(), "eigenvalue".to_string()];
            if vectors {
                header.extend((0..g.n()).map(|v| g.vertex_name(v)));
            }
            let rows: Vec<Vec<String>> = (0..s.len())
                .map(|i| {
                    let mut row = vec![i.to_string(), s.eigenvalues()[i].to_string()];
                    if vectors {
                        row.extend(s.eigenvectors()[i].iter().map(f64::to_string));
                    }
                    row
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            to_csv(&header, &rows)?
        }
        Format::Text => {
            let mut out = format!("{}\n", graph_name(g));
            for (i, e) in s.eigenvalues().iter().enumerate() {
                let _ = write!(out, "{e:>22.15}");
                if vectors {
                    let entries: Vec<String> = s.eigenvectors()[i].iter().map(|x| format!("{x:.6}")).collect();
                    let _ = write!(out, "  [{}]", entries.join(", "));
                }
                out.push('\n');
            }
            out
        }
    };
    Ok(Rendered { body, failed: false })
}

fn downer(run: &RunArgs, g: &Graph, lambda: &str, tol: &Tolerances) -> CliResult<Rendered> {
    let lambda = parse_lambda(lambda).map_err(UsageError)?;
    let mode = match (run.mode, &lambda) {
        (Some(ModeArg::Exact), _) => Mode::Exact,
        (Some(ModeArg::Float), _) => Mode::Float,
        (_, Eigenvalue::Exact(_)) => Mode::Exact,
        (_, Eigenvalue::Float(_)) => Mode::Float,
    };
    let report = downer_classify(g, &lambda, mode, tol).map_err(|e| usage(format!("lambda: {e}")))?;
    let body = match run.format {
        Format::Json => json_line(&downer_json(&report)),
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .vertices
                .iter()
                .map(|v| {
                    vec![
                        report.graph.clone(),
                        v.vertex.to_string(),
                        v.name.clone(),
                        report.eigenvalue.to_string(),
                        v.mul_parent.to_string(),
                        v.mul_child.to_string(),
                        v.is_downer.to_string(),
                        json!(v.mode).as_str().unwrap_or_default().to_string(),
                        v.ambiguous.to_string(),
                    ]
                })
                .collect();
            to_csv(
                &["graph", "vertex", "name", "eigenvalue", "mul_parent", "mul_child", "is_downer", "mode", "ambiguous"],
                &rows,
            )?
        }
        Format::Text => {
            let mut out = format!(
                "{} at λ = {}: multiplicity {}\n",
                report.graph, report.eigenvalue, report.mul_parent
            );
            let names = report.non_downer_names();
            if names.is_empty() {
                out.push_str("every vertex is downer\n");
            } else {
                let _ = writeln!(out, "non-downer: {}", names.join(", "));
            }
            out
        }
    };
    Ok(Rendered { body, failed: false })
}

fn all_specs(max_n: usize) -> CliResult<Vec<ChainGraphSpec>> {
    if max_n < 2 {
        return Err(usage(format!("max-n: must be ≥ 2, got {max_n}")));
    }
    Ok(enumerate_chain_specs(max_n).collect())
}

fn verify(
    run: &RunArgs,
    check: Check,
    max_k: Option<usize>,
    max_n: Option<usize>,
    tol: &Tolerances,
) -> CliResult<Rendered> {
    let report = match check {
        Check::MaxDegree => {
            let max_n = max_n.unwrap_or(10);
            let mode = match run.mode {
                Some(ModeArg::Float) => Mode::Float,
                _ => Mode::Exact,
            };
            let specs = all_specs(max_n)?;
            let reports = map_specs(&specs, run.workers, |s| verify_max_degree_downer(s, mode, tol))?;
            let eigenvalues: usize = reports.iter().map(|r| r.eigenvalues_checked).sum();
            let violations: Vec<Value> = reports
                .iter()
                .zip(&specs)
                .flat_map(|(r, s)| {
                    r.violations.iter().map(move |v| {
                        json!({
                            "spec": spec_json(s),
                            "vertex": v.vertex,
                            "name": v.name,
                            "eigenvalue": v.eigenvalue,
                            "mul_parent": v.mul_parent,
                            "mul_child": v.mul_child,
                        })
                    })
                })
                .collect();
            json!({
                "check": check.label(),
                "passed": violations.is_empty(),
                "max_n": max_n,
                "mode": mode,
                "specs_checked": specs.len(),
                "eigenvalues_checked": eigenvalues,
                "witness": violations.first(),
                "violations": violations,
            })
        }
        Check::Period6 | Check::Period10 => {
            let (family, default_k) = if check == Check::Period6 {
                (PatternFamily::Period6, 103)
            } else {
                (PatternFamily::Period10, 107)
            };
            let max_k = max_k.unwrap_or(default_k);
            let sweep = verify_pattern_family(family, max_k)?;
            json!({
                "check": check.label(),
                "passed": sweep.passed(),
                "family": sweep.family,
                "max_k": max_k,
                "checked": sweep.checked,
                "witness": sweep.failures.first().map(|k| json!({"k": k})),
                "failures": sweep.failures,
            })
        }
        Check::Gap => {
            let max_n = max_n.unwrap_or(12);
            let specs = all_specs(max_n)?;
            let reports = map_specs(&specs, run.workers, |s| {
                graph_spectrum(&s.build(), tol).map(|sp| eigenvalue_gap_check(&sp, tol))
            })?;
            let violations: Vec<Value> = reports
                .iter()
                .zip(&specs)
                .filter(|(r, _)| !r.ok)
                .map(|(r, s)| json!({"spec": spec_json(s), "inside": r.inside}))
                .collect();
            let closest = reports
                .iter()
                .zip(&specs)
                .filter_map(|(r, s)| r.closest_to_gap.map(|x| (x.abs(), s)))
                .min_by(|a, b| a.0.total_cmp(&b.0));
            json!({
                "check": check.label(),
                "passed": violations.is_empty(),
                "max_n": max_n,
                "specs_checked": specs.len(),
                "smallest_nonzero_magnitude": closest.map(|(x, s)| json!({"value": x, "spec": spec_json(s)})),
                "witness": violations.first(),
                "violations": violations,
            })
        }
        Check::Tables => {
            let tables: Vec<_> = [PatternFamily::Period6, PatternFamily::Period10]
                .into_iter()
                .map(table_fixture_check)
                .collect();
            let witness = tables.iter().find(|t| !t.passed()).map(table_json);
            json!({
                "check": check.label(),
                "passed": tables.iter().all(|t| t.passed()),
                "witness": witness,
                "tables": tables.iter().map(table_json).collect::<Vec<_>>(),
            })
        }
        Check::Psd => {
            let max_k = max_k.unwrap_or(50);
            if max_k == 0 {
                return Err(usage("max-k: must be ≥ 1"));
            }
            let reports: Vec<_> = (1..=max_k).map(|k| psd_identity_check(k, tol)).collect();
            let min = reports.iter().map(|r| r.min_gram_eigenvalue).fold(f64::INFINITY, f64::min);
            json!({
                "check": check.label(),
                "passed": reports.iter().all(|r| r.passed()),
                "max_k": max_k,
                "min_gram_eigenvalue": min,
                "witness": reports.iter().find(|r| !r.passed()),
                "reports": reports,
            })
        }
    };
    let passed = report["passed"].as_bool().unwrap_or(false);
    let body = match run.format {
        Format::Json => json_line(&report),
        Format::Csv => to_csv(
            &["check", "passed", "witness"],
            &[vec![
                check.label().to_string(),
                passed.to_string(),
                if report["witness"].is_null() { String::new() } else { report["witness"].to_string() },
            ]],
        )?,
        Format::Text => {
            let mut out = format!("{}: {}\n", check.label(), if passed { "PASS" } else { "FAIL" });
            if !passed {
                let _ = writeln!(out, "witness: {}", report["witness"]);
            }
            out
        }
    };
    Ok(Rendered { body, failed: !passed })
}

fn search(
    run: &RunArgs,
    max_n: usize,
    half_graphs: bool,
    lambda: Option<&[String]>,
    tol: &Tolerances,
) -> CliResult<Rendered> {
    let filter = match lambda {
        None => None,
        Some(values) => Some(
            values
                .iter()
                .map(|s| match parse_lambda(s)? {
                    Eigenvalue::Exact(q) => Ok(q),
                    Eigenvalue::Float(_) => Err(format!("lambda: search filters must be exact, got {s:?}")),
                })
                .collect::<Result<Vec<_>, String>>()
                .map_err(UsageError)?,
        ),
    };
    let job = SearchJob {
        max_n,
        mode: match run.mode {
            Some(ModeArg::Exact) => SearchMode::Exact,
            Some(ModeArg::Float) => SearchMode::Float,
            _ => SearchMode::Hybrid,
        },
        eigenvalue_filter: filter,
        workers: run.workers,
        family: if half_graphs { SpecFamily::HalfGraphs } else { SpecFamily::All },
    };
    if max_n < 2 {
        return Err(usage(format!("max-n: must be ≥ 2, got {max_n}")));
    }
    let outcome = find_non_downer(&job, tol)?;
    let body = match run.format {
        Format::Json => {
            let mut out = String::new();
            for r in &outcome.records {
                out.push_str(&record_json(r).to_string());
                out.push('\n');
            }
            for c in &outcome.unconfirmed {
                out.push_str(&unconfirmed_json(c).to_string());
                out.push('\n');
            }
            let summary = json!({
                "type": "summary",
                "max_n": max_n,
                "specs_examined": outcome.specs_examined,
                "records": outcome.records.len(),
                "unconfirmed": outcome.unconfirmed.len(),
            });
            out.push_str(&summary.to_string());
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = outcome
                .records
                .iter()
                .map(|r| {
                    vec![
                        "record".into(),
                        r.spec.to_string(),
                        r.vertex.to_string(),
                        r.name.clone(),
                        r.eigenvalue.to_string(),
                        r.mul_parent.to_string(),
                        r.mul_child.to_string(),
                    ]
                })
                .collect();
            rows.extend(outcome.unconfirmed.iter().map(|c| {
                vec![
                    "unconfirmed".into(),
                    c.spec.to_string(),
                    c.vertex.to_string(),
                    c.name.clone(),
                    c.eigenvalue.to_string(),
                    c.mul_parent.to_string(),
                    c.mul_child.to_string(),
                ]
            }));
            to_csv(&["status", "spec", "vertex", "name", "eigenvalue", "mul_parent", "mul_child"], &rows)?
        }
        Format::Text => {
            let mut out = String::new();
            for r in &outcome.records {
                let _ = writeln!(
                    out,
                    "{}  {}  λ = {}  multiplicity {} → {}",
                    r.spec, r.name, r.eigenvalue, r.mul_parent, r.mul_child
                );
            }
            for c in &outcome.unconfirmed {
                let _ = writeln!(out, "{}  {}  λ ≈ {}  unconfirmed: {}", c.spec, c.name, c.eigenvalue, c.reason);
            }
            let _ = writeln!(
                out,
                "{} specs, {} records, {} unconfirmed",
                outcome.specs_examined,
                outcome.records.len(),
                outcome.unconfirmed.len()
            );
            out
        }
    };
    Ok(Rendered { body, failed: false })
}

fn gap_check(run: &RunArgs, g: &Graph, tol: &Tolerances) -> CliResult<Rendered> {
    let r = eigenvalue_gap_check(&graph_spectrum(g, tol)?, tol);
    let body = match run.format {
        Format::Json => json_line(&json!({
            "graph": graph_name(g),
            "ok": r.ok,
            "closest_to_gap": r.closest_to_gap,
            "inside": r.inside,
        })),
        Format::Csv => to_csv(
            &["graph", "ok", "closest_to_gap", "inside"],
            &[vec![
                graph_name(g),
                r.ok.to_string(),
                r.closest_to_gap.map(|x| x.to_string()).unwrap_or_default(),
                r.inside.iter().map(f64::to_string).collect::<Vec<_>>().join(";"),
            ]],
        )?,
        Format::Text => match (r.ok, r.closest_to_gap) {
            (true, Some(x)) => format!("{}: ok, closest nonzero eigenvalue {x}\n", graph_name(g)),
            (true, None) => format!("{}: ok, no nonzero eigenvalues\n", graph_name(g)),
            (false, _) => format!("{}: eigenvalues inside the gap: {:?}\n", graph_name(g), r.inside),
        },
    };
    Ok(Rendered { body, failed: !r.ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_syntax() {
        let w = QuadraticNumber::omega();
        assert_eq!(parse_lambda("1"), Ok(Eigenvalue::Exact(QuadraticNumber::one())));
        assert_eq!(parse_lambda("-1"), Ok(Eigenvalue::Exact(-QuadraticNumber::one())));
        assert_eq!(parse_lambda("w"), Ok(Eigenvalue::Exact(w.clone())));
        assert_eq!(parse_lambda("-ω"), Ok(Eigenvalue::Exact(-w)));
        assert_eq!(parse_lambda("-3/6"), Ok(Eigenvalue::Exact(QuadraticNumber::from_fractions(-1, 2, 0, 1))));
        assert_eq!(parse_lambda("0.25"), Ok(Eigenvalue::Float(0.25)));
        assert!(parse_lambda("1/0").unwrap_err().starts_with("lambda"));
        assert!(parse_lambda("x").is_err());
        assert!(parse_lambda("inf").is_err());
    }

    #[test]
    fn half_graph_shorthand() {
        assert_eq!(parse_half_graph("H(7)"), Some(7));
        assert_eq!(parse_half_graph("H12"), Some(12));
        assert_eq!(parse_half_graph("G(3)"), None);
    }
}
