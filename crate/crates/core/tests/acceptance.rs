//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chain_spectra::exact::{exact_multiplicity, QuadraticNumber};
use chain_spectra::graph::{enumerate_chain_specs, half_graph, Graph};
use chain_spectra::spectra::{check_interlacing, float_multiplicity, graph_spectrum, psd_identity_check};
use chain_spectra::theorems::{
    check_nonzero_simplicity, downer_classify, eigenvalue_gap_check, period10_vector, period6_vector,
    table_fixture_check, verify_max_degree_downer, verify_pattern_family, Eigenvalue, Mode, PatternFamily,
    PatternVector,
};
use chain_spectra::Tolerances;
use common::oracle::{characteristic_polynomial, oracle_eigenvalues, oracle_multiplicity, OracleValue};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tol() -> Tolerances {
    Tolerances::default()
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(t)
    } else {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    }
}

/// `A x − λ x` from the edge list.
fn residual(g: &Graph, x: &[QuadraticNumber], lambda: &QuadraticNumber) -> Vec<QuadraticNumber> {
    let mut r: Vec<QuadraticNumber> = x.iter().map(|e| -(lambda * e)).collect();
    for (a, b) in g.edges() {
        r[a] += &x[b];
        r[b] += &x[a];
    }
    r
}

fn pattern_sweep(
    family: PatternFamily,
    build: fn(usize) -> Result<PatternVector, chain_spectra::theorems::PatternRefusal>,
    max_k: usize,
    residues: [(usize, QuadraticNumber); 2],
    limit: Duration,
) -> Outcome {
    let start = Instant::now();
    let period = family.period();
    let mut checked = 0;
    for k in 1..=max_k {
        let Some((_, lambda)) = residues.iter().find(|(r, _)| k % period == *r) else {
            if build(k).is_ok() {
                return Err(format!("k = {k} accepted outside the residue classes"));
            }
            continue;
        };
        let p = build(k).map_err(|e| e.to_string())?;
        if &p.eigenvalue != lambda {
            return Err(format!("k = {k}: eigenvalue {} instead of {lambda}", p.eigenvalue));
        }
        let x = p.full_vector();
        if x.iter().all(QuadraticNumber::is_zero) {
            return Err(format!("k = {k}: zero vector"));
        }
        let g = half_graph(k).map_err(|e| e.to_string())?;
        if let Some(v) = residual(&g, &x, lambda).iter().position(|e| !e.is_zero()) {
            return Err(format!("k = {k}: residual nonzero at vertex {v}"));
        }
        checked += 1;
    }
    let sweep = verify_pattern_family(family, max_k).map_err(|e| e.to_string())?;
    if !sweep.passed() || sweep.checked.len() != checked {
        return Err(format!("library sweep disagrees: {sweep:?}"));
    }
    let t = within(limit, start)?;
    Ok(format!("{checked} half graphs, exact zero residual, {t:.2?}"))
}

fn criterion_1() -> Outcome {
    let one = QuadraticNumber::one();
    pattern_sweep(
        PatternFamily::Period6,
        period6_vector,
        103,
        [(1, one.clone()), (4, -one)],
        Duration::from_secs(10),
    )
}

fn criterion_2() -> Outcome {
    let w = QuadraticNumber::omega();
    pattern_sweep(
        PatternFamily::Period10,
        period10_vector,
        107,
        [(7, w.clone()), (2, -w)],
        Duration::from_secs(30),
    )
}

fn criterion_3() -> Outcome {
    let n = QuadraticNumber::from_integer;
    let w = QuadraticNumber::omega;
    // (s, entry, upper, sum, upper, sum) as printed
    let first: Vec<(usize, QuadraticNumber, usize, QuadraticNumber, usize, QuadraticNumber)> = vec![
        (1, n(1), 4, n(-1), 1, n(1)),
        (2, n(0), 3, n(0), 6, n(0)),
        (3, n(-1), 2, n(1), 5, n(-1)),
        (4, n(-1), 1, n(1), 4, n(-1)),
        (5, n(0), 6, n(0), 3, n(0)),
        (6, n(1), 5, n(-1), 2, n(1)),
    ];
    let second = vec![
        (1, w(), 7, n(1) - w(), 2, w() - n(1)),
        (2, n(-1), 6, -w(), 1, w()),
        (3, n(0), 5, n(0), 10, n(0)),
        (4, n(1), 4, w(), 9, -w()),
        (5, -w(), 3, w() - n(1), 8, n(1) - w()),
        (6, -w(), 2, w() - n(1), 7, n(1) - w()),
        (7, n(1), 1, w(), 6, -w()),
        (8, n(0), 10, n(0), 5, n(0)),
        (9, n(-1), 9, -w(), 4, w()),
        (10, w(), 8, n(1) - w(), 3, w() - n(1)),
    ];
    let mut rows = 0;
    for (family, printed) in [(PatternFamily::Period6, first), (PatternFamily::Period10, second)] {
        let report = table_fixture_check(family);
        if !report.passed() {
            return Err(format!("{family:?}: identities fail"));
        }
        if report.rows.len() != printed.len() {
            return Err(format!("{family:?}: {} rows", report.rows.len()));
        }
        for (row, (s, entry, u1, s1, u2, s2)) in report.rows.iter().zip(printed) {
            let got = (
                row.s,
                &row.entry,
                row.columns[0].upper,
                &row.columns[0].sum,
                row.columns[1].upper,
                &row.columns[1].sum,
            );
            if got != (s, &entry, u1, &s1, u2, &s2) {
                return Err(format!("{family:?} row {s}: computed {got:?}"));
            }
            rows += 1;
        }
    }
    Ok(format!("{rows} rows match"))
}

fn criterion_4() -> Outcome {
    let g = half_graph(7).map_err(|e| e.to_string())?;
    let pattern = period6_vector(7).map_err(|e| e.to_string())?;
    let mut predicted: Vec<String> = Vec::new();
    for class in ["u", "v"] {
        predicted.extend(pattern.zero_positions().iter().map(|i| format!("{class}{i}")));
    }
    let expected = ["u2", "u5", "v2", "v5"];
    if predicted != expected {
        return Err(format!("pattern zeros at {predicted:?}"));
    }
    for lambda in [QuadraticNumber::one(), -QuadraticNumber::one()] {
        let r = downer_classify(&g, &Eigenvalue::Exact(lambda.clone()), Mode::Exact, &tol()).map_err(|e| e.to_string())?;
        if r.non_downer_names() != expected || r.mul_parent != 1 {
            return Err(format!("λ = {lambda}: non-downers {:?}", r.non_downer_names()));
        }
    }
    Ok("H(7): non-downer {u2, u5, v2, v5} at λ = 1 and λ = −1".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let (mut specs, mut eigenvalues) = (0, 0);
    for spec in enumerate_chain_specs(10) {
        let r = verify_max_degree_downer(&spec, Mode::Exact, &tol()).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("{spec}: {:?}", r.violations[0]));
        }
        specs += 1;
        eigenvalues += r.eigenvalues_checked;
    }
    let t = within(Duration::from_secs(300), start)?;
    Ok(format!("{specs} specs, {eigenvalues} nonzero eigenvalues, zero violations, {t:.2?}"))
}

fn criterion_6() -> Outcome {
    let tol = tol();
    let mut specs = 0;
    let mut smallest = f64::INFINITY;
    for spec in enumerate_chain_specs(12) {
        let s = graph_spectrum(&spec.build(), &tol).map_err(|e| e.to_string())?;
        let r = eigenvalue_gap_check(&s, &tol);
        if !r.ok {
            return Err(format!("{spec}: eigenvalues {:?} inside the gap", r.inside));
        }
        if let Some(x) = r.closest_to_gap {
            smallest = smallest.min(x.abs());
        }
        specs += 1;
    }
    let mut min_gram = f64::INFINITY;
    for k in 1..=50 {
        let r = psd_identity_check(k, &tol);
        if !r.passed() || r.min_gram_eigenvalue < 0.25 - 1e-9 {
            return Err(format!("staircase k = {k}: {r:?}"));
        }
        min_gram = min_gram.min(r.min_gram_eigenvalue);
    }
    Ok(format!(
        "{specs} specs, smallest nonzero |λ| = {smallest:.6}; Gram identity k ≤ 50, min eigenvalue {min_gram:.6}"
    ))
}

fn criterion_7() -> Outcome {
    let tol = tol();
    let mut pairs = 0;
    for spec in enumerate_chain_specs(10) {
        let g = spec.build();
        let parent = graph_spectrum(&g, &tol).map_err(|e| e.to_string())?;
        for v in 0..g.n() {
            let child = graph_spectrum(&g.delete_vertex(v).map_err(|e| e.to_string())?, &tol).map_err(|e| e.to_string())?;
            if !check_interlacing(parent.eigenvalues(), child.eigenvalues(), 1e-8).map_err(|e| e.to_string())? {
                return Err(format!("{spec} minus vertex {v}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (G, G − v) pairs interlace"))
}

fn criterion_8() -> Outcome {
    let tol = tol();
    let w = QuadraticNumber::omega();
    let values = [
        (QuadraticNumber::zero(), OracleValue::Int(0)),
        (QuadraticNumber::one(), OracleValue::Int(1)),
        (-QuadraticNumber::one(), OracleValue::Int(-1)),
        (w.clone(), OracleValue::Omega),
        (-w, OracleValue::MinusOmega),
    ];
    let (mut graphs, mut worst) = (0, 0.0f64);
    for spec in enumerate_chain_specs(8) {
        let g = spec.build();
        let a: Vec<Vec<i64>> = g.adjacency_matrix().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let oracle = oracle_eigenvalues(&a);
        let s = graph_spectrum(&g, &tol).map_err(|e| e.to_string())?;
        if oracle.len() != s.len() {
            return Err(format!("{spec}: oracle found {} roots", oracle.len()));
        }
        for (x, y) in oracle.iter().zip(s.eigenvalues()) {
            worst = worst.max((x - y).abs());
            if (x - y).abs() > 1e-7 {
                return Err(format!("{spec}: oracle {x} vs {y}"));
            }
        }
        let p = characteristic_polynomial(&a);
        for (q, o) in &values {
            let exact = exact_multiplicity(&g, q);
            let float = float_multiplicity(&s, q.to_f64(), &tol);
            let from_poly = oracle_multiplicity(&p, *o);
            if float.ambiguous || float.count != exact || from_poly != exact {
                return Err(format!("{spec} at {q}: exact {exact}, float {float:?}, polynomial {from_poly}"));
            }
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, max eigenvalue deviation {worst:.1e}, multiplicities agree"))
}

fn criterion_9() -> Outcome {
    let tol = tol();
    let mut specs = 0;
    for spec in enumerate_chain_specs(12) {
        let g = spec.build();
        let s = graph_spectrum(&g, &tol).map_err(|e| e.to_string())?;
        let r = check_nonzero_simplicity(&g, &s, &tol);
        if !r.passed() {
            return Err(format!("{spec}: repeated {:?}", r.repeated));
        }
        specs += 1;
    }
    Ok(format!("{specs} specs, every nonzero eigenvalue simple"))
}

fn criterion_10() -> Outcome {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_chain-spectra"))
            .args(["search", "--max-n", "14"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        Ok(out.stdout)
    };
    let start = Instant::now();
    let (a, b) = (run()?, run()?);
    if a.is_empty() || a != b {
        return Err(format!("outputs differ ({} vs {} bytes)", a.len(), b.len()));
    }
    Ok(format!(
        "{} bytes, {} lines, identical, {:.2?}",
        a.len(),
        a.iter().filter(|&&c| c == b'\n').count(),
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("period-6 eigenvectors of H(k), k ≤ 103", criterion_1),
        ("period-10 eigenvectors of H(k), k ≤ 107", criterion_2),
        ("prefix-sum tables", criterion_3),
        ("non-downer vertices of H(7)", criterion_4),
        ("maximum-degree vertices downer, n ≤ 10", criterion_5),
        ("no eigenvalue in (0, 1/2), n ≤ 12; Gram bound", criterion_6),
        ("interlacing, n ≤ 10", criterion_7),
        ("characteristic polynomial oracle, n ≤ 8", criterion_8),
        ("simple nonzero eigenvalues, n ≤ 12", criterion_9),
        ("deterministic search output, n ≤ 14", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
