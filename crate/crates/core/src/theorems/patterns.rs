//! Periodic eigenvectors of half graphs.
//!
//! Two families are known. Repeating `(1, 0, −1, −1, 0, 1)` on both color
//! classes gives an eigenvector of `H(k)` for `λ = 1` when `k ≡ 1 (mod 6)`
//! and for `λ = −1` when `k ≡ 4 (mod 6)`. Repeating
//! `(ω, −1, 0, 1, −ω, −ω, 1, 0, −1, ω)` gives one for `λ = ω` when
//! `k ≡ 7 (mod 10)` and for `λ = −ω` when `k ≡ 2 (mod 10)`. Both rest on
//! prefix-sum identities of the repeating block, which
//! [`table_fixture_check`] recomputes.

use std::fmt;

use serde::Serialize;

use super::TheoremError;
use crate::exact::QuadraticNumber;
use crate::graph::{half_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternFamily {
    Period6,
    Period10,
}

/// How the pattern `x` is laid out over the two color classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignLayout {
    /// `(x, x)`
    Same,
    /// `(x, −x)`
    Flipped,
}

/// One residue class of `k` for which the pattern is an eigenvector.
#[derive(Debug, Clone)]
pub struct PatternCase {
    pub residue: usize,
    pub eigenvalue: QuadraticNumber,
}

impl PatternFamily {
    pub fn period(self) -> usize {
        match self {
            PatternFamily::Period6 => 6,
            PatternFamily::Period10 => 10,
        }
    }

    /// The repeating block `(p₁, …, p_period)`.
    pub fn block(self) -> Vec<QuadraticNumber> {
        match self {
            PatternFamily::Period6 => [1, 0, -1, -1, 0, 1].into_iter().map(QuadraticNumber::from_integer).collect(),
            PatternFamily::Period10 => {
                let w = QuadraticNumber::omega();
                let i = QuadraticNumber::from_integer;
                vec![w.clone(), i(-1), i(0), i(1), -&w, -&w, i(1), i(0), i(-1), w]
            }
        }
    }

    /// Residue classes of `k` and their eigenvalues, in the column order of
    /// the prefix-sum tables.
    pub fn cases(self) -> [PatternCase; 2] {
        let one = QuadraticNumber::one;
        let w = QuadraticNumber::omega;
        match self {
            PatternFamily::Period6 => [
                PatternCase { residue: 4, eigenvalue: -one() },
                PatternCase { residue: 1, eigenvalue: one() },
            ],
            PatternFamily::Period10 => [
                PatternCase { residue: 7, eigenvalue: w() },
                PatternCase { residue: 2, eigenvalue: -w() },
            ],
        }
    }

    /// `p_s` for a 1-based position `i ≡ s (mod period)`.
    pub fn entry(self, i: usize) -> QuadraticNumber {
        self.block()[(i - 1) % self.period()].clone()
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "period-{}", self.period())
    }
}

/// An exact eigenvector of `H(k)` built from a periodic pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternVector {
    pub family: PatternFamily,
    /// `x = (x₁, …, x_k)`.
    pub entries: Vec<QuadraticNumber>,
    pub eigenvalue: QuadraticNumber,
    pub layout: SignLayout,
}

impl PatternVector {
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// The full vector over the `2k` vertices of `H(k)` in canonical order.
    pub fn full_vector(&self) -> Vec<QuadraticNumber> {
        let second: Vec<QuadraticNumber> = match self.layout {
            SignLayout::Same => self.entries.clone(),
            SignLayout::Flipped => self.entries.iter().map(|e| -e).collect(),
        };
        self.entries.iter().cloned().chain(second).collect()
    }

    pub fn graph(&self) -> Graph {
        half_graph(self.k()).expect("pattern vectors have k ≥ 1")
    }

    /// 1-based positions `i` with `xᵢ = 0`.
    pub fn zero_positions(&self) -> Vec<usize> {
        (1..=self.k()).filter(|&i| self.entries[i - 1].is_zero()).collect()
    }
}

/// Returned when `k` is in none of the residue classes of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternRefusal {
    pub family: PatternFamily,
    pub k: usize,
}

impl fmt::Display for PatternRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.family.cases();
        write!(
            f,
            "k = {} is not ≡ {} or {} (mod {})",
            self.k,
            a.residue,
            b.residue,
            self.family.period()
        )
    }
}

pub(crate) fn pattern_vector_for(family: PatternFamily, k: usize) -> Result<PatternVector, PatternRefusal> {
    let refusal = PatternRefusal { family, k };
    if k == 0 {
        return Err(refusal);
    }
    let case = family
        .cases()
        .into_iter()
        .find(|c| k % family.period() == c.residue)
        .ok_or(refusal)?;
    Ok(PatternVector {
        family,
        entries: (1..=k).map(|i| family.entry(i)).collect(),
        eigenvalue: case.eigenvalue,
        layout: SignLayout::Same,
    })
}

/// `(x, x)` with `xᵢ = a_s` for `i ≡ s (mod 6)`; eigenvalue 1 when
/// `k ≡ 1 (mod 6)`, −1 when `k ≡ 4 (mod 6)`.
pub fn period6_vector(k: usize) -> Result<PatternVector, PatternRefusal> {
    pattern_vector_for(PatternFamily::Period6, k)
}

/// `(x, x)` with `xᵢ = b_s` for `i ≡ s (mod 10)`; eigenvalue ω when
/// `k ≡ 7 (mod 10)`, −ω when `k ≡ 2 (mod 10)`.
pub fn period10_vector(k: usize) -> Result<PatternVector, PatternRefusal> {
    pattern_vector_for(PatternFamily::Period10, k)
}

/// Negates the `V` half of the vector and the eigenvalue. In a bipartite
/// graph this maps a λ-eigenvector to a (−λ)-eigenvector; applying it twice
/// gives back the input.
pub fn negate_classes(p: &PatternVector) -> PatternVector {
    PatternVector {
        family: p.family,
        entries: p.entries.clone(),
        eigenvalue: -&p.eigenvalue,
        layout: match p.layout {
            SignLayout::Same => SignLayout::Flipped,
            SignLayout::Flipped => SignLayout::Same,
        },
    }
}

/// Adds a duplicate of `v` to `g` and extends `x` by a zero at the new
/// vertex. When `x(v) = 0` and `x` is a λ-eigenvector of `g`, the result is
/// a λ-eigenvector of the larger graph.
pub fn extend_by_duplicate(
    g: &Graph,
    x: &[QuadraticNumber],
    v: usize,
) -> Result<(Graph, Vec<QuadraticNumber>), TheoremError> {
    if x.len() != g.n() {
        return Err(TheoremError::LengthMismatch { expected: g.n(), found: x.len() });
    }
    let (bigger, id) = g.add_duplicate_with_id(v)?;
    let mut y = x.to_vec();
    y.insert(id, QuadraticNumber::zero());
    Ok((bigger, y))
}

/// One prefix-sum identity: `Σ_{i=1}^{upper} pᵢ = λ·p_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCell {
    /// Upper index reduced into `1..=period`.
    pub upper: usize,
    pub sum: QuadraticNumber,
    pub expected: QuadraticNumber,
}

impl TableCell {
    pub fn holds(&self) -> bool {
        self.sum == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub s: usize,
    pub entry: QuadraticNumber,
    pub columns: [TableCell; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub family: PatternFamily,
    pub rows: Vec<TableRow>,
    /// Sum of one full period, which must vanish.
    pub period_sum: QuadraticNumber,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.period_sum.is_zero() && self.rows.iter().all(|r| r.columns.iter().all(TableCell::holds))
    }
}

/// Recomputes the prefix-sum table of a family. For residue `r` the upper
/// index is `r + 1 − s`, reduced modulo the period into `1..=period`
/// (`5 − s` and `2 − s` for period 6, `8 − s` and `3 − s` for period 10).
pub fn table_fixture_check(family: PatternFamily) -> TableReport {
    let period = family.period();
    let block = family.block();
    let prefix = |upper: usize| {
        block[..upper]
            .iter()
            .fold(QuadraticNumber::zero(), |acc, x| &acc + x)
    };
    let rows = (1..=period)
        .map(|s| {
            let entry = block[s - 1].clone();
            let columns = family.cases().map(|case| {
                let upper = ((case.residue + period - s) % period) + 1;
                TableCell {
                    upper,
                    sum: prefix(upper),
                    expected: &case.eigenvalue * &entry,
                }
            });
            TableRow { s, entry, columns }
        })
        .collect();
    TableReport {
        family,
        rows,
        period_sum: prefix(period),
    }
}
