use super::ChainGraphSpec;

/// All compositions of `total` into `parts` positive parts, in
/// lexicographic order.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=remaining - (parts - 1) {
            prefix.push(first);
            rec(remaining - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Every spec with exactly `n` vertices and `k` cells per class, ordered
/// lexicographically by `u_sizes` and then `v_sizes`.
fn specs_with(n: usize, k: usize) -> Vec<ChainGraphSpec> {
    let mut pairs = Vec::new();
    for u_total in k..=n.saturating_sub(k) {
        let v_total = n - u_total;
        let vs = compositions(v_total, k);
        for u in compositions(u_total, k) {
            for v in &vs {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    pairs.sort();
    pairs
        .into_iter()
        .map(|(u, v)| ChainGraphSpec::new(u, v).expect("compositions have positive parts"))
        .collect()
}

/// Lazy stream over all chain-graph specs with at most `max_n` vertices,
/// ordered by vertex count, then `k`, then `u_sizes`, then `v_sizes`.
#[derive(Debug, Clone)]
pub struct ChainSpecIter {
    max_n: usize,
    n: usize,
    k: usize,
    batch: std::vec::IntoIter<ChainGraphSpec>,
}

impl Iterator for ChainSpecIter {
    type Item = ChainGraphSpec;

    fn next(&mut self) -> Option<ChainGraphSpec> {
        loop {
            if let Some(s) = self.batch.next() {
                return Some(s);
            }
            self.k += 1;
            if 2 * self.k > self.n {
                self.n += 1;
                self.k = 1;
            }
            if self.n > self.max_n {
                return None;
            }
            self.batch = specs_with(self.n, self.k).into_iter();
        }
    }
}

pub fn enumerate_chain_specs(max_n: usize) -> ChainSpecIter {
    ChainSpecIter {
        max_n,
        n: 2,
        k: 0,
        batch: Vec::new().into_iter(),
    }
}

/// Half graphs `H(1), H(2), …` with at most `max_n` vertices.
pub fn enumerate_half_graphs(max_n: usize) -> impl Iterator<Item = ChainGraphSpec> {
    (1..=max_n / 2).map(|k| ChainGraphSpec::half(k).expect("k ≥ 1"))
}
