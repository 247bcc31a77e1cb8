//! Labeled bipartite graphs, chain-graph construction and recognition.
//!
//! Vertex ids are positions in the canonical order: every `U` vertex comes
//! before every `V` vertex, and within a class vertices are sorted by cell
//! and then by index inside the cell. Spectra, eigenvectors and reports all
//! use this order.

mod enumerate;
pub mod io;
mod recognize;
mod spec;

pub use enumerate::{enumerate_chain_specs, enumerate_half_graphs, ChainSpecIter};
pub use recognize::{is_chain_adjacency, is_chain_graph};
pub use spec::{half_graph, ChainGraphSpec, HalfGraphId};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("k must be ≥ 1")]
    ZeroCells,
    #[error("{field} must have k = {k} entries, found {found}")]
    CellCountMismatch { field: &'static str, k: usize, found: usize },
    #[error("{field}[{index}] must be ≥ 1")]
    EmptyCell { field: &'static str, index: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("u_class must list the ids 0..{expected} (U vertices first), found {found:?}")]
    NonCanonicalClasses { expected: usize, found: Vec<usize> },
    #[error("edges[{index}]: {reason}")]
    BadEdge { index: usize, reason: String },
}

/// Color class of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Class {
    U,
    V,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::U => "u",
            Class::V => "v",
        })
    }
}

/// Metadata attached to a vertex at construction time.
///
/// `cell` is 1-based and only known for graphs built from a spec. `ordinal`
/// is the 1-based position of the vertex inside its class when it was
/// created; it gives the vertex its name (`u3`, `v1`, …) and survives
/// deletions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub class: Class,
    pub cell: Option<usize>,
    pub index: usize,
    pub ordinal: usize,
}

impl VertexLabel {
    pub fn name(&self) -> String {
        format!("{}{}", self.class, self.ordinal)
    }
}

/// A simple bipartite graph with labeled vertices in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    adj: Vec<Vec<usize>>,
    spec: Option<ChainGraphSpec>,
}

impl Graph {
    /// Builds a graph from its parts; `adj` must be symmetric with sorted
    /// rows and only cross-class edges.
    pub(crate) fn from_parts(
        labels: Vec<VertexLabel>,
        adj: Vec<Vec<usize>>,
        spec: Option<ChainGraphSpec>,
    ) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        debug_assert!(labels.windows(2).all(|w| w[0].class <= w[1].class));
        debug_assert!(adj.iter().enumerate().all(|(v, row)| {
            row.windows(2).all(|w| w[0] < w[1])
                && row
                    .iter()
                    .all(|&u| labels[u].class != labels[v].class && adj[u].binary_search(&v).is_ok())
        }));
        Self { labels, adj, spec }
    }

    /// Builds a graph from an edge list. The first `u_count` ids form the
    /// `U` class; every edge must join the two classes.
    pub fn from_edge_list(n: usize, u_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if u_count > n {
            return Err(GraphError::VertexOutOfRange { vertex: u_count, n });
        }
        let mut adj = vec![Vec::new(); n];
        for (index, &(a, b)) in edges.iter().enumerate() {
            let bad = |reason: String| GraphError::BadEdge { index, reason };
            if a >= n || b >= n {
                return Err(bad(format!("endpoint out of range for n = {n}")));
            }
            if a == b {
                return Err(bad("self-loop".into()));
            }
            if (a < u_count) == (b < u_count) {
                return Err(bad(format!("{a} and {b} are in the same color class")));
            }
            if adj[a].contains(&b) {
                return Err(bad(format!("duplicate edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let labels = (0..n)
            .map(|v| {
                let (class, ordinal) = if v < u_count { (Class::U, v + 1) } else { (Class::V, v - u_count + 1) };
                VertexLabel {
                    class,
                    cell: None,
                    index: ordinal,
                    ordinal,
                }
            })
            .collect();
        Ok(Self::from_parts(labels, adj, None))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertex_name(&self, v: usize) -> String {
        self.labels[v].name()
    }

    /// The spec this graph was built from, if it still has one.
    pub fn spec(&self) -> Option<&ChainGraphSpec> {
        self.spec.as_ref()
    }

    pub fn u_count(&self) -> usize {
        self.labels.iter().take_while(|l| l.class == Class::U).count()
    }

    /// Edge list with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let mut a = vec![vec![0.0; n]; n];
        for (v, row) in self.adj.iter().enumerate() {
            for &u in row {
                a[v][u] = 1.0;
            }
        }
        a
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// The induced subgraph on every vertex except `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let mut labels = self.labels.clone();
        labels.remove(v);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, row)| row.iter().filter(|&&u| u != v).map(|&u| shift(u)).collect())
            .collect();
        Ok(Graph::from_parts(labels, adj, None))
    }

    /// Adds a duplicate of `v` (same neighborhood, not adjacent to `v`).
    pub fn add_duplicate(&self, v: usize) -> Result<Graph, GraphError> {
        self.add_duplicate_with_id(v).map(|(g, _)| g)
    }

    /// Like [`Graph::add_duplicate`], also returning the id of the new vertex.
    ///
    /// The new vertex is placed right after the last vertex of `v`'s cell
    /// (or of `v`'s class when cells are unknown), so spec-built graphs
    /// come out identical to building the spec with that cell enlarged.
    pub fn add_duplicate_with_id(&self, v: usize) -> Result<(Graph, usize), GraphError> {
        self.check_vertex(v)?;
        let src = self.labels[v];
        let same_slot = |l: &VertexLabel| l.class == src.class && (src.cell.is_none() || l.cell <= src.cell);
        let pos = self
            .labels
            .iter()
            .rposition(same_slot)
            .map_or(0, |p| p + 1);
        let next_index = self
            .labels
            .iter()
            .filter(|l| l.class == src.class && l.cell == src.cell)
            .map(|l| l.index)
            .max()
            .unwrap_or(0)
            + 1;
        let next_ordinal = self
            .labels
            .iter()
            .filter(|l| l.class == src.class)
            .map(|l| l.ordinal)
            .max()
            .unwrap_or(0)
            + 1;
        let new_label = VertexLabel {
            class: src.class,
            cell: src.cell,
            index: if src.cell.is_some() { next_index } else { next_ordinal },
            ordinal: next_ordinal,
        };

        let grow = |u: usize| if u >= pos { u + 1 } else { u };
        let mut labels = self.labels.clone();
        labels.insert(pos, new_label);
        let mut adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|row| row.iter().map(|&u| grow(u)).collect())
            .collect();
        let new_row: Vec<usize> = self.adj[v].iter().map(|&u| grow(u)).collect();
        for &u in &new_row {
            let row: &mut Vec<usize> = &mut adj[if u >= pos { u - 1 } else { u }];
            let at = row.partition_point(|&x| x < pos);
            row.insert(at, pos);
        }
        adj.insert(pos, new_row);

        let spec = self.spec.as_ref().and_then(|s| {
            let cell = src.cell?;
            let mut s = s.clone();
            s.grow_cell(src.class, cell);
            Some(s)
        });
        if spec.is_some() {
            // still a spec graph: names follow the canonical order
            let mut counts = [0, 0];
            for l in &mut labels {
                let c = &mut counts[(l.class == Class::V) as usize];
                *c += 1;
                l.ordinal = *c;
            }
        }
        Ok((Graph::from_parts(labels, adj, spec), pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delete_endpoint_of_k2() {
        let k2 = half_graph(1).unwrap();
        let g = k2.delete_vertex(0).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.label(0).class, Class::V);
    }

    #[test]
    fn h2_minus_u2_is_a_star() {
        let g = half_graph(2).unwrap().delete_vertex(1).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(g.vertex_name(0), "u1");
        assert_eq!(g.vertex_name(2), "v2");
    }

    #[test]
    fn h7_minus_u2() {
        let h7 = half_graph(7).unwrap();
        assert_eq!(h7.degree(1), 6);
        let g = h7.delete_vertex(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (13, 22));
        assert!(is_chain_graph(&g));
    }

    #[test]
    fn out_of_range() {
        let k2 = half_graph(1).unwrap();
        assert_eq!(k2.delete_vertex(2), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
        assert!(k2.add_duplicate(5).is_err());
    }

    #[test]
    fn duplicate_in_k2_gives_p3() {
        let g = half_graph(1).unwrap().add_duplicate(0).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(g.spec(), Some(&ChainGraphSpec::new(vec![2], vec![1]).unwrap()));
    }

    #[test]
    fn duplicate_in_c4_gives_k32() {
        let c4 = ChainGraphSpec::new(vec![2], vec![2]).unwrap().build();
        let g = c4.add_duplicate(0).unwrap();
        let k32 = ChainGraphSpec::new(vec![3], vec![2]).unwrap().build();
        assert_eq!(g, k32);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn duplicate_matches_spec_growth() {
        let spec = ChainGraphSpec::new(vec![1, 2, 1], vec![2, 1, 1]).unwrap();
        let g = spec.build();
        for v in 0..g.n() {
            let (d, id) = g.add_duplicate_with_id(v).unwrap();
            assert_eq!(d.neighbors(id).len(), g.degree(v));
            assert_eq!(&d, &d.spec().unwrap().build());
            let back = d.delete_vertex(id).unwrap();
            assert_eq!(back.edges(), g.edges());
            let cells = |h: &Graph| h.labels().iter().map(|l| (l.class, l.cell, l.index)).collect::<Vec<_>>();
            assert_eq!(cells(&back), cells(&g));
        }
    }

    #[test]
    fn duplicate_without_cells() {
        // path u1 - v1 - u2 given as an edge list
        let g = Graph::from_edge_list(3, 2, &[(0, 2), (1, 2)]).unwrap();
        let (d, id) = g.add_duplicate_with_id(2).unwrap();
        assert_eq!(id, 3);
        assert_eq!(d.neighbors(3), &[0, 1]);
        assert_eq!(d.vertex_name(3), "v2");
        let (d, id) = g.add_duplicate_with_id(0).unwrap();
        assert_eq!(id, 2);
        assert_eq!(d.neighbors(2), &[3]);
        assert_eq!(d.vertex_name(2), "u3");
    }

    #[test]
    fn edge_list_validation() {
        assert!(matches!(
            Graph::from_edge_list(3, 1, &[(1, 2)]),
            Err(GraphError::BadEdge { index: 0, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, 1, &[(0, 1), (1, 0)]),
            Err(GraphError::BadEdge { index: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, 1, &[(0, 0)]),
            Err(GraphError::BadEdge { index: 0, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(3, 1, &[(0, 7)]),
            Err(GraphError::BadEdge { index: 0, .. })
        ));
    }
}
