use std::fmt;

use super::{Class, Graph, GraphError, VertexLabel};

/// Cell partition of a chain graph: `k` cells `U₁..U_k` and `V₁..V_k`, where
/// every vertex of `Uᵢ` is adjacent to exactly `V₁ ∪ … ∪ V_{k−i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainGraphSpec {
    u_sizes: Vec<usize>,
    v_sizes: Vec<usize>,
}

impl ChainGraphSpec {
    pub fn new(u_sizes: Vec<usize>, v_sizes: Vec<usize>) -> Result<Self, GraphError> {
        Self::with_k(u_sizes.len(), u_sizes, v_sizes)
    }

    /// Validates an explicitly stated `k` against the two size lists.
    pub fn with_k(k: usize, u_sizes: Vec<usize>, v_sizes: Vec<usize>) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroCells);
        }
        for (field, sizes) in [("u_sizes", &u_sizes), ("v_sizes", &v_sizes)] {
            if sizes.len() != k {
                return Err(GraphError::CellCountMismatch { field, k, found: sizes.len() });
            }
            if let Some(index) = sizes.iter().position(|&s| s == 0) {
                return Err(GraphError::EmptyCell { field, index });
            }
        }
        Ok(Self { u_sizes, v_sizes })
    }

    pub fn half(k: usize) -> Result<Self, GraphError> {
        Self::new(vec![1; k], vec![1; k])
    }

    pub fn k(&self) -> usize {
        self.u_sizes.len()
    }

    pub fn u_sizes(&self) -> &[usize] {
        &self.u_sizes
    }

    pub fn v_sizes(&self) -> &[usize] {
        &self.v_sizes
    }

    pub fn vertex_count(&self) -> usize {
        self.u_sizes.iter().sum::<usize>() + self.v_sizes.iter().sum::<usize>()
    }

    pub fn is_half_graph(&self) -> bool {
        self.u_sizes.iter().chain(&self.v_sizes).all(|&s| s == 1)
    }

    pub(crate) fn grow_cell(&mut self, class: Class, cell: usize) {
        match class {
            Class::U => self.u_sizes[cell - 1] += 1,
            Class::V => self.v_sizes[cell - 1] += 1,
        }
    }

    /// Ids of the vertices in cell `U₁` and `V₁` (the maximum degree
    /// vertices of each class).
    pub fn first_cells(&self) -> Vec<usize> {
        let u_total: usize = self.u_sizes.iter().sum();
        (0..self.u_sizes[0]).chain(u_total..u_total + self.v_sizes[0]).collect()
    }

    pub fn build(&self) -> Graph {
        build_chain_graph(self)
    }
}

impl fmt::Display for ChainGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_half_graph() {
            return write!(f, "H({})", self.k());
        }
        let join = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "k={} u=[{}] v=[{}]", self.k(), join(&self.u_sizes), join(&self.v_sizes))
    }
}

/// Half graph `H(k)`: every cell has exactly one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfGraphId(usize);

impl HalfGraphId {
    pub fn new(k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            Err(GraphError::ZeroCells)
        } else {
            Ok(Self(k))
        }
    }

    pub fn k(self) -> usize {
        self.0
    }

    pub fn spec(self) -> ChainGraphSpec {
        ChainGraphSpec::half(self.0).expect("k ≥ 1")
    }
}

pub fn half_graph(k: usize) -> Result<Graph, GraphError> {
    Ok(HalfGraphId::new(k)?.spec().build())
}

pub fn build_chain_graph(spec: &ChainGraphSpec) -> Graph {
    let k = spec.k();
    let mut labels = Vec::with_capacity(spec.vertex_count());
    // first id of each cell, per class
    let mut u_start = Vec::with_capacity(k + 1);
    let mut v_start = Vec::with_capacity(k + 1);
    for (class, sizes, starts) in [
        (Class::U, &spec.u_sizes, &mut u_start),
        (Class::V, &spec.v_sizes, &mut v_start),
    ] {
        let mut ordinal = 0;
        for (c, &size) in sizes.iter().enumerate() {
            starts.push(labels.len());
            for index in 1..=size {
                ordinal += 1;
                labels.push(VertexLabel {
                    class,
                    cell: Some(c + 1),
                    index,
                    ordinal,
                });
            }
        }
        starts.push(labels.len());
    }

    let n = labels.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..k {
        // Uᵢ (0-based i) sees V-cells 0..k-i
        let v_end = v_start[k - i];
        for u in u_start[i]..u_start[i + 1] {
            adj[u].extend(v_start[0]..v_end);
        }
    }
    for j in 0..k {
        let u_end = u_start[k - j];
        for v in v_start[j]..v_start[j + 1] {
            adj[v].extend(u_start[0]..u_end);
        }
    }
    Graph::from_parts(labels, adj, Some(spec.clone()))
}
