//! Graph file format: one JSON document per graph, either a chain spec or
//! an edge list in canonical vertex order.
//!
//! ```text
//! {"type":"chain-spec","k":2,"u_sizes":[1,2],"v_sizes":[2,1]}
//! {"type":"edge-list","n":4,"u_class":[0,1],"edges":[[0,2],[0,3],[1,2]]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ChainGraphSpec, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GraphDocument {
    ChainSpec {
        k: usize,
        u_sizes: Vec<usize>,
        v_sizes: Vec<usize>,
    },
    EdgeList {
        n: usize,
        u_class: Vec<usize>,
        edges: Vec<[usize; 2]>,
    },
}

#[derive(Debug, Error)]
pub enum GraphFileError {
    #[error("malformed graph document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

impl GraphDocument {
    pub fn from_spec(spec: &ChainGraphSpec) -> Self {
        GraphDocument::ChainSpec {
            k: spec.k(),
            u_sizes: spec.u_sizes().to_vec(),
            v_sizes: spec.v_sizes().to_vec(),
        }
    }

    /// Spec documents for graphs that still carry one, edge lists otherwise.
    pub fn from_graph(g: &Graph) -> Self {
        match g.spec() {
            Some(spec) => Self::from_spec(spec),
            None => GraphDocument::EdgeList {
                n: g.n(),
                u_class: (0..g.u_count()).collect(),
                edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            },
        }
    }

    pub fn into_graph(self) -> Result<Graph, GraphError> {
        match self {
            GraphDocument::ChainSpec { k, u_sizes, v_sizes } => {
                Ok(ChainGraphSpec::with_k(k, u_sizes, v_sizes)?.build())
            }
            GraphDocument::EdgeList { n, u_class, edges } => {
                let mut sorted = u_class.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != u_class.len() || sorted.iter().enumerate().any(|(i, &v)| i != v) {
                    return Err(GraphError::NonCanonicalClasses {
                        expected: u_class.len(),
                        found: u_class,
                    });
                }
                let edges: Vec<(usize, usize)> = edges.into_iter().map(|[a, b]| (a, b)).collect();
                Graph::from_edge_list(n, sorted.len(), &edges)
            }
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphFileError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    Ok(doc.into_graph()?)
}

pub fn write_graph(g: &Graph) -> String {
    serde_json::to_string(&GraphDocument::from_graph(g)).expect("graph documents always serialize")
}
