use std::collections::VecDeque;

use super::Graph;

/// True iff `g` is bipartite and its neighborhoods within each color class
/// are totally ordered by inclusion (equivalently: no induced `2K₂`).
pub fn is_chain_graph(g: &Graph) -> bool {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    is_chain_adjacency(&adj)
}

/// Chain-graph test on a raw symmetric adjacency list, for graphs that are
/// not known to be bipartite. Isolated vertices are allowed.
pub fn is_chain_adjacency(adj: &[Vec<usize>]) -> bool {
    let Some(color) = two_coloring(adj) else {
        return false;
    };
    let n = adj.len();
    let mut marks = vec![false; n];
    for side in [false, true] {
        let mut class: Vec<usize> = (0..n).filter(|&v| color[v] == side).collect();
        class.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
        for pair in class.windows(2) {
            let (big, small) = (pair[0], pair[1]);
            for &u in &adj[big] {
                marks[u] = true;
            }
            let nested = adj[small].iter().all(|&u| marks[u]);
            for &u in &adj[big] {
                marks[u] = false;
            }
            if !nested {
                return false;
            }
        }
    }
    true
}

fn two_coloring(adj: &[Vec<usize>]) -> Option<Vec<bool>> {
    let n = adj.len();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("queued vertices are colored");
            for &u in &adj[v] {
                if u == v {
                    return None;
                }
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{half_graph, ChainGraphSpec};

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    #[test]
    fn c4_is_chain() {
        assert!(is_chain_graph(&ChainGraphSpec::new(vec![2], vec![2]).unwrap().build()));
        assert!(is_chain_adjacency(&adjacency(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])));
    }

    #[test]
    fn p5_is_not_chain() {
        // u1 - v1 - u2 - v2 - u3
        let p5 = Graph::from_edge_list(5, 3, &[(0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        assert!(!is_chain_graph(&p5));
    }

    #[test]
    fn two_k2_is_not_chain() {
        let g = Graph::from_edge_list(4, 2, &[(0, 2), (1, 3)]).unwrap();
        assert!(!is_chain_graph(&g));
    }

    #[test]
    fn odd_cycles_rejected() {
        assert!(!is_chain_adjacency(&adjacency(3, &[(0, 1), (1, 2), (2, 0)])));
        assert!(!is_chain_adjacency(&adjacency(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])));
    }

    #[test]
    fn isolated_vertices_allowed() {
        let g = half_graph(3).unwrap().delete_vertex(0).unwrap();
        // deleting u1 isolates v3
        assert_eq!(g.degree(4), 0);
        assert!(is_chain_graph(&g));
        assert!(is_chain_adjacency(&adjacency(3, &[])));
    }

    #[test]
    fn non_chain_p6_edge_list() {
        assert!(!is_chain_adjacency(&adjacency(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])));
        assert!(is_chain_adjacency(&adjacency(4, &[(0, 1), (1, 2), (2, 3)])));
    }
}
