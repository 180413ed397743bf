//! Simple connected undirected graphs with an all-pairs distance table.

mod canon;
pub mod edgelist;
pub mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {unreachable} is not reachable from vertex 0")]
    Disconnected { unreachable: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("permutation of length {got} does not match {n} vertices or is not a bijection")]
    BadPermutation { got: usize, n: usize },
}

/// An undirected edge stored with `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub x: usize,
    pub y: usize,
}

impl Edge {
    /// Normalises the endpoint order. Does not check membership in any graph.
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge { x: u, y: v }
        } else {
            Edge { x: v, y: u }
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.x, self.y)
    }
}

/// Immutable simple connected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and the full distance table is computed by BFS
/// at construction, so every metric query afterwards is a lookup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    dist: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().map(|e| (e.x, e.y)).collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged; self-loops,
    /// out-of-range vertices and disconnected inputs are rejected.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let dist = all_pairs_bfs(&adj)?;
        Ok(Graph { n, adj, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.dist(u, v) == 1
    }

    /// Distance from `v` to the nearest vertex of `set`; `None` for an empty set.
    pub fn dist_to_set<I>(&self, v: usize, set: I) -> Option<u32>
    where
        I: IntoIterator<Item = usize>,
    {
        set.into_iter().map(|s| self.dist(v, s)).min()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| Edge { x: u, y: v })
        })
    }

    /// Validated edge between `u` and `v`, in either order.
    pub fn edge(&self, u: usize, v: usize) -> Result<Edge, GraphError> {
        if self.adjacent(u, v) {
            Ok(Edge::new(u, v))
        } else {
            Err(GraphError::NotAnEdge(u, v))
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// `N[x] ∪ N[y]` in ascending order.
    pub fn edge_neighborhood(&self, e: Edge) -> Vec<usize> {
        let mut dom: Vec<usize> = self.adj[e.x]
            .iter()
            .chain(&self.adj[e.y])
            .copied()
            .chain([e.x, e.y])
            .collect();
        dom.sort_unstable();
        dom.dedup();
        dom
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let bad = GraphError::BadPermutation {
            got: perm.len(),
            n: self.n,
        };
        if perm.len() != self.n {
            return Err(bad);
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(bad);
            }
        }
        Graph::from_edge_list(self.n, self.edges().map(|e| (perm[e.x], perm[e.y])))
    }

    /// Whether `e` lies on a triangle or on a 4-cycle.
    ///
    /// Triangle: `x` and `y` share a neighbor. 4-cycle: some `x' ∈ N(x)∖{y}`
    /// and `y' ∈ N(y)∖{x}` with `x' ≠ y'` are adjacent.
    pub fn edge_in_c3_or_c4(&self, e: Edge) -> Result<bool, GraphError> {
        let Edge { x, y } = self.edge(e.x, e.y)?;
        let nx = &self.adj[x];
        let ny = &self.adj[y];
        if nx.iter().any(|v| ny.binary_search(v).is_ok()) {
            return Ok(true);
        }
        let quad = nx.iter().filter(|&&a| a != y).any(|&a| {
            ny.iter()
                .filter(|&&b| b != x && b != a)
                .any(|&b| self.adjacent(a, b))
        });
        Ok(quad)
    }
}

fn all_pairs_bfs(adj: &[Vec<usize>]) -> Result<Vec<u32>, GraphError> {
    let n = adj.len();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in &adj[u] {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if let Some(unreachable) = row.iter().position(|&d| d == u32::MAX) {
            return Err(GraphError::Disconnected { unreachable });
        }
    }
    Ok(dist)
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edge_list(n, edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).expect("path graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edge_list(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star graph")
    }

    /// Hub `0` joined to the cycle `1..n-1`.
    pub fn wheel(n: usize) -> Graph {
        assert!(n >= 4);
        let rim = n - 1;
        let spokes = (1..n).map(|v| (0, v));
        let cycle = (0..rim).map(move |i| (1 + i, 1 + (i + 1) % rim));
        Graph::from_edge_list(n, spokes.chain(cycle)).expect("wheel graph")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn k4_all_distances_one() {
        let g = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.dist(u, v), u32::from(u != v));
            }
        }
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn path_metric() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.dist(0, 2), 2);
        assert!(!g.adjacent(0, 2));
    }

    #[test]
    fn wheel5_degree_and_diameter() {
        let g = wheel(5);
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.diameter(), 2);
        assert_eq!(g.dist(1, 3), 2);
        assert_eq!(g.dist(1, 2), 1);
    }

    #[test]
    fn duplicate_edges_are_merged() {
        let g = Graph::from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(2, [(0, 0), (0, 1)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1)]),
            Err(GraphError::Disconnected { unreachable: 2 })
        );
        assert_eq!(Graph::from_edge_list(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn c3_c4_membership() {
        let k4 = complete(4);
        for e in k4.edges().collect::<Vec<_>>() {
            assert!(k4.edge_in_c3_or_c4(e).unwrap());
        }
        let p4 = path(4);
        assert!(!p4.edge_in_c3_or_c4(Edge::new(1, 2)).unwrap());
        let c5 = cycle(5);
        for e in c5.edges().collect::<Vec<_>>() {
            assert!(!c5.edge_in_c3_or_c4(e).unwrap());
        }
        let c4 = cycle(4);
        assert!(c4.edge_in_c3_or_c4(Edge::new(0, 1)).unwrap());
        assert_eq!(
            p4.edge_in_c3_or_c4(Edge::new(0, 2)),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = path(3);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        assert!(g.relabel(&[0, 1]).is_err());
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert!(h.adjacent(2, 0) && h.adjacent(0, 1));
    }
}
