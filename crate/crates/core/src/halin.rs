//! Plane trees and generalized Halin graphs.
//!
//! A plane tree is stored as a rooted ordered tree: the left-to-right child
//! lists fix the planar embedding. The leaf cycle visits leaves in depth-first
//! contour order (children left to right), which is the clockwise order of the
//! embedding; its mirror image yields an isomorphic graph.

use std::collections::{BTreeMap, VecDeque};

use num_traits::Signed;
use thiserror::Error;

use crate::curvature::{c3c4_upper_bound, check_lipschitz_certificate, LipschitzCertificate};
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HalinError {
    #[error("plane tree needs at least 4 vertices, got {0}")]
    TooSmall(usize),
    #[error("plane tree has maximum degree {0}; at least 3 is required")]
    MaxDegreeTooSmall(usize),
    #[error("child lists do not form a tree rooted at {root}: {reason}")]
    NotATree { root: usize, reason: String },
    #[error("{family} is defined for n ≥ {min}, got {n}")]
    FamilyRange {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Rooted ordered tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    /// Builds a tree from per-vertex ordered child lists. Every vertex other
    /// than `root` must appear exactly once as a child and be reachable from
    /// `root`; at least 4 vertices and maximum degree ≥ 3 are required.
    pub fn from_children(root: usize, children: Vec<Vec<usize>>) -> Result<Self, HalinError> {
        let n = children.len();
        let not_tree = |reason: String| HalinError::NotATree { root, reason };
        if root >= n {
            return Err(not_tree(format!("root out of range for {n} vertices")));
        }
        let mut parent = vec![None; n];
        for (p, list) in children.iter().enumerate() {
            for &c in list {
                if c >= n {
                    return Err(not_tree(format!("child {c} out of range")));
                }
                if c == root || parent[c].is_some() {
                    return Err(not_tree(format!("vertex {c} has more than one parent")));
                }
                parent[c] = Some(p);
            }
        }
        // reachability also rules out cycles, since each vertex has one parent
        let mut seen = vec![false; n];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            seen[v] = true;
            stack.extend(&children[v]);
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(not_tree(format!("vertex {v} is unreachable")));
        }
        let tree = PlaneTree {
            root,
            parent,
            children,
        };
        if n < 4 {
            return Err(HalinError::TooSmall(n));
        }
        let d = tree.max_degree();
        if d < 3 {
            return Err(HalinError::MaxDegreeTooSmall(d));
        }
        Ok(tree)
    }

    /// Builds a tree from the child counts of its vertices in preorder;
    /// vertex ids are preorder positions.
    pub fn from_preorder_counts(counts: &[usize]) -> Result<Self, HalinError> {
        let n = counts.len();
        let mut children = vec![Vec::new(); n];
        let mut next = 1usize;
        // open[k] = (vertex, children still to attach)
        let mut open: Vec<(usize, usize)> = Vec::new();
        if n > 0 && counts[0] > 0 {
            open.push((0, counts[0]));
        }
        while let Some(top) = open.last_mut() {
            if next >= n {
                return Err(HalinError::NotATree {
                    root: 0,
                    reason: "child counts exceed the vertex count".into(),
                });
            }
            let p = top.0;
            top.1 -= 1;
            if top.1 == 0 {
                open.pop();
            }
            let v = next;
            next += 1;
            children[p].push(v);
            if counts[v] > 0 {
                open.push((v, counts[v]));
            }
        }
        if next != n {
            return Err(HalinError::NotATree {
                root: 0,
                reason: "child counts leave vertices unattached".into(),
            });
        }
        Self::from_children(0, children)
    }

    pub fn n(&self) -> usize {
        self.children.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// `D(T)`.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Neighbors of `v` in embedding order: parent first (if any), then
    /// children left to right.
    pub fn rotation(&self, v: usize) -> Vec<usize> {
        self.parent[v]
            .into_iter()
            .chain(self.children[v].iter().copied())
            .collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = (0..self.n())
            .flat_map(|p| self.children[p].iter().map(move |&c| Edge::new(p, c)))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Leaves in depth-first contour order, children visited left to right.
    pub fn contour_leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if self.is_leaf(v) {
                out.push(v);
            }
            stack.extend(self.children[v].iter().rev());
        }
        out
    }

    /// Tree distances `d_T(source, ·)`.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for u in self.rotation(v) {
                if dist[u] == u32::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Preorder child counts after relabeling by preorder; equal encodings
    /// mean equal rooted ordered trees.
    pub fn preorder_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            out.push(self.children[v].len());
            stack.extend(self.children[v].iter().rev());
        }
        out
    }
}

/// A graph `H(T, C)`: a plane tree plus the cycle through its leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinGraph {
    pub graph: Graph,
    pub tree_edges: Vec<Edge>,
    pub cycle_edges: Vec<Edge>,
    /// Outer vertices in clockwise cyclic order.
    pub leaf_order: Vec<usize>,
    pub tree: PlaneTree,
}

/// Joins the leaves of `t` by a cycle in contour order.
pub fn build_halin(t: &PlaneTree) -> HalinGraph {
    let leaves = t.contour_leaves();
    assert!(leaves.len() >= 3, "a tree with D(T) ≥ 3 has at least 3 leaves");
    let tree_edges = t.edges();
    let k = leaves.len();
    let mut cycle_edges: Vec<Edge> = (0..k)
        .map(|i| Edge::new(leaves[i], leaves[(i + 1) % k]))
        .collect();
    cycle_edges.sort_unstable();
    let graph = Graph::from_edge_list(
        t.n(),
        tree_edges.iter().chain(&cycle_edges).map(|e| (e.x, e.y)),
    )
    .expect("tree plus leaf cycle is simple and connected");
    HalinGraph {
        graph,
        tree_edges,
        cycle_edges,
        leaf_order: leaves,
        tree: t.clone(),
    }
}

impl HalinGraph {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Checks the structural invariants of the construction.
    pub fn check_invariants(&self) -> Result<(), String> {
        let g = &self.graph;
        let leaves = &self.leaf_order;
        if self.tree.contour_leaves() != *leaves {
            return Err("leaf order differs from the tree's contour".into());
        }
        for &v in leaves {
            if g.degree(v) != 3 {
                return Err(format!("outer vertex {v} has degree {}", g.degree(v)));
            }
        }
        for v in 0..g.n() {
            if !self.tree.is_leaf(v) && g.degree(v) != self.tree.degree(v) {
                return Err(format!("inner vertex {v} changed degree"));
            }
        }
        if g.edge_count() != g.n() - 1 + leaves.len() {
            return Err("edge count is not |V| - 1 + #leaves".into());
        }
        let k = leaves.len();
        for i in 0..k {
            let e = Edge::new(leaves[i], leaves[(i + 1) % k]);
            if self.cycle_edges.binary_search(&e).is_err() || !g.adjacent(e.x, e.y) {
                return Err(format!("cycle edge {e} missing"));
            }
        }
        if self.cycle_edges.len() != k {
            return Err("cycle edge count differs from leaf count".into());
        }
        Ok(())
    }
}

/// Wheel `W_n`: hub `0` joined to the cycle `1, ..., n-1`.
pub fn wheel(n: usize) -> Result<HalinGraph, HalinError> {
    if n < 4 {
        return Err(HalinError::FamilyRange {
            family: "W",
            n,
            min: 4,
        });
    }
    let mut children = vec![Vec::new(); n];
    children[0] = (1..n).collect();
    Ok(build_halin(&PlaneTree::from_children(0, children)?))
}

/// Hub `0`, rim `1..=rim`, and the listed rim vertices reached through a new
/// subdivision vertex each (numbered after the rim).
fn subdivided_wheel(rim: usize, subdivided: &[usize]) -> Result<HalinGraph, HalinError> {
    let n = rim + 1 + subdivided.len();
    let mut children = vec![Vec::new(); n];
    let mut next = rim + 1;
    for v in 1..=rim {
        if subdivided.contains(&v) {
            children[0].push(next);
            children[next].push(v);
            next += 1;
        } else {
            children[0].push(v);
        }
    }
    Ok(build_halin(&PlaneTree::from_children(0, children)?))
}

/// `W'_n`: `W_{n-1}` with the spoke to `v_1` subdivided.
pub fn wheel_sub1(n: usize) -> Result<HalinGraph, HalinError> {
    if n < 5 {
        return Err(HalinError::FamilyRange {
            family: "W'",
            n,
            min: 5,
        });
    }
    subdivided_wheel(n - 2, &[1])
}

/// `W''_n`: `W_{n-2}` with the spokes to `v_1` and `v_⌈(n-2)/2⌉` subdivided.
pub fn wheel_sub2(n: usize) -> Result<HalinGraph, HalinError> {
    if n < 6 {
        return Err(HalinError::FamilyRange {
            family: "W''",
            n,
            min: 6,
        });
    }
    subdivided_wheel(n - 3, &[1, (n - 2).div_ceil(2)])
}

/// No vertex of degree two.
pub fn is_halin(h: &HalinGraph) -> bool {
    h.graph.min_degree() >= 3
}

/// One component of `T - {hub}` with its outer vertices in clockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// The hub's neighbor inside the component.
    pub root: usize,
    pub outer: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub hub: usize,
    /// Components in clockwise order around the hub.
    pub components: Vec<Component>,
    /// `d_T(hub, v)` for every vertex `v`.
    pub hub_distance: Vec<u32>,
    /// `D(T)`.
    pub max_degree: usize,
}

impl ComponentProfile {
    pub fn outer_count(&self) -> usize {
        self.components.iter().map(|c| c.outer.len()).sum()
    }

    /// Cycle edges joining two different components, as
    /// `(last outer vertex of A_i, first outer vertex of A_{i+1})`.
    pub fn boundary_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let c = self.components.len();
        (0..c).map(move |i| {
            let a = &self.components[i];
            let b = &self.components[(i + 1) % c];
            (*a.outer.last().unwrap(), b.outer[0])
        })
    }
}

/// Components of `T - {x}` around the smallest-id vertex `x` of maximum tree degree.
pub fn component_profile(h: &HalinGraph) -> ComponentProfile {
    let t = &h.tree;
    let max_degree = t.max_degree();
    let hub = (0..t.n()).find(|&v| t.degree(v) == max_degree).unwrap();
    let roots = t.rotation(hub);
    let hub_distance = t.distances_from(hub);

    // component index of every vertex, by the first step away from the hub
    let mut comp = vec![usize::MAX; t.n()];
    for (i, &r) in roots.iter().enumerate() {
        let mut stack = vec![r];
        comp[r] = i;
        while let Some(v) = stack.pop() {
            for u in t.rotation(v) {
                if u != hub && comp[u] == usize::MAX {
                    comp[u] = i;
                    stack.push(u);
                }
            }
        }
    }

    let leaves = &h.leaf_order;
    let k = leaves.len();
    let start = (0..k)
        .find(|&i| comp[leaves[i]] == 0 && comp[leaves[(i + k - 1) % k]] != 0)
        .expect("hub of degree ≥ 3 splits the leaf cycle into several runs");
    let mut components: Vec<Component> = roots
        .iter()
        .map(|&root| Component {
            root,
            outer: Vec::new(),
        })
        .collect();
    for i in 0..k {
        let v = leaves[(start + i) % k];
        components[comp[v]].outer.push(v);
    }
    ComponentProfile {
        hub,
        components,
        hub_distance,
        max_degree,
    }
}

/// Two cyclically adjacent components both contain at least two outer vertices.
pub fn lemma32_violated(p: &ComponentProfile) -> bool {
    let c = p.components.len();
    (0..c).any(|i| p.components[i].outer.len() >= 2 && p.components[(i + 1) % c].outer.len() >= 2)
}

/// Some cycle edge between different components has `d_T(x,p) + d_T(x,q) ≥ 5`.
pub fn lemma33_violated(p: &ComponentProfile) -> bool {
    p.boundary_edges()
        .any(|(a, b)| p.hub_distance[a] + p.hub_distance[b] >= 5)
}

/// The tree has exactly `D(T) ≥ 4` leaves and some outer vertex lies at tree
/// distance ≥ 3 from the hub.
pub fn corollary34_violated(p: &ComponentProfile) -> bool {
    p.outer_count() == p.max_degree
        && p.max_degree >= 4
        && p.components
            .iter()
            .flat_map(|c| &c.outer)
            .any(|&v| p.hub_distance[v] >= 3)
}

/// Test function certifying `κ(x, y) ≤ 0` for a boundary edge `{p, q}` with
/// `d_T(x,p) + d_T(x,q) ≥ 5`: `y`, `t` are the hub's neighbors towards `p`
/// and `q`, and `f(z) = min(d(z, N[x] ∖ {y}), d(z, t) - 1)` on `N[x] ∪ N[y]`.
fn lemma33_certificate(h: &HalinGraph, p: &ComponentProfile, a: usize, b: usize) -> LipschitzCertificate {
    let g = &h.graph;
    let (deep, shallow) = if p.hub_distance[a] >= p.hub_distance[b] {
        (a, b)
    } else {
        (b, a)
    };
    let root_of = |v: usize| {
        p.components
            .iter()
            .find(|c| c.outer.contains(&v))
            .map(|c| c.root)
            .unwrap()
    };
    let x = p.hub;
    let y = root_of(deep);
    let t = root_of(shallow);
    let ball: Vec<usize> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&v| v != y)
        .chain([x])
        .collect();
    let f: BTreeMap<usize, i64> = g
        .edge_neighborhood(Edge::new(x, y))
        .into_iter()
        .map(|z| {
            let to_ball = i64::from(g.dist_to_set(z, ball.iter().copied()).unwrap());
            let to_t = i64::from(g.dist(z, t)) - 1;
            (z, to_ball.min(to_t))
        })
        .collect();
    LipschitzCertificate { x, y, f }
}

/// Whether some lemma certifies an edge with `κ_LLY ≤ 0`.
///
/// Checks every edge for the short-cycle-free bound `1/d_x + 2/d_y - 1 ≤ 0`
/// (this also covers two adjacent multi-leaf components), and for each deep
/// boundary edge builds the corresponding test function and accepts it only
/// if the certificate checker confirms a non-positive value. Never returns
/// `true` for a positively curved graph.
pub fn prune_negative(h: &HalinGraph) -> bool {
    let g = &h.graph;
    if g
        .edges()
        .any(|e| c3c4_upper_bound(g, e).is_some_and(|b| !b.is_positive()))
    {
        return true;
    }
    let profile = component_profile(h);
    let certified = profile
        .boundary_edges()
        .filter(|&(a, b)| profile.hub_distance[a] + profile.hub_distance[b] >= 5)
        .any(|(a, b)| {
            let cert = lemma33_certificate(h, &profile, a, b);
            check_lipschitz_certificate(g, &cert).is_ok_and(|v| !v.is_positive())
        });
    certified
}

/// Which wheel family a spec string names.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WheelFamily {
    Wheel,
    Sub1,
    Sub2,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilySpecError {
    #[error("family spec `{0}` is not of the form W:n, W1:n or W2:n")]
    Malformed(String),
    #[error(transparent)]
    Range(#[from] HalinError),
}

/// Parses `W:n`, `W1:n` or `W2:n` and checks the family's range.
pub fn parse_family_spec(spec: &str) -> Result<(WheelFamily, usize), FamilySpecError> {
    let malformed = || FamilySpecError::Malformed(spec.to_string());
    let (name, n) = spec.trim().split_once(':').ok_or_else(malformed)?;
    let family = match name {
        "W" => WheelFamily::Wheel,
        "W1" => WheelFamily::Sub1,
        "W2" => WheelFamily::Sub2,
        _ => return Err(malformed()),
    };
    if n.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let n: usize = n.parse().map_err(|_| malformed())?;
    let min = match family {
        WheelFamily::Wheel => 4,
        WheelFamily::Sub1 => 5,
        WheelFamily::Sub2 => 6,
    };
    if n < min {
        let name = match family {
            WheelFamily::Wheel => "W",
            WheelFamily::Sub1 => "W'",
            WheelFamily::Sub2 => "W''",
        };
        return Err(HalinError::FamilyRange { family: name, n, min }.into());
    }
    if n > crate::graph::graph6::MAX_VERTICES {
        return Err(malformed());
    }
    Ok((family, n))
}

pub fn build_family(family: WheelFamily, n: usize) -> Result<HalinGraph, HalinError> {
    match family {
        WheelFamily::Wheel => wheel(n),
        WheelFamily::Sub1 => wheel_sub1(n),
        WheelFamily::Sub2 => wheel_sub2(n),
    }
}
