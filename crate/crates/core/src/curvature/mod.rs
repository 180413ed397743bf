//! Edge curvature: α-curvature by optimal transport, Lin-Lu-Yau curvature at
//! the idleness where the ratio `κ_α / (1 - α)` is already constant, the
//! Laplacian dual over integer 1-Lipschitz functions, and certificate checks.

mod certificate;
mod dual;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};
use crate::rational::Rational;
use crate::transport::{vertex_measure, wasserstein, TransportError};

pub use certificate::{
    check_coupling_certificate, check_lipschitz_certificate, parse_certificate, write_certificate,
    Certificate, CertificateError, CouplingCertificate, LipschitzCertificate,
};
pub use dual::{kappa_lly_dual, laplacian_difference, DualOracle, DEFAULT_ORACLE_THRESHOLD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Transport(#[from] TransportError),
    #[error(
        "dual oracle infeasible on edge {edge}: degree sum {degree_sum} exceeds threshold {threshold}"
    )]
    OracleInfeasible {
        edge: Edge,
        degree_sum: usize,
        threshold: usize,
    },
    #[error("graph has no edges")]
    NoEdges,
}

fn rat(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Smallest idleness at which `κ_α / (1 - α)` equals the Lin-Lu-Yau
/// curvature: `1 / (max(d_x, d_y) + 1)`.
pub fn lly_alpha(g: &Graph, e: Edge) -> Rational {
    let d = g.degree(e.x).max(g.degree(e.y));
    Rational::new(BigInt::one(), BigInt::from(d + 1))
}

/// `κ_α(x, y) = 1 - W(m_x^α, m_y^α)`.
pub fn kappa_alpha(g: &Graph, e: Edge, alpha: &Rational) -> Result<Rational, CurvatureError> {
    let e = g.edge(e.x, e.y)?;
    let mx = vertex_measure(g, e.x, alpha)?;
    let my = vertex_measure(g, e.y, alpha)?;
    let w = wasserstein(g, &mx, &my)?;
    Ok(Rational::one() - w.value)
}

/// Lin-Lu-Yau curvature, evaluated exactly at [`lly_alpha`].
pub fn kappa_lly(g: &Graph, e: Edge) -> Result<Rational, CurvatureError> {
    let e = g.edge(e.x, e.y)?;
    let alpha = lly_alpha(g, e);
    let k = kappa_alpha(g, e, &alpha)?;
    Ok(k / (Rational::one() - alpha))
}

/// Upper bound `1/d_x + 2/d_y - 1` (minimised over both orientations) for
/// an edge on no triangle and no 4-cycle; `None` otherwise, or if `e` is not
/// an edge.
pub fn c3c4_upper_bound(g: &Graph, e: Edge) -> Option<Rational> {
    match g.edge_in_c3_or_c4(e) {
        Ok(false) => {}
        _ => return None,
    }
    let (dx, dy) = (rat(g.degree(e.x)), rat(g.degree(e.y)));
    let one = Rational::one();
    let two = rat(2);
    let a = &one / &dx + &two / &dy - &one;
    let b = &one / &dy + &two / &dx - &one;
    Some(a.min(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureReport {
    pub edges: Vec<(Edge, Rational)>,
    pub min_curvature: Rational,
    pub positively_curved: bool,
}

impl CurvatureReport {
    /// Assembles a report from per-edge values; fails on an empty list.
    pub fn from_edges(edges: Vec<(Edge, Rational)>) -> Result<Self, CurvatureError> {
        let min_curvature = edges
            .iter()
            .map(|(_, k)| k)
            .min()
            .cloned()
            .ok_or(CurvatureError::NoEdges)?;
        let positively_curved = min_curvature.is_positive();
        Ok(CurvatureReport {
            edges,
            min_curvature,
            positively_curved,
        })
    }

    pub fn curvature(&self, e: Edge) -> Option<&Rational> {
        self.edges
            .binary_search_by_key(&e, |(f, _)| *f)
            .ok()
            .map(|i| &self.edges[i].1)
    }

    /// Edges with curvature `≤ 0`.
    pub fn nonpositive_edges(&self) -> impl Iterator<Item = &(Edge, Rational)> {
        self.edges.iter().filter(|(_, k)| !k.is_positive())
    }

    pub fn zero_edges(&self) -> impl Iterator<Item = &(Edge, Rational)> {
        self.edges.iter().filter(|(_, k)| k.is_zero())
    }
}

/// Exact Lin-Lu-Yau curvature on every edge, in edge order.
pub fn curvature_report(g: &Graph) -> Result<CurvatureReport, CurvatureError> {
    let edges = g
        .edges()
        .map(|e| kappa_lly(g, e).map(|k| (e, k)))
        .collect::<Result<Vec<_>, _>>()?;
    CurvatureReport::from_edges(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::rational::{int, ratio};

    #[test]
    fn alpha_one_is_zero() {
        let g = named::wheel(6);
        for e in g.edges().collect::<Vec<_>>() {
            assert_eq!(kappa_alpha(&g, e, &int(1)).unwrap(), int(0));
        }
    }

    #[test]
    fn triangle_values() {
        let k3 = named::complete(3);
        let e = Edge::new(0, 1);
        assert_eq!(kappa_alpha(&k3, e, &ratio(1, 3)).unwrap(), int(1));
        assert_eq!(kappa_lly(&k3, e).unwrap(), ratio(3, 2));
    }

    #[test]
    fn hexagon_is_flat() {
        let c6 = named::cycle(6);
        assert_eq!(kappa_lly(&c6, Edge::new(0, 1)).unwrap(), int(0));
    }

    #[test]
    fn wheel5_all_ones() {
        let g = named::wheel(5);
        assert_eq!(kappa_alpha(&g, Edge::new(0, 1), &ratio(1, 4)).unwrap(), ratio(3, 4));
        let r = curvature_report(&g).unwrap();
        assert!(r.edges.iter().all(|(_, k)| *k == int(1)));
        assert!(r.positively_curved);
        assert_eq!(r.min_curvature, int(1));
    }

    #[test]
    fn non_edge_rejected() {
        let g = named::path(3);
        assert!(matches!(
            kappa_lly(&g, Edge::new(0, 2)),
            Err(CurvatureError::Graph(GraphError::NotAnEdge(0, 2)))
        ));
        assert!(kappa_alpha(&g, Edge::new(0, 2), &ratio(1, 2)).is_err());
    }

    #[test]
    fn c3c4_bound_examples() {
        // Two degree-3 endpoints on no short cycle: the edge between the two
        // centres of a "double star" with two leaves each.
        let g = Graph::from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(c3c4_upper_bound(&g, Edge::new(0, 1)), Some(int(0)));
        assert_eq!(c3c4_upper_bound(&named::complete(4), Edge::new(0, 1)), None);
        assert_eq!(c3c4_upper_bound(&named::star(4), Edge::new(0, 1)), Some(ratio(1, 2)));
        assert_eq!(c3c4_upper_bound(&named::path(3), Edge::new(0, 2)), None);
    }

    #[test]
    fn report_rejects_edgeless() {
        let g = Graph::from_edge_list(1, []).unwrap();
        assert_eq!(curvature_report(&g), Err(CurvatureError::NoEdges));
    }
}
