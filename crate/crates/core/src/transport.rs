//! Exact optimal transport between finitely supported probability measures,
//! with the graph distance as ground cost.
//!
//! The mass shared by both measures is first matched to itself at zero cost.
//! What remains is a bipartite transportation problem between the two residual
//! supports; after scaling every mass by the least common multiple of the
//! denominators it becomes an integer min-cost flow, solved by successive
//! shortest augmenting paths.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::{denominator_lcm, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error("measure masses sum to {0}, not 1")]
    NotProbability(Rational),
    #[error("negative mass {mass} at vertex {vertex}")]
    NegativeMass { vertex: usize, mass: Rational },
    #[error("vertex {vertex} is not a vertex of the graph ({n} vertices)")]
    OffGraph { vertex: usize, n: usize },
    #[error("laziness parameter {0} is outside [0, 1]")]
    AlphaOutOfRange(Rational),
    #[error("vertex {0} has no neighbors")]
    IsolatedVertex(usize),
    #[error("negative coupling entry {mass} at ({u}, {v})")]
    NegativeEntry { u: usize, v: usize, mass: Rational },
    #[error("coupling marginal at vertex {vertex} is {found}, expected {expected} ({side})")]
    MarginalMismatch {
        side: &'static str,
        vertex: usize,
        expected: Box<Rational>,
        found: Box<Rational>,
    },
    #[error("scaled masses exceed the 128-bit flow range")]
    ScaleOverflow,
}

/// Probability measure with finite support; zero masses are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    support: BTreeMap<usize, Rational>,
}

impl Measure {
    /// Validates non-negativity and total mass 1. Zero entries are dropped and
    /// repeated vertices are summed.
    pub fn new<I>(masses: I) -> Result<Self, TransportError>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut support: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, m) in masses {
            *support.entry(v).or_insert_with(Rational::zero) += m;
        }
        if let Some((&vertex, mass)) = support.iter().find(|(_, m)| m.is_negative()) {
            return Err(TransportError::NegativeMass {
                vertex,
                mass: mass.clone(),
            });
        }
        support.retain(|_, m| !m.is_zero());
        let total: Rational = support.values().sum();
        if !total.is_one() {
            return Err(TransportError::NotProbability(total));
        }
        Ok(Measure { support })
    }

    pub fn point(v: usize) -> Self {
        Measure {
            support: BTreeMap::from([(v, Rational::one())]),
        }
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.support.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.support.iter().map(|(&v, m)| (v, m))
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    fn check_on(&self, g: &Graph) -> Result<(), TransportError> {
        match self.support.keys().find(|&&v| v >= g.n()) {
            Some(&vertex) => Err(TransportError::OffGraph { vertex, n: g.n() }),
            None => Ok(()),
        }
    }
}

/// The lazy random-walk measure at `x`: mass `alpha` on `x` and
/// `(1 - alpha) / deg(x)` on each neighbor.
pub fn vertex_measure(g: &Graph, x: usize, alpha: &Rational) -> Result<Measure, TransportError> {
    if x >= g.n() {
        return Err(TransportError::OffGraph { vertex: x, n: g.n() });
    }
    if alpha.is_negative() || *alpha > Rational::one() {
        return Err(TransportError::AlphaOutOfRange(alpha.clone()));
    }
    let d = g.degree(x);
    if d == 0 {
        return Err(TransportError::IsolatedVertex(x));
    }
    let spread = (Rational::one() - alpha) / Rational::from_integer(BigInt::from(d));
    let mut support = BTreeMap::new();
    if !alpha.is_zero() {
        support.insert(x, alpha.clone());
    }
    if !spread.is_zero() {
        for &v in g.neighbors(x) {
            support.insert(v, spread.clone());
        }
    }
    Ok(Measure { support })
}

/// Joint measure on vertex pairs with prescribed marginals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coupling {
    entries: BTreeMap<(usize, usize), Rational>,
    source: Measure,
    target: Measure,
}

impl Coupling {
    /// Validates that entries are non-negative and that row sums equal the
    /// source masses and column sums the target masses.
    pub fn new<I>(source: Measure, target: Measure, entries: I) -> Result<Self, TransportError>
    where
        I: IntoIterator<Item = ((usize, usize), Rational)>,
    {
        let mut map: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (k, m) in entries {
            *map.entry(k).or_insert_with(Rational::zero) += m;
        }
        if let Some((&(u, v), mass)) = map.iter().find(|(_, m)| m.is_negative()) {
            return Err(TransportError::NegativeEntry {
                u,
                v,
                mass: mass.clone(),
            });
        }
        map.retain(|_, m| !m.is_zero());
        let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(u, v), m) in &map {
            *rows.entry(u).or_insert_with(Rational::zero) += m;
            *cols.entry(v).or_insert_with(Rational::zero) += m;
        }
        check_marginal("source", &source, &rows)?;
        check_marginal("target", &target, &cols)?;
        Ok(Coupling {
            entries: map,
            source,
            target,
        })
    }

    pub fn source(&self) -> &Measure {
        &self.source
    }

    pub fn target(&self) -> &Measure {
        &self.target
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.entries.iter().map(|(&k, m)| (k, m))
    }

    pub fn mass(&self, u: usize, v: usize) -> Rational {
        self.entries.get(&(u, v)).cloned().unwrap_or_else(Rational::zero)
    }
}

fn check_marginal(
    side: &'static str,
    expected: &Measure,
    found: &BTreeMap<usize, Rational>,
) -> Result<(), TransportError> {
    let vertices = expected.support.keys().chain(found.keys());
    for &v in vertices {
        let want = expected.mass(v);
        let got = found.get(&v).cloned().unwrap_or_else(Rational::zero);
        if want != got {
            return Err(TransportError::MarginalMismatch {
                side,
                vertex: v,
                expected: Box::new(want),
                found: Box::new(got),
            });
        }
    }
    Ok(())
}

/// `Σ π(u,v)·d(u,v)`.
pub fn coupling_cost(g: &Graph, c: &Coupling) -> Result<Rational, TransportError> {
    c.source.check_on(g)?;
    c.target.check_on(g)?;
    Ok(c.entries
        .iter()
        .map(|(&(u, v), m)| m * Rational::from_integer(BigInt::from(g.dist(u, v))))
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportResult {
    pub value: Rational,
    pub coupling: Coupling,
}

/// Exact Wasserstein distance and one optimal coupling.
pub fn wasserstein(g: &Graph, m1: &Measure, m2: &Measure) -> Result<TransportResult, TransportError> {
    m1.check_on(g)?;
    m2.check_on(g)?;

    let mut entries: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut supply: Vec<(usize, Rational)> = Vec::new();
    let mut demand: Vec<(usize, Rational)> = Vec::new();
    for (v, a) in m1.iter() {
        let b = m2.mass(v);
        let common = if *a < b { a.clone() } else { b.clone() };
        if common.is_positive() {
            entries.insert((v, v), common.clone());
        }
        let rest = a - &common;
        if rest.is_positive() {
            supply.push((v, rest));
        }
    }
    for (v, b) in m2.iter() {
        let rest = b - m1.mass(v);
        if rest.is_positive() {
            demand.push((v, rest));
        }
    }

    if !supply.is_empty() {
        let scale = denominator_lcm(supply.iter().chain(&demand).map(|(_, m)| m));
        let to_int = |m: &Rational| -> Result<i128, TransportError> {
            (m * Rational::from_integer(scale.clone()))
                .to_integer()
                .to_i128()
                .ok_or(TransportError::ScaleOverflow)
        };
        let sup: Vec<i128> = supply.iter().map(|(_, m)| to_int(m)).collect::<Result<_, _>>()?;
        let dem: Vec<i128> = demand.iter().map(|(_, m)| to_int(m)).collect::<Result<_, _>>()?;
        let cost: Vec<Vec<i64>> = supply
            .iter()
            .map(|(u, _)| demand.iter().map(|(v, _)| i64::from(g.dist(*u, *v))).collect())
            .collect();
        let flow = min_cost_transport(&sup, &dem, &cost);
        let denom = Rational::from_integer(scale);
        for (i, row) in flow.iter().enumerate() {
            for (j, &f) in row.iter().enumerate() {
                if f > 0 {
                    let key = (supply[i].0, demand[j].0);
                    let mass = Rational::from_integer(BigInt::from(f)) / &denom;
                    *entries.entry(key).or_insert_with(Rational::zero) += mass;
                }
            }
        }
    }

    let coupling = Coupling::new(m1.clone(), m2.clone(), entries)?;
    let value = coupling_cost(g, &coupling)?;
    Ok(TransportResult { value, coupling })
}

/// Balanced integer transportation problem: returns the flow matrix of a
/// minimum-cost plan shipping `supply[i]` out of each source and `demand[j]`
/// into each sink, with unbounded arc capacities and non-negative costs.
///
/// Successive shortest paths on the residual network: source arcs `s→i`,
/// sink arcs `j→t`, forward arcs `i→j` with cost `cost[i][j]`, and backward
/// arcs `j→i` with cost `-cost[i][j]` wherever flow is positive. Bellman-Ford
/// handles the negative backward arcs; the residual graph never has a negative
/// cycle because each augmentation follows a shortest path.
pub fn min_cost_transport(supply: &[i128], demand: &[i128], cost: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let ns = supply.len();
    let nd = demand.len();
    debug_assert_eq!(supply.iter().sum::<i128>(), demand.iter().sum::<i128>());
    let mut flow = vec![vec![0i128; nd]; ns];
    let mut sup = supply.to_vec();
    let mut dem = demand.to_vec();

    // Node ids: sources 0..ns, sinks ns..ns+nd.
    let n = ns + nd;
    loop {
        if sup.iter().all(|&s| s == 0) {
            break;
        }
        let mut dist = vec![i64::MAX; n];
        let mut pred = vec![usize::MAX; n];
        for i in 0..ns {
            if sup[i] > 0 {
                dist[i] = 0;
            }
        }
        for _ in 0..n {
            let mut changed = false;
            for i in 0..ns {
                if dist[i] == i64::MAX {
                    continue;
                }
                for j in 0..nd {
                    let nd_ = dist[i] + cost[i][j];
                    if nd_ < dist[ns + j] {
                        dist[ns + j] = nd_;
                        pred[ns + j] = i;
                        changed = true;
                    }
                }
            }
            for j in 0..nd {
                if dist[ns + j] == i64::MAX {
                    continue;
                }
                for i in 0..ns {
                    if flow[i][j] > 0 {
                        let nd_ = dist[ns + j] - cost[i][j];
                        if nd_ < dist[i] {
                            dist[i] = nd_;
                            pred[i] = ns + j;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let sink = (0..nd)
            .filter(|&j| dem[j] > 0 && dist[ns + j] != i64::MAX)
            .min_by_key(|&j| dist[ns + j])
            .expect("balanced problem always has an augmenting path");

        // Walk back to a source with remaining supply, collecting the bottleneck.
        let mut bottleneck = dem[sink];
        let mut node = ns + sink;
        let mut path = Vec::new();
        loop {
            let p = pred[node];
            if node >= ns {
                path.push((p, node - ns, true));
            } else {
                let j = p - ns;
                bottleneck = bottleneck.min(flow[node][j]);
                path.push((node, j, false));
            }
            node = p;
            if node < ns && pred[node] == usize::MAX {
                break;
            }
        }
        bottleneck = bottleneck.min(sup[node]);
        for (i, j, forward) in path {
            if forward {
                flow[i][j] += bottleneck;
            } else {
                flow[i][j] -= bottleneck;
            }
        }
        sup[node] -= bottleneck;
        dem[sink] -= bottleneck;
    }
    flow
}
