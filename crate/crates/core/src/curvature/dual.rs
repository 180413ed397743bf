//! Lin-Lu-Yau curvature as a minimum of `Δf(x) - Δf(y)` over integer
//! 1-Lipschitz functions on `N[x] ∪ N[y]` with `f(y) - f(x) = 1`.
//!
//! With `f(x) = 0` every domain vertex lies within distance 2 of `x`, so the
//! Lipschitz condition alone confines `f` to `[-2, 2]`; the search range is
//! therefore exhaustive, not a heuristic cutoff. The search assigns values
//! depth-first, checks the Lipschitz condition against every assigned vertex
//! using distances in the whole graph, and prunes with a per-vertex lower
//! bound on the remaining objective.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::CurvatureError;
use crate::graph::{Edge, Graph};
use crate::rational::Rational;

/// Largest `d_x + d_y` accepted by default; the search is exponential in it.
pub const DEFAULT_ORACLE_THRESHOLD: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualOracle {
    pub threshold: usize,
    /// Values are searched in `[-value_bound, value_bound]`.
    pub value_bound: i64,
}

impl Default for DualOracle {
    fn default() -> Self {
        DualOracle {
            threshold: DEFAULT_ORACLE_THRESHOLD,
            value_bound: 2,
        }
    }
}

/// `Δf(x) - Δf(y)` with the normalized Laplacian `Δf(v) = (1/d_v) Σ_{u∼v} (f(u) - f(v))`.
///
/// `f` must be defined on `N[x] ∪ N[y]`; missing vertices panic.
pub fn laplacian_difference(g: &Graph, x: usize, y: usize, f: &BTreeMap<usize, i64>) -> Rational {
    let lap = |v: usize| {
        let fv = f[&v];
        let sum: i64 = g.neighbors(v).iter().map(|u| f[u] - fv).sum();
        Rational::new(BigInt::from(sum), BigInt::from(g.degree(v)))
    };
    lap(x) - lap(y)
}

impl DualOracle {
    /// Minimum of `Δf(x) - Δf(y)` over admissible `f`, oriented from `e.x` to `e.y`.
    pub fn evaluate(&self, g: &Graph, e: Edge) -> Result<Rational, CurvatureError> {
        let Edge { x, y } = g.edge(e.x, e.y)?;
        let (dx, dy) = (g.degree(x), g.degree(y));
        if dx + dy > self.threshold {
            return Err(CurvatureError::OracleInfeasible {
                edge: Edge { x, y },
                degree_sum: dx + dy,
                threshold: self.threshold,
            });
        }
        let (dxi, dyi) = (dx as i64, dy as i64);

        // Scaled objective: dx·dy·(Δf(x) - Δf(y))
        //   = dy·Σ_{u∼x} f(u) - dx·Σ_{u∼y} f(u) + dx·dy        (f(x) = 0, f(y) = 1).
        let coeff = |v: usize| -> i64 {
            let mut c = 0;
            if g.adjacent(v, x) {
                c += dyi;
            }
            if g.adjacent(v, y) {
                c -= dxi;
            }
            c
        };
        let free: Vec<usize> = g
            .edge_neighborhood(Edge { x, y })
            .into_iter()
            .filter(|&v| v != x && v != y)
            .collect();
        let base = coeff(y) + dxi * dyi;
        let ranges: Vec<(i64, i64)> = free
            .iter()
            .map(|&v| {
                let rx = i64::from(g.dist(v, x));
                let ry = i64::from(g.dist(v, y));
                let lo = (-rx).max(1 - ry).max(-self.value_bound);
                let hi = rx.min(1 + ry).min(self.value_bound);
                (lo, hi)
            })
            .collect();
        let coeffs: Vec<i64> = free.iter().map(|&v| coeff(v)).collect();
        // suffix[i]: least possible contribution of free[i..]
        let mut suffix = vec![0i64; free.len() + 1];
        for i in (0..free.len()).rev() {
            let (lo, hi) = ranges[i];
            suffix[i] = suffix[i + 1] + (coeffs[i] * lo).min(coeffs[i] * hi);
        }

        let mut state = Search {
            g,
            free: &free,
            ranges: &ranges,
            coeffs: &coeffs,
            suffix: &suffix,
            values: vec![0; free.len()],
            anchors: [(x, 0), (y, 1)],
            best: None,
        };
        state.descend(0, base);
        let best = state.best.expect("f(z) = d(z, x) is always admissible");
        Ok(Rational::new(BigInt::from(best), BigInt::from(dxi * dyi)))
    }
}

struct Search<'a> {
    g: &'a Graph,
    free: &'a [usize],
    ranges: &'a [(i64, i64)],
    coeffs: &'a [i64],
    suffix: &'a [i64],
    values: Vec<i64>,
    anchors: [(usize, i64); 2],
    best: Option<i64>,
}

impl Search<'_> {
    fn descend(&mut self, i: usize, partial: i64) {
        if let Some(b) = self.best {
            if partial + self.suffix[i] >= b {
                return;
            }
        }
        if i == self.free.len() {
            self.best = Some(partial);
            return;
        }
        let v = self.free[i];
        let (lo, hi) = self.ranges[i];
        for val in lo..=hi {
            let ok = self
                .anchors
                .iter()
                .copied()
                .chain((0..i).map(|j| (self.free[j], self.values[j])))
                .all(|(w, fw)| (val - fw).abs() <= i64::from(self.g.dist(v, w)));
            if ok {
                self.values[i] = val;
                self.descend(i + 1, partial + self.coeffs[i] * val);
            }
        }
    }
}

/// [`DualOracle::evaluate`] over the default `[-2, 2]` value range.
pub fn kappa_lly_dual(g: &Graph, e: Edge, threshold: usize) -> Result<Rational, CurvatureError> {
    DualOracle {
        threshold,
        ..DualOracle::default()
    }
    .evaluate(g, e)
}
