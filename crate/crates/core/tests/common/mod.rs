#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

use halin_curvature::enumerate::ordered_tree_codes;
use halin_curvature::graph::canonical_form;
use halin_curvature::halin::{build_halin, HalinGraph, PlaneTree};
use halin_curvature::transport::Measure;
use halin_curvature::{Graph, Rational};

/// Connected graph from a spanning tree (`parents[i - 1] % i` is the parent of
/// `i`) plus the pairs whose flag is set.
pub fn graph_from_choices(n: usize, parents: &[usize], extra: &[bool]) -> Graph {
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let p = parents[i - 1] % i;
        edges.insert((p, i));
    }
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if extra.get(k).copied().unwrap_or(false) {
                edges.insert((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(0..n, n - 1),
            prop::collection::vec(prop::bool::weighted(0.35), n * (n - 1) / 2),
        )
            .prop_map(|(n, parents, extra)| graph_from_choices(n, &parents, &extra))
    })
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, min_n: usize, max_n: usize, density: f64) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    let extra: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(density)).collect();
    graph_from_choices(n, &parents, &extra)
}

pub fn random_tree<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> Graph {
    random_connected_graph(rng, min_n, max_n, 0.0)
}

/// A probability measure on `support` with integer weights `w`.
pub fn weighted_measure(support: &[usize], w: &[u32]) -> Measure {
    let total: u32 = w.iter().sum();
    Measure::new(
        support
            .iter()
            .zip(w)
            .map(|(&v, &m)| (v, Rational::new(BigInt::from(m), BigInt::from(total)))),
    )
    .unwrap()
}

/// Kantorovich dual by exhaustion: the maximum of `Σ f(v)(μ(v) - ν(v))` over
/// integer functions on the union of the supports that are 1-Lipschitz for
/// the graph distance. The Lipschitz polytope has a totally unimodular
/// constraint matrix and integer right-hand sides, so an integer maximiser
/// exists; pinning the first support vertex to 0 leaves values in
/// `[-diam, diam]`.
pub fn kantorovich_by_exhaustion(g: &Graph, mu: &Measure, nu: &Measure) -> Rational {
    let support: Vec<usize> = mu
        .iter()
        .map(|(v, _)| v)
        .chain(nu.iter().map(|(v, _)| v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let weight: Vec<Rational> = support.iter().map(|&v| mu.mass(v) - nu.mass(v)).collect();
    let diam = g.diameter() as i64;
    let k = support.len();
    let mut f = vec![0i64; k];
    let mut best: Option<Rational> = None;

    fn go(
        i: usize,
        g: &Graph,
        support: &[usize],
        weight: &[Rational],
        diam: i64,
        f: &mut Vec<i64>,
        best: &mut Option<Rational>,
    ) {
        if i == support.len() {
            let val: Rational = f
                .iter()
                .zip(weight)
                .map(|(&x, w)| w * Rational::from_integer(BigInt::from(x)))
                .sum();
            if best.as_ref().is_none_or(|b| val > *b) {
                *best = Some(val);
            }
            return;
        }
        for x in -diam..=diam {
            let ok = (0..i).all(|j| (x - f[j]).abs() <= i64::from(g.dist(support[i], support[j])));
            if ok {
                f[i] = x;
                go(i + 1, g, support, weight, diam, f, best);
            }
        }
    }

    if k == 0 {
        return Rational::zero();
    }
    // f(support[0]) = 0
    go(1, g, &support, &weight, diam, &mut f, &mut best);
    best.unwrap()
}

/// One representative per isomorphism class of generalized Halin graphs on
/// `n` vertices, keyed by canonical form.
pub fn halin_classes(n: usize) -> BTreeMap<String, HalinGraph> {
    let mut out = BTreeMap::new();
    for code in ordered_tree_codes(n) {
        // trees with D(T) < 3 are rejected by the constructor
        let Ok(tree) = PlaneTree::from_preorder_counts(&code) else { continue };
        let h = build_halin(&tree);
        out.entry(canonical_form(&h.graph).as_str().to_string()).or_insert(h);
    }
    out
}

/// Whether `e` lies on a triangle or a 4-cycle, by checking every 3- and
/// 4-vertex sequence through it.
pub fn on_short_cycle_bruteforce(g: &Graph, x: usize, y: usize) -> bool {
    let n = g.n();
    for a in 0..n {
        if a != x && a != y && g.adjacent(x, a) && g.adjacent(y, a) {
            return true;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let distinct = a != b && ![x, y].contains(&a) && ![x, y].contains(&b);
            // x - y - a - b - x
            if distinct && g.adjacent(y, a) && g.adjacent(a, b) && g.adjacent(b, x) {
                return true;
            }
        }
    }
    false
}
