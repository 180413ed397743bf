//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines come out in order and uncaptured.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use halin_curvature::curvature::{
    c3c4_upper_bound, check_coupling_certificate, check_lipschitz_certificate, curvature_report, kappa_alpha,
    kappa_lly, kappa_lly_dual, lly_alpha, CouplingCertificate, LipschitzCertificate,
};
use halin_curvature::enumerate::{enumerate_halin, verify_theorem, FamilyLabel, TheoremReport};
use halin_curvature::graph::{canonical_form, named};
use halin_curvature::halin::{
    build_halin, component_profile, corollary34_violated, lemma32_violated, lemma33_violated, wheel, PlaneTree,
};
use halin_curvature::rational::{int, ratio};
use halin_curvature::{Edge, Graph, Rational};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn theorem(report: &TheoremReport) -> Outcome {
    let r = &report.result;
    check(report.passed, report.failures.join("; "))?;
    let within = r.classes.iter().filter(|c| c.n() <= 12).count();
    check(within == 27, format!("{within} classes with ≤ 12 vertices"))?;
    let c = &report.family_counts;
    check(
        (c.wheel, c.wheel_sub1, c.wheel_sub2, c.sporadic) == (9, 5, 5, 8),
        format!("family counts {c}"),
    )?;
    let at13 = r.positive_per_n.get(&13).copied();
    check(at13 == Some(0), format!("{at13:?} classes at 13 vertices"))?;
    Ok(format!("27 classes, {c}, none at 13 vertices"))
}

fn halin_only(report: &TheoremReport) -> Outcome {
    let halin: Vec<_> = report.result.halin_only().filter(|c| c.n() <= 12).collect();
    let wheels = halin.iter().filter(|c| matches!(c.family, FamilyLabel::Wheel(_))).count();
    let sporadic = halin.iter().filter(|c| matches!(c.family, FamilyLabel::Sporadic(_))).count();
    check(
        halin.len() == 11 && wheels == 9 && sporadic == 2,
        format!("{} classes ({wheels} wheels, {sporadic} sporadic)", halin.len()),
    )?;
    Ok(format!("11 Halin classes: {wheels} wheels + {sporadic} sporadic"))
}

fn wheel5() -> Outcome {
    let g = named::wheel(5);
    for e in g.edges() {
        let p = kappa_lly(&g, e).map_err(|e| e.to_string())?;
        let d = kappa_lly_dual(&g, e, 14).map_err(|e| e.to_string())?;
        check(p == int(1) && d == int(1), format!("edge {e}: transport {p}, dual {d}"))?;
    }
    let q = ratio(3, 16);
    let pi1 = CouplingCertificate {
        x: 0,
        y: 1,
        alpha: ratio(1, 4),
        pi: vec![
            (0, 0, ratio(1, 4)),
            (1, 1, q.clone()),
            (2, 2, q.clone()),
            (4, 4, q),
            (3, 1, ratio(1, 16)),
            (3, 2, ratio(1, 16)),
            (3, 4, ratio(1, 16)),
        ],
    };
    let h = ratio(1, 4);
    let pi2 = CouplingCertificate {
        x: 1,
        y: 2,
        alpha: ratio(1, 4),
        pi: vec![(1, 1, h.clone()), (0, 0, h.clone()), (2, 2, h.clone()), (4, 3, h)],
    };
    for (name, cert) in [("pi_1", pi1), ("pi_2", pi2)] {
        let b = check_coupling_certificate(&g, &cert).map_err(|e| format!("{name}: {e}"))?;
        check(b == int(1), format!("{name} certifies {b}"))?;
    }
    Ok("all 8 edges equal 1 (transport and dual); both couplings certify 1".into())
}

fn boundary() -> Outcome {
    let w12 = curvature_report(&wheel(12).unwrap().graph).map_err(|e| e.to_string())?;
    check(w12.positively_curved, format!("W12 minimum {}", w12.min_curvature))?;
    let g = wheel(13).unwrap().graph;
    let w13 = curvature_report(&g).map_err(|e| e.to_string())?;
    let hub = w13.nonpositive_edges().find(|(e, _)| e.x == 0).cloned();
    let (e, k) = hub.ok_or("no non-positive hub edge in W13")?;
    // f = 1 on y and its two rim neighbors, 0 on x and the next rim vertices, -1 elsewhere
    let f: BTreeMap<usize, i64> = (0..13)
        .map(|z| {
            let val = match z {
                1 | 2 | 12 => 1,
                0 | 3 | 11 => 0,
                _ => -1,
            };
            (z, val)
        })
        .collect();
    let bound = check_lipschitz_certificate(&g, &LipschitzCertificate { x: 0, y: 1, f }).map_err(|e| e.to_string())?;
    check(bound == int(0), format!("spoke certificate gives {bound}"))?;
    check(bound == ratio(8, 12) - ratio(2, 3), "bound differs from 8/D - 2/3")?;
    Ok(format!("W12 min {}, W13 hub edge {e} = {k}, certificate upper bound 0", w12.min_curvature))
}

fn zero_witness(report: &TheoremReport) -> Outcome {
    let found: Vec<_> = report
        .result
        .zero_min_classes
        .iter()
        .filter(|(_, h)| h.tree.max_degree() == 4)
        .collect();
    check(!found.is_empty(), "no D(T)=4 class with minimum exactly 0")?;
    for (form, h) in &found {
        let r = curvature_report(&h.graph).map_err(|e| e.to_string())?;
        check(r.min_curvature == int(0), format!("{form} has minimum {}", r.min_curvature))?;
    }
    // hub x with neighbors y, x1, x2, x3 in order; y and x2 carry two outer vertices each
    let h_prime = build_halin(&PlaneTree::from_preorder_counts(&[4, 2, 0, 0, 0, 2, 0, 0, 0]).unwrap());
    let form = canonical_form(&h_prime.graph);
    check(found.iter().any(|(f, _)| *f == form), format!("H' ({form}) not among the zero-minimum classes"))?;
    let zeros = curvature_report(&h_prime.graph).map_err(|e| e.to_string())?.zero_edges().count();
    Ok(format!("{} D(T)=4 zero-minimum classes, including H' = {form} with {zeros} zero edges", found.len()))
}

fn primal_dual(rng: &mut ChaCha8Rng) -> Outcome {
    let mut edges = 0;
    let mut classes = 0;
    for n in 4..=9 {
        for h in common::halin_classes(n).values() {
            classes += 1;
            let g = &h.graph;
            for e in g.edges() {
                let p = kappa_lly(g, e).map_err(|e| e.to_string())?;
                let d = kappa_lly_dual(g, e, 14).map_err(|e| e.to_string())?;
                check(p == d, format!("{} edge {e}: {p} vs {d}", canonical_form(g)))?;
                edges += 1;
            }
        }
    }
    for i in 0..1000 {
        let g = common::random_connected_graph(rng, 2, 8, rng_density(i));
        for e in g.edges() {
            let p = kappa_lly(&g, e).map_err(|e| e.to_string())?;
            let d = kappa_lly_dual(&g, e, 14).map_err(|e| e.to_string())?;
            check(p == d, format!("random graph {i} edge {e}: {p} vs {d}"))?;
            edges += 1;
        }
    }
    Ok(format!("{classes} Halin classes ≤ 9 vertices + 1000 random graphs, {edges} edges agree"))
}

fn rng_density(i: usize) -> f64 {
    [0.1, 0.3, 0.5, 0.8][i % 4]
}

fn random_alpha(rng: &mut ChaCha8Rng, lo: &Rational) -> Rational {
    let t = rng.gen_range(0..240i64);
    lo + (Rational::one() - lo) * Rational::new(BigInt::from(t), BigInt::from(240))
}

fn constancy(rng: &mut ChaCha8Rng) -> Outcome {
    for i in 0..500 {
        let g = common::random_connected_graph(rng, 2, 8, rng_density(i));
        let edges: Vec<Edge> = g.edges().collect();
        let e = edges[rng.gen_range(0..edges.len())];
        let lo = lly_alpha(&g, e);
        let (a1, a2) = (random_alpha(rng, &lo), random_alpha(rng, &lo));
        let r = |a: &Rational| kappa_alpha(&g, e, a).map(|k| k / (Rational::one() - a));
        let (r1, r2) = (r(&a1).map_err(|e| e.to_string())?, r(&a2).map_err(|e| e.to_string())?);
        check(r1 == r2, format!("sample {i}: α={a1} gives {r1}, α={a2} gives {r2}"))?;
    }
    Ok("500 samples agree".into())
}

fn lemma_suite(rng: &mut ChaCha8Rng, report: &TheoremReport) -> Outcome {
    let mut tested = 0;
    for i in 0..1000 {
        let g: Graph = if i % 2 == 0 {
            common::random_tree(rng, 2, 12)
        } else {
            common::random_connected_graph(rng, 4, 12, 0.08)
        };
        for e in g.edges() {
            if let Some(b) = c3c4_upper_bound(&g, e) {
                let k = kappa_lly(&g, e).map_err(|e| e.to_string())?;
                check(k <= b, format!("sample {i} edge {e}: κ = {k} > bound {b}"))?;
                tested += 1;
            }
        }
    }
    for c in &report.result.classes {
        let p = component_profile(&c.representative);
        check(
            !lemma32_violated(&p) && !lemma33_violated(&p) && !corollary34_violated(&p),
            format!("positive class {} violates a structure lemma", c.canonical),
        )?;
    }
    for n_max in 4..=10 {
        let pruned = enumerate_halin(n_max, true).map_err(|e| e.to_string())?;
        let full = enumerate_halin(n_max, false).map_err(|e| e.to_string())?;
        check(pruned.classes == full.classes, format!("pruning changes the result at n_max = {n_max}"))?;
    }
    Ok(format!(
        "{tested} short-cycle-free edges within bound; {} positive classes satisfy the lemmas; pruning exact for n_max 4..=10",
        report.result.classes.len()
    ))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a11_c0de);
    let start = Instant::now();
    let report = verify_theorem(13);
    let enum_time = start.elapsed();

    let mut results: Vec<(&str, Outcome)> = Vec::new();
    match &report {
        Ok(r) => {
            results.push(("1 classification up to 13 vertices", theorem(r).map(|s| format!("{s} ({enum_time:.1?})"))));
            results.push(("2 Halin-only classes", halin_only(r)));
        }
        Err(e) => {
            results.push(("1 classification up to 13 vertices", Err(e.to_string())));
            results.push(("2 Halin-only classes", Err(e.to_string())));
        }
    }
    results.push(("3 W5 curvature and couplings", wheel5()));
    results.push(("4 W12 positive, W13 hub edge non-positive", boundary()));
    results.push((
        "5 zero-curvature witness with D(T)=4",
        report.as_ref().map_err(|e| e.to_string()).and_then(zero_witness),
    ));
    results.push(("6 transport equals dual", primal_dual(&mut rng)));
    results.push(("7 curvature ratio constant in α", constancy(&mut rng)));
    results.push((
        "8 lemma soundness and pruning",
        report.as_ref().map_err(|e| e.to_string()).and_then(|r| lemma_suite(&mut rng, r)),
    ));

    let mut ok = true;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                ok = false;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("total {:.1?}", start.elapsed());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
