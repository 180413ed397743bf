mod common;

use std::collections::BTreeSet;

use halin_curvature::curvature::{c3c4_upper_bound, curvature_report, CurvatureError, CurvatureReport};
use halin_curvature::enumerate::{
    classification_json, enumerate_halin, enumerate_halin_with, ordered_tree_codes, verify_theorem_with,
    EnumerateOptions, FamilyLabel,
};
use halin_curvature::graph::canonical_form;
use halin_curvature::halin::{
    build_halin, component_profile, corollary34_violated, is_halin, lemma32_violated, lemma33_violated,
    prune_negative, wheel, wheel_sub1, wheel_sub2, PlaneTree,
};
use halin_curvature::rational::is_positive;
use halin_curvature::Graph;

#[test]
fn ordered_tree_count_matches_dyck_words() {
    // rooted ordered trees on n nodes ↔ balanced bracket strings of length 2(n - 1)
    for n in 1..=8 {
        let len = 2 * (n - 1);
        let dyck = (0u32..1 << len)
            .filter(|&w| {
                let mut depth = 0i32;
                for i in 0..len {
                    depth += if w >> i & 1 == 1 { 1 } else { -1 };
                    if depth < 0 {
                        return false;
                    }
                }
                depth == 0
            })
            .count();
        let codes = ordered_tree_codes(n);
        assert_eq!(codes.len(), dyck, "n = {n}");
        assert_eq!(codes.iter().collect::<BTreeSet<_>>().len(), codes.len());
    }
}

#[test]
fn pruning_changes_nothing_up_to_ten() {
    let pruned = enumerate_halin(10, true).unwrap();
    let full = enumerate_halin(10, false).unwrap();
    assert_eq!(pruned.classes, full.classes);
    assert_eq!(full.pruned_count, 0);
    assert!(pruned.pruned_count > 0);
}

#[test]
fn pruning_is_sound_on_every_class_up_to_ten() {
    for n in 4..=10 {
        for h in common::halin_classes(n).values() {
            if prune_negative(h) {
                assert!(!curvature_report(&h.graph).unwrap().positively_curved);
            }
        }
    }
}

#[test]
fn generation_order_does_not_matter() {
    let forward = enumerate_halin(10, true).unwrap();
    let backward = enumerate_halin_with(
        10,
        &EnumerateOptions {
            reverse_order: true,
            workers: Some(3),
            ..EnumerateOptions::default()
        },
    )
    .unwrap();
    assert_eq!(forward.canonical_forms(), backward.canonical_forms());
    assert_eq!(forward.examined_per_n, backward.examined_per_n);
    // least-code representatives do not depend on the order either
    assert_eq!(forward.classes, backward.classes);
}

#[test]
fn positive_classes_respect_the_structure_lemmas() {
    let r = enumerate_halin(12, false).unwrap();
    for c in &r.classes {
        let g = &c.representative.graph;
        assert!(c.report.positively_curved);
        assert_eq!(c.report.min_curvature, curvature_report(g).unwrap().min_curvature);
        for e in g.edges() {
            assert!(c3c4_upper_bound(g, e).is_none_or(|b| is_positive(&b)), "{}", c.canonical);
        }
        let p = component_profile(&c.representative);
        assert!(!lemma32_violated(&p), "{}", c.canonical);
        assert!(!lemma33_violated(&p), "{}", c.canonical);
        assert!(!corollary34_violated(&p), "{}", c.canonical);
        assert_eq!(c.is_halin, is_halin(&c.representative));
    }
}

#[test]
fn wheel_families_and_the_boundary() {
    let r = enumerate_halin(12, true).unwrap();
    for c in &r.classes {
        let template = match c.family {
            FamilyLabel::Wheel(n) => wheel(n),
            FamilyLabel::WheelSub1(n) => wheel_sub1(n),
            FamilyLabel::WheelSub2(n) => wheel_sub2(n),
            _ => continue,
        }
        .unwrap();
        assert_eq!(canonical_form(&template.graph), c.canonical);
        assert!(curvature_report(&template.graph).unwrap().positively_curved);
    }
    let w13 = wheel(13).unwrap().graph;
    let report = curvature_report(&w13).unwrap();
    assert!(!is_positive(&report.min_curvature));
    assert!(report.nonpositive_edges().any(|(e, _)| e.x == 0));
}

#[test]
fn prism_is_a_sporadic_halin_class() {
    let prism = build_halin(&PlaneTree::from_preorder_counts(&[3, 2, 0, 0, 0, 0]).unwrap());
    assert_eq!(prism.n(), 6);
    let r = enumerate_halin(6, true).unwrap();
    let class = r
        .classes
        .iter()
        .find(|c| c.canonical == canonical_form(&prism.graph))
        .expect("prism is positively curved");
    assert!(matches!(class.family, FamilyLabel::Sporadic(_)));
    assert!(class.is_halin);
}

fn negated(g: &Graph) -> Result<CurvatureReport, CurvatureError> {
    let r = curvature_report(g)?;
    CurvatureReport::from_edges(r.edges.into_iter().map(|(e, k)| (e, -k)).collect())
}

#[test]
fn verifier_notices_a_broken_engine() {
    let opts = EnumerateOptions {
        use_pruning: false,
        engine: negated,
        ..EnumerateOptions::default()
    };
    let report = verify_theorem_with(12, &opts).unwrap();
    assert!(!report.passed);
    assert!(!report.failures.is_empty());
    assert!(report.summary().contains("FAILED"));
}

#[test]
fn json_is_deterministic_and_complete() {
    let a = enumerate_halin_with(8, &EnumerateOptions { workers: Some(1), ..Default::default() }).unwrap();
    let b = enumerate_halin_with(8, &EnumerateOptions { workers: Some(4), ..Default::default() }).unwrap();
    let (ja, jb) = (classification_json(&a, false), classification_json(&b, false));
    assert_eq!(ja, jb);

    let doc: serde_json::Value = serde_json::from_str(&ja).unwrap();
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), a.classes.len());
    for (c, rec) in classes.iter().zip(&a.classes) {
        assert_eq!(c["canonical_graph6"], rec.canonical.as_str());
        assert_eq!(c["n"], rec.n());
        assert_eq!(c["family"], rec.family.to_string());
        let edges = c["edges"].as_array().unwrap();
        assert_eq!(edges.len(), rec.report.edges.len());
        // edge ids refer to the canonical labeling
        let g = rec.canonical.to_graph().unwrap();
        for e in edges {
            assert!(g.adjacent(e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize));
            assert!(e[2].is_string());
        }
    }
    let halin: serde_json::Value = serde_json::from_str(&classification_json(&a, true)).unwrap();
    assert!(halin["classes"].as_array().unwrap().iter().all(|c| c["is_halin"] == true));
}
