use std::fmt::Write as _;

use serde_json::json;

use halin_curvature::enumerate::ClassificationResult;
use halin_curvature::graph::edgelist::write_edge_list;
use halin_curvature::graph::graph6::to_graph6;
use halin_curvature::rational::format_rational;
use halin_curvature::{CurvatureReport, Graph, Rational};

pub fn graph6(g: &Graph) -> String {
    to_graph6(g) + "\n"
}

pub fn edge_list(g: &Graph) -> String {
    write_edge_list(g)
}

pub fn graph_json(g: &Graph) -> String {
    let edges: Vec<[usize; 2]> = g.edges().map(|e| [e.x, e.y]).collect();
    let doc = json!({ "n": g.n(), "graph6": to_graph6(g), "edges": edges });
    serde_json::to_string_pretty(&doc).expect("json value serializes") + "\n"
}

/// Undirected DOT; with a report, every edge is labeled by its curvature.
pub fn dot(g: &Graph, report: Option<&CurvatureReport>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    match report {
        Some(r) => {
            for (e, k) in &r.edges {
                let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.x, e.y, format_rational(k));
            }
        }
        None => {
            for e in g.edges() {
                let _ = writeln!(out, "  {} -- {};", e.x, e.y);
            }
        }
    }
    out.push_str("}\n");
    out
}

fn dual_text(d: &Option<Rational>) -> String {
    d.as_ref().map_or_else(|| "-".to_string(), format_rational)
}

pub fn curvature_table(report: &CurvatureReport, dual: &[Option<Rational>]) -> String {
    let mut out = String::from("edge      kappa     dual\n");
    for ((e, k), d) in report.edges.iter().zip(dual) {
        let _ = writeln!(
            out,
            "{:<9} {:<9} {}",
            e.to_string(),
            format_rational(k),
            dual_text(d)
        );
    }
    let _ = writeln!(out, "min {}", format_rational(&report.min_curvature));
    let _ = writeln!(
        out,
        "{}",
        if report.positively_curved {
            "positively curved"
        } else {
            "not positively curved"
        }
    );
    out
}

pub fn curvature_json(g: &Graph, report: &CurvatureReport, dual: &[Option<Rational>]) -> String {
    let edges: Vec<_> = report
        .edges
        .iter()
        .zip(dual)
        .map(|((e, k), d)| {
            json!({
                "edge": [e.x, e.y],
                "kappa": format_rational(k),
                "dual": d.as_ref().map(format_rational),
            })
        })
        .collect();
    let doc = json!({
        "graph6": to_graph6(g),
        "n": g.n(),
        "min_curvature": format_rational(&report.min_curvature),
        "positively_curved": report.positively_curved,
        "edges": edges,
    });
    serde_json::to_string_pretty(&doc).expect("json value serializes") + "\n"
}

pub fn class_table(result: &ClassificationResult, halin_only: bool) -> String {
    let mut out = String::new();
    for c in result.classes.iter().filter(|c| !halin_only || c.is_halin) {
        let _ = writeln!(
            out,
            "{:>2}  {:<12} {:<8} min {:<6} {}",
            c.n(),
            c.family.to_string(),
            if c.is_halin { "halin" } else { "general" },
            format_rational(&c.report.min_curvature),
            c.canonical
        );
    }
    if halin_only {
        let _ = writeln!(out, "halin-only {}", result.halin_only().count());
    }
    let _ = writeln!(out, "pruned {}", result.pruned_count);
    out
}
