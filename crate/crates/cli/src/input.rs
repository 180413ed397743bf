use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;

use halin_curvature::graph::edgelist::parse_edge_list;
use halin_curvature::graph::graph6::from_graph6;
use halin_curvature::halin::{build_family, parse_family_spec};
use halin_curvature::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Family spec if it parses as one, otherwise a file sniffed by content
    Auto,
    Edgelist,
    Graph6,
    Family,
}

/// An edge list starts (after comments) with a line of two integers; a
/// graph6 string never contains whitespace between its bytes.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
        })
}

fn parse_graph6_text(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    Ok(from_graph6(line)?)
}

pub fn load_graph(input: &str, format: InputFormat) -> Result<Graph> {
    let is_file = input != "-" && Path::new(input).exists();
    if format == InputFormat::Family || (format == InputFormat::Auto && !is_file && input != "-") {
        let (family, n) = parse_family_spec(input)
            .with_context(|| format!("`{input}` is neither a file nor a family spec"))?;
        return Ok(build_family(family, n)?.graph);
    }
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let edge_list = match format {
        InputFormat::Edgelist => true,
        InputFormat::Graph6 => false,
        _ => looks_like_edge_list(&text),
    };
    if edge_list {
        parse_edge_list(&text).with_context(|| format!("parsing edge list {input}"))
    } else {
        parse_graph6_text(&text).with_context(|| format!("parsing graph6 {input}"))
    }
}
