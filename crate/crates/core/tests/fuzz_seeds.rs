//! Runs every checked-in fuzz seed through its parser, so the seeds stay
//! meaningful without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use halin_curvature::curvature::{parse_certificate, write_certificate};
use halin_curvature::graph::edgelist::{parse_edge_list, write_edge_list};
use halin_curvature::graph::graph6::{decode_edges, encode_edges};
use halin_curvature::halin::{build_family, parse_family_spec};

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn graph6_seeds() {
    let mut accepted = 0;
    for (_, data) in seeds("graph6") {
        if let Ok((n, edges)) = decode_edges(&data) {
            accepted += 1;
            assert_eq!(decode_edges(encode_edges(n, edges.iter().copied()).as_bytes()).unwrap(), (n, edges));
        }
    }
    assert!(accepted >= 4);
}

#[test]
fn edgelist_seeds() {
    for (name, data) in seeds("edgelist") {
        let text = String::from_utf8(data).unwrap();
        match parse_edge_list(&text) {
            Ok(g) => assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g),
            Err(_) => assert_eq!(name, "disconnected"),
        }
    }
}

#[test]
fn certificate_seeds() {
    for (name, data) in seeds("certificate") {
        let cert = parse_certificate(std::str::from_utf8(&data).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_certificate(&write_certificate(&cert)).unwrap(), cert);
    }
}

#[test]
fn family_spec_seeds() {
    for (name, data) in seeds("family_spec") {
        let text = String::from_utf8(data).unwrap();
        match parse_family_spec(&text) {
            Ok((family, n)) => assert_eq!(build_family(family, n).unwrap().n(), n),
            Err(_) => assert_eq!(name, "below_range"),
        }
    }
}
