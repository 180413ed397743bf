#![no_main]

use halin_curvature::graph::edgelist::{parse_edge_list, parse_edges, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_edges(text);
    if let Ok(g) = parse_edge_list(text) {
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
});
