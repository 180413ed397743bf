#![no_main]

use halin_curvature::graph::graph6::{decode_edges, encode_edges, from_graph6, to_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok((n, edges)) = decode_edges(data) {
        // a decoded record re-encodes to something that decodes the same
        let again = decode_edges(encode_edges(n, edges.iter().copied()).as_bytes()).unwrap();
        assert_eq!(again, (n, edges));
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = from_graph6(text) {
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
});
