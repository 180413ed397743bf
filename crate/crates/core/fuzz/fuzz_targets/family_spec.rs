#![no_main]

use halin_curvature::halin::{build_family, parse_family_spec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((family, n)) = parse_family_spec(text) {
        if n <= 64 {
            let h = build_family(family, n).unwrap();
            assert_eq!(h.n(), n);
        }
    }
});
