#![no_main]

use halin_curvature::curvature::{
    check_coupling_certificate, check_lipschitz_certificate, parse_certificate, write_certificate, Certificate,
};
use halin_curvature::graph::named;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(cert) = parse_certificate(text) else { return };
    assert_eq!(parse_certificate(&write_certificate(&cert)).unwrap(), cert);
    // checking against a small fixed graph must reject, never panic
    let g = named::wheel(6);
    match &cert {
        Certificate::Lipschitz(c) => {
            let _ = check_lipschitz_certificate(&g, c);
        }
        Certificate::Coupling(c) => {
            let _ = check_coupling_certificate(&g, c);
        }
    }
});
