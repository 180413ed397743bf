//! Curvature certificates and their JSON form.
//!
//! A Lipschitz certificate is an integer function `f` on `N[x] ∪ N[y]` that
//! is 1-Lipschitz for the graph distance with `f(y) - f(x) = 1`; its value
//! `Δf(x) - Δf(y)` bounds `κ_LLY(x, y)` from above. A coupling certificate is
//! a transport plan between `m_x^α` and `m_y^α` with `α ≥ 1/(max(d_x,d_y)+1)`;
//! `(1 - cost) / (1 - α)` bounds `κ_LLY(x, y)` from below.
//!
//! ```json
//! {"edge": [0, 1], "f": {"0": 0, "1": 1, "2": -1}}
//! {"edge": [0, 1], "alpha": "1/4", "pi": [[0, 0, "1/4"], [2, 1, "1/16"]]}
//! ```

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{laplacian_difference, lly_alpha};
use crate::graph::{Graph, GraphError};
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};
use crate::transport::{coupling_cost, vertex_measure, Coupling, TransportError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Transport(#[from] TransportError),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("invalid certificate JSON: {0}")]
    Json(String),
    #[error("certificate must contain exactly one of `f` (with no `alpha`) or `pi` (with `alpha`)")]
    Shape,
    #[error("`f` key `{0}` is not a vertex id")]
    BadVertexKey(String),
    #[error("`f` is missing vertex {0} of N[x] ∪ N[y]")]
    MissingVertex(usize),
    #[error("`f` is defined on vertex {0} outside N[x] ∪ N[y]")]
    ExtraVertex(usize),
    #[error("Lipschitz violation: |f({u}) - f({v})| = |{fu} - {fv}| exceeds d({u},{v}) = {dist}")]
    LipschitzViolation {
        u: usize,
        v: usize,
        fu: i64,
        fv: i64,
        dist: u32,
    },
    #[error("f(y) - f(x) = {0}, expected 1")]
    WrongIncrement(i64),
    #[error("alpha {alpha} is below the admissible minimum {min}")]
    AlphaTooSmall { alpha: Box<Rational>, min: Box<Rational> },
    #[error("alpha {0} must be strictly below 1")]
    AlphaTooLarge(Rational),
}

/// Integer 1-Lipschitz test function for the oriented edge `x → y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipschitzCertificate {
    pub x: usize,
    pub y: usize,
    pub f: BTreeMap<usize, i64>,
}

/// Transport plan from `m_x^α` to `m_y^α`, given as raw entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingCertificate {
    pub x: usize,
    pub y: usize,
    pub alpha: Rational,
    pub pi: Vec<(usize, usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Lipschitz(LipschitzCertificate),
    Coupling(CouplingCertificate),
}

/// Validates the certificate and returns `Δf(x) - Δf(y)`, an upper bound on
/// `κ_LLY(x, y)`.
pub fn check_lipschitz_certificate(
    g: &Graph,
    cert: &LipschitzCertificate,
) -> Result<Rational, CertificateError> {
    let (x, y) = (cert.x, cert.y);
    let e = g.edge(x, y)?;
    let domain = g.edge_neighborhood(e);
    if let Some(&v) = domain.iter().find(|v| !cert.f.contains_key(v)) {
        return Err(CertificateError::MissingVertex(v));
    }
    if let Some(&v) = cert.f.keys().find(|v| domain.binary_search(v).is_err()) {
        return Err(CertificateError::ExtraVertex(v));
    }
    for (i, &u) in domain.iter().enumerate() {
        for &v in &domain[i + 1..] {
            let (fu, fv) = (cert.f[&u], cert.f[&v]);
            let dist = g.dist(u, v);
            if fu.abs_diff(fv) > u64::from(dist) {
                return Err(CertificateError::LipschitzViolation { u, v, fu, fv, dist });
            }
        }
    }
    let inc = cert.f[&y] - cert.f[&x];
    if inc != 1 {
        return Err(CertificateError::WrongIncrement(inc));
    }
    Ok(laplacian_difference(g, x, y, &cert.f))
}

/// Validates the coupling and returns `(1 - cost) / (1 - α)`, a lower bound on
/// `κ_LLY(x, y)`.
pub fn check_coupling_certificate(
    g: &Graph,
    cert: &CouplingCertificate,
) -> Result<Rational, CertificateError> {
    let e = g.edge(cert.x, cert.y)?;
    let min = lly_alpha(g, e);
    if cert.alpha < min {
        return Err(CertificateError::AlphaTooSmall {
            alpha: Box::new(cert.alpha.clone()),
            min: Box::new(min),
        });
    }
    if cert.alpha >= Rational::one() {
        return Err(CertificateError::AlphaTooLarge(cert.alpha.clone()));
    }
    let source = vertex_measure(g, cert.x, &cert.alpha)?;
    let target = vertex_measure(g, cert.y, &cert.alpha)?;
    let coupling = Coupling::new(
        source,
        target,
        cert.pi.iter().map(|(u, v, m)| ((*u, *v), m.clone())),
    )?;
    let cost = coupling_cost(g, &coupling)?;
    Ok((Rational::one() - cost) / (Rational::one() - &cert.alpha))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    edge: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f: Option<BTreeMap<String, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pi: Option<Vec<(usize, usize, String)>>,
}

pub fn parse_certificate(input: &str) -> Result<Certificate, CertificateError> {
    let raw: RawCertificate =
        serde_json::from_str(input).map_err(|e| CertificateError::Json(e.to_string()))?;
    let [x, y] = raw.edge;
    match (raw.alpha, raw.f, raw.pi) {
        (None, Some(f), None) => {
            let mut values = BTreeMap::new();
            for (k, v) in f {
                let key = k.trim();
                let digits = !key.is_empty() && key.bytes().all(|b| b.is_ascii_digit());
                match key.parse::<usize>() {
                    // "1" and "01" name the same vertex
                    Ok(id) if digits && !values.contains_key(&id) => {
                        values.insert(id, v);
                    }
                    _ => return Err(CertificateError::BadVertexKey(k)),
                }
            }
            let f = values;
            Ok(Certificate::Lipschitz(LipschitzCertificate { x, y, f }))
        }
        (Some(alpha), None, Some(pi)) => {
            let alpha = parse_rational(&alpha)?;
            let pi = pi
                .into_iter()
                .map(|(u, v, m)| Ok((u, v, parse_rational(&m)?)))
                .collect::<Result<_, CertificateError>>()?;
            Ok(Certificate::Coupling(CouplingCertificate { x, y, alpha, pi }))
        }
        _ => Err(CertificateError::Shape),
    }
}

pub fn write_certificate(cert: &Certificate) -> String {
    let raw = match cert {
        Certificate::Lipschitz(c) => RawCertificate {
            edge: [c.x, c.y],
            alpha: None,
            f: Some(c.f.iter().map(|(k, v)| (k.to_string(), *v)).collect()),
            pi: None,
        },
        Certificate::Coupling(c) => RawCertificate {
            edge: [c.x, c.y],
            alpha: Some(format_rational(&c.alpha)),
            f: None,
            pi: Some(
                c.pi.iter()
                    .map(|(u, v, m)| (*u, *v, format_rational(m)))
                    .collect(),
            ),
        },
    };
    serde_json::to_string(&raw).expect("certificate serializes")
}
