//! Output envelope and report types for the command-line front end.

use serde::{Deserialize, Serialize};

/// Envelope wrapping every machine-readable result: command echo, tool
/// version, pass flag, wall time, and the payload. Orderings inside
/// payloads are sorted, so output is deterministic for fixed inputs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate<T> {
    pub command: String,
    pub version: String,
    pub pass: bool,
    pub timing_ms: u128,
    pub result: T,
}

impl<T> Certificate<T> {
    pub fn new(command: String, pass: bool, timing_ms: u128, result: T) -> Self {
        Certificate {
            command,
            version: env!("CARGO_PKG_VERSION").to_string(),
            pass,
            timing_ms,
            result,
        }
    }
}

/// Numeric-versus-exact cross-check summary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub digits: u32,
    pub orders_exact: Vec<u32>,
    pub max_mismatch_log10: Vec<(u32, i64)>,
    pub higher_order_counts: Vec<(u32, usize)>,
    pub s3_closed: bool,
    pub e4_residual_log10: i64,
    pub pass: bool,
}

/// Combined Hesse-stage certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HesseReport {
    pub dual_hesse: halphen::hesse::DualHesseCert,
    pub flexes: halphen::hesse::FlexCert,
    pub polars: halphen::hesse::PolarCert,
    pub pencils: halphen::hesse::PencilCert,
    pub pass: bool,
}

/// Abelian-stage certificate with the seeded spot-check tally.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AbelianReport {
    pub certificate: halphen::abelian::AbelianCert,
    pub seeded_psi_checks: usize,
    pub pass: bool,
}
