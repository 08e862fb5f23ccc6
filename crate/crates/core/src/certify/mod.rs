//! Machine-checked certificates for the algebraic facts behind the
//! region analysis: exact polynomial arithmetic over ℚ and ℚ(√2),
//! Sturm-sequence root counting, and interval branch-and-bound sign
//! proofs for the two contraction kernels.
//!
//! Every certificate is identified by a stable claim id and serializes
//! to JSON (claim, status, witness intervals, box counts, wall time), so
//! the command-line runner can emit a machine-readable report. A claim
//! either proves exactly (field arithmetic, Sturm counts) or by validated
//! rational interval arithmetic with outward rounding; nothing in this
//! module trusts floating point.

pub mod branch_bound;
pub mod claims;
pub mod functions;

use std::time::Instant;

use serde::Serialize;

pub use branch_bound::{
    certify_sign, certify_sign_on_box, eta_rate_box, half_rate_box, BnbOutcome, BnbReport,
    IntervalBox, KernelFn, SignTarget, BOX_BUDGET,
};

/// Outcome of a certificate run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertStatus {
    /// The claim holds (exact identity, root count, or enclosure check).
    Proved,
    /// The claim holds with strict negativity on the stated box.
    ProvedNegative,
    /// The claim holds with nonpositivity on the stated box.
    ProvedNonpositive,
    /// Refinement ran out of budget before settling every sub-box.
    Inconclusive,
    /// The claim is contradicted or a precondition failed.
    Failed,
}

impl CertStatus {
    /// True for every proved variant.
    pub fn is_proved(self) -> bool {
        matches!(
            self,
            CertStatus::Proved | CertStatus::ProvedNegative | CertStatus::ProvedNonpositive
        )
    }
}

/// A named interval attached to a certificate, reported in nearest-double
/// form for readability (decisions are never made on these).
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub label: String,
    pub lo: f64,
    pub hi: f64,
}

/// One verified (or refuted) claim, serializable as a JSON report.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    /// Stable identifier, e.g. `"quintic-root"`.
    pub claim: &'static str,
    /// Human-readable statement of what was checked.
    pub statement: &'static str,
    pub status: CertStatus,
    /// Key quantities with their certified bounds.
    pub witnesses: Vec<Witness>,
    /// Total boxes examined by branch-and-bound (0 for exact claims).
    pub boxes_processed: u64,
    /// Deepest bisection level reached.
    pub max_depth: u32,
    /// Wall-clock time spent on this claim, in milliseconds.
    pub wall_ms: f64,
    /// Free-form remarks: margins, exact identities used, caveats.
    pub notes: Vec<String>,
}

/// The full catalog of claim ids, in the order `run_all` executes them.
pub fn claim_ids() -> &'static [&'static str] {
    &[
        "quintic-root",
        "sextic-factorization",
        "quartic-factorization",
        "half-kernel-box",
        "half-kernel-discriminant-origin",
        "half-kernel-discriminant-octic",
        "eta-kernel-box",
        "eta-kernel-sample",
        "eta-octic-roots",
        "g-minimum",
        "upsilon-chain",
        "p2-entry-geometry",
    ]
}

/// Runs a single claim by id, stamping the wall time. Returns `None` for
/// an unknown id.
pub fn run_claim(id: &str) -> Option<Certificate> {
    let start = Instant::now();
    let mut cert = match id {
        "quintic-root" => claims::claim_quintic_root(),
        "sextic-factorization" => claims::claim_sextic_factorization(),
        "quartic-factorization" => claims::claim_quartic_factorization(),
        "half-kernel-box" => claims::claim_half_kernel_box(),
        "half-kernel-discriminant-origin" => claims::claim_half_kernel_discriminant_origin(),
        "half-kernel-discriminant-octic" => claims::claim_half_kernel_discriminant_octic(),
        "eta-kernel-box" => claims::claim_eta_kernel_box(),
        "eta-kernel-sample" => claims::claim_eta_kernel_sample(),
        "eta-octic-roots" => claims::claim_eta_octic_roots(),
        "g-minimum" => claims::claim_g_minimum(),
        "upsilon-chain" => claims::claim_upsilon_chain(),
        "p2-entry-geometry" => claims::claim_p2_entry_geometry(),
        _ => return None,
    };
    cert.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    Some(cert)
}

/// Runs the whole catalog in order.
pub fn run_all() -> Vec<Certificate> {
    claim_ids()
        .iter()
        .map(|id| run_claim(id).expect("catalog ids are valid"))
        .collect()
}
