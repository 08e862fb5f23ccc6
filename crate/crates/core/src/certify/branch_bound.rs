//! Adaptive interval branch-and-bound: prove that a function keeps one
//! sign on a box by bisecting until every sub-box's enclosure settles.
//!
//! The engine is generic over the evaluator so one implementation serves
//! the two-variable kernels and the one-variable octics alike. Splitting
//! always halves the widest dimension, endpoints stay dyadic when the
//! initial box is dyadic, and results are independent of traversal order
//! (the work list is a depth-first stack, deterministic by construction).

use serde::Serialize;

use crate::exact::field::{rat, rational_to_f64, Rational};
use crate::exact::interval::{alpha_enclosure, RatInterval};

use super::functions::{
    eta_kernel_disc_enclosure, eta_kernel_rho_coeffs, half_kernel_disc_enclosure,
    half_kernel_rho_coeffs, quadratic_in_rho,
};
use crate::exact::interval::eta_enclosure;

/// Which of the two contraction kernels a box refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KernelFn {
    /// (2w² − 1)ρ² − (4w² − √2(w+c))ρ + 2 − 2√2c — the ½-rate inequality.
    HalfRate,
    /// (ηw² − 1)ρ² − (2ηw² − √2(w+c))ρ − (√2c − 3/2)η − 1 — the γ-rate
    /// inequality via η = 1/γ.
    EtaRate,
}

/// A rectangular domain (ρ × w) attached to one kernel.
#[derive(Debug, Clone)]
pub struct IntervalBox {
    pub kernel: KernelFn,
    pub rho: RatInterval,
    pub w: RatInterval,
}

/// What sign the certificate must establish on every sub-box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignTarget {
    StrictlyNegative,
    NonPositive,
    StrictlyPositive,
}

impl SignTarget {
    fn accepts(self, enclosure: &RatInterval) -> bool {
        match self {
            SignTarget::StrictlyNegative => enclosure.is_strictly_negative(),
            SignTarget::NonPositive => enclosure.is_nonpositive(),
            SignTarget::StrictlyPositive => enclosure.is_strictly_positive(),
        }
    }
}

/// Box budget: refinement aborts as inconclusive beyond this many boxes.
pub const BOX_BUDGET: u64 = 1_000_000;

/// Counters describing one finished (or aborted) refinement.
#[derive(Debug, Clone, Serialize)]
pub struct BnbReport {
    pub boxes_processed: u64,
    pub max_depth: u32,
    /// The least favorable accepted enclosure bound: for negative targets
    /// the largest upper endpoint seen, i.e. the certified margin to zero.
    pub worst_bound: f64,
}

/// Outcome of a sign-certification run.
#[derive(Debug, Clone, Serialize)]
pub enum BnbOutcome {
    Proved(BnbReport),
    /// A sub-box whose enclosure still straddles the target after the
    /// budget ran out (its corners are reported for diagnosis).
    Inconclusive {
        report: BnbReport,
        offending: Vec<(f64, f64)>,
    },
}

impl BnbOutcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, BnbOutcome::Proved(_))
    }

    pub fn report(&self) -> &BnbReport {
        match self {
            BnbOutcome::Proved(r) => r,
            BnbOutcome::Inconclusive { report, .. } => report,
        }
    }
}

/// Proves `target` for `eval` everywhere on the product of `dims` by
/// exhaustive bisection, or gives up after `budget` boxes.
///
/// `eval` must return an interval containing every value of the function
/// on the given sub-box; soundness is inherited from that contract.
pub fn certify_sign<E>(
    eval: E,
    dims: &[RatInterval],
    target: SignTarget,
    budget: u64,
) -> BnbOutcome
where
    E: Fn(&[RatInterval]) -> RatInterval,
{
    let mut stack: Vec<(Vec<RatInterval>, u32)> = vec![(dims.to_vec(), 0)];
    let mut report = BnbReport {
        boxes_processed: 0,
        max_depth: 0,
        worst_bound: f64::NEG_INFINITY,
    };

    while let Some((cell, depth)) = stack.pop() {
        report.boxes_processed += 1;
        report.max_depth = report.max_depth.max(depth);
        if report.boxes_processed > budget {
            return BnbOutcome::Inconclusive {
                report,
                offending: cell.iter().map(|d| d.approx_f64()).collect(),
            };
        }

        let enclosure = eval(&cell);
        if target.accepts(&enclosure) {
            let (lo, hi) = enclosure.approx_f64();
            let bound = match target {
                SignTarget::StrictlyNegative | SignTarget::NonPositive => hi,
                SignTarget::StrictlyPositive => -lo,
            };
            report.worst_bound = report.worst_bound.max(bound);
            continue;
        }

        // split the widest dimension; a point box that still fails is a
        // genuine sign violation and must surface as inconclusive
        let widest = cell
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.width().cmp(&b.width()))
            .map(|(i, _)| i)
            .expect("boxes have at least one dimension");
        if cell[widest].width() == rat(0, 1) {
            return BnbOutcome::Inconclusive {
                report,
                offending: cell.iter().map(|d| d.approx_f64()).collect(),
            };
        }
        let (left, right) = cell[widest].split();
        let mut left_cell = cell.clone();
        left_cell[widest] = left;
        let mut right_cell = cell;
        right_cell[widest] = right;
        stack.push((right_cell, depth + 1));
        stack.push((left_cell, depth + 1));
    }

    BnbOutcome::Proved(report)
}

/// Working precision for outward rounding inside kernel enclosures. The
/// tightest quantity certified is the half-rate discriminant near its
/// fourth-order zero, around 10⁻¹⁵ at the default shrink distance, so
/// 2⁻⁹⁶ rounding leaves ten orders of magnitude to spare.
const KERNEL_BITS: u32 = 96;

/// Caps an enclosure's upper end by the parabola vertex value
/// disc/(−4A), valid whenever A < 0: a concave parabola's global maximum
/// over all real ρ — a fortiori over the ρ box — is its vertex value.
/// When the leading coefficient's sign is not resolved negative the
/// plain enclosure is returned unchanged, which stays sound on any box.
fn sharpen_with_vertex<D>(
    naive: RatInterval,
    a: &RatInterval,
    w: &RatInterval,
    disc: D,
) -> RatInterval
where
    D: Fn(&RatInterval) -> RatInterval,
{
    if !a.is_strictly_negative() {
        return naive;
    }
    let vertex = disc(w).div(&a.scale(&rat(-4, 1)));
    let hi = std::cmp::min(naive.hi(), vertex.hi()).clone();
    RatInterval::new(naive.lo().clone(), hi)
}

/// Certifies the requested sign of one kernel on one box.
///
/// Both kernels are concave parabolas in ρ throughout their domains (the
/// leading coefficient 2w² − 1, resp. ηw² − 1, is negative there), so
/// the supremum over ρ is bounded by the vertex value −disc/(4A), with
/// the discriminant enclosed in mean-value form. Bisection therefore
/// only ever refines the w axis; ρ is handled analytically on every
/// cell. This matters because both kernels vanish to high order along
/// the w = √2/2 face, where coordinate-wise bisection would need
/// cubically small boxes.
pub fn certify_sign_on_box(bx: &IntervalBox, target: SignTarget, budget: u64) -> BnbOutcome {
    let rho = bx.rho.clone();
    match bx.kernel {
        KernelFn::HalfRate => certify_sign(
            move |cell: &[RatInterval]| {
                let (a, b, c) = half_kernel_rho_coeffs(&cell[0], KERNEL_BITS);
                let naive = quadratic_in_rho(&a, &b, &c, &rho);
                sharpen_with_vertex(naive, &a, &cell[0], |w| {
                    half_kernel_disc_enclosure(w, KERNEL_BITS)
                })
            },
            &[bx.w.clone()],
            target,
            budget,
        ),
        KernelFn::EtaRate => {
            let eta = eta_enclosure(KERNEL_BITS);
            certify_sign(
                move |cell: &[RatInterval]| {
                    let (a, b, c) = eta_kernel_rho_coeffs(&cell[0], &eta, KERNEL_BITS);
                    let naive = quadratic_in_rho(&a, &b, &c, &rho);
                    sharpen_with_vertex(naive, &a, &cell[0], |w| {
                        eta_kernel_disc_enclosure(w, &eta, KERNEL_BITS)
                    })
                },
                &[bx.w.clone()],
                target,
                budget,
            )
        }
    }
}

/// The half-rate kernel's standard domain: ρ ∈ [0, 1], w ∈ [0, W] where
/// W is a dyadic upper bound of √2/2 − δ chosen ≥ the true value (so the
/// certified region covers the stated one) yet still < √2/2.
pub fn half_rate_box(delta: &Rational) -> IntervalBox {
    let alpha = alpha_enclosure(80);
    let w_hi = alpha.hi() - delta;
    assert!(w_hi > rat(0, 1), "delta too large");
    IntervalBox {
        kernel: KernelFn::HalfRate,
        rho: RatInterval::new(rat(0, 1), rat(1, 1)),
        w: RatInterval::new(rat(0, 1), w_hi),
    }
}

/// The eta-rate kernel's standard domain: ρ ∈ [δ, 1], w ∈ [W, 1 − δ]
/// where W is a dyadic lower bound of √2/2 + δ (again covering the
/// stated region from outside).
pub fn eta_rate_box(delta: &Rational) -> IntervalBox {
    let alpha = alpha_enclosure(80);
    let w_lo = alpha.lo() + delta;
    let w_hi = rat(1, 1) - delta;
    assert!(w_lo < w_hi, "delta too large");
    IntervalBox {
        kernel: KernelFn::EtaRate,
        rho: RatInterval::new(delta.clone(), rat(1, 1)),
        w: RatInterval::new(w_lo, w_hi),
    }
}

/// Reports an interval's endpoints for witnesses (nearest-double).
pub fn witness_bounds(iv: &RatInterval) -> (f64, f64) {
    (rational_to_f64(iv.lo()), rational_to_f64(iv.hi()))
}
