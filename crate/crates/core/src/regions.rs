//! Partition of the plane into the sectors the convergence analysis
//! tracks, with per-sector contraction factors and the step-level
//! transition contracts. The right half-plane x > 0 splits into seven
//! sectors P0–P6 according to the sign of y, the height of y relative to
//! α, the order of x and y, and the radius relative to the unit circle;
//! x < 0 and x = 0 get their own labels since the dynamics there reduce
//! to the mirrored and the degenerate problem.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dr::{alpha_is_certified, dist_sq_to_solution, dr_step_2d, DrError, SolutionSign, State2D, ALPHA};

/// Which sector of the partition a point occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    /// x > 0, y ≤ 0: below the axis; orbits here eventually surface.
    P0,
    /// Inside the closed unit disk with 0 < y ≤ x.
    P1,
    /// Outside the unit disk with 0 < y ≤ α.
    P2,
    /// α < y ≤ x (automatically outside the open unit disk).
    P3,
    /// Outside the unit disk with 0 < x < y.
    P4,
    /// Inside the closed unit disk with y > α.
    P5,
    /// 0 < x < y ≤ α (automatically inside the closed unit disk).
    P6,
    /// x < 0: the mirrored problem.
    LeftHalf,
    /// x = 0: the line-reflection fixed axis, invariant and degenerate.
    SingularAxis,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 9] = [
        RegionLabel::P0,
        RegionLabel::P1,
        RegionLabel::P2,
        RegionLabel::P3,
        RegionLabel::P4,
        RegionLabel::P5,
        RegionLabel::P6,
        RegionLabel::LeftHalf,
        RegionLabel::SingularAxis,
    ];

    /// Short text form used in logs and CSV cells.
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::P0 => "P0",
            RegionLabel::P1 => "P1",
            RegionLabel::P2 => "P2",
            RegionLabel::P3 => "P3",
            RegionLabel::P4 => "P4",
            RegionLabel::P5 => "P5",
            RegionLabel::P6 => "P6",
            RegionLabel::LeftHalf => "LeftHalf",
            RegionLabel::SingularAxis => "SingularAxis",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The named constants of the analysis, as doubles.
///
/// * `alpha` — height of the constraint line, 1/√2.
/// * `epsilon` — x-threshold (1 − 2^(−1/3))^(3/2) ≈ 0.0937 below which the
///   slow sector P6 is left untracked.
/// * `gamma` — worst-case squared-distance growth through P5∪P6,
///   5/2 − √2 + ½·√(29 − 20√2) ≈ 1.50879.
/// * `eta` — 1/γ, the contraction the η-family inequality certifies.
/// * `delta_cap` — α − √γ/2, the vertical margin in the return argument.
/// * `upsilon` — δ/√(α² + δ²), its normalized slope.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionConstants {
    pub alpha: f64,
    pub epsilon: f64,
    pub gamma: f64,
    pub eta: f64,
    pub delta_cap: f64,
    pub upsilon: f64,
}

impl RegionConstants {
    /// Constants for the certified configuration α = 1/√2.
    pub fn certified() -> Self {
        let alpha = FRAC_1_SQRT_2;
        let gamma = 2.5 - SQRT_2 + 0.5 * (29.0 - 20.0 * SQRT_2).sqrt();
        let eta = 1.0 / gamma;
        let t = 1.0 - 0.5_f64.cbrt();
        let epsilon = (t * t * t).sqrt();
        let delta_cap = alpha - gamma.sqrt() / 2.0;
        let upsilon = delta_cap / (alpha * alpha + delta_cap * delta_cap).sqrt();
        Self {
            alpha,
            epsilon,
            gamma,
            eta,
            delta_cap,
            upsilon,
        }
    }

    /// The twice-normalized slope Υ/√(α² + Υ²); the return argument needs
    /// it above 0.14.
    pub fn upsilon_chain(&self) -> f64 {
        self.upsilon / (self.alpha * self.alpha + self.upsilon * self.upsilon).sqrt()
    }
}

/// Ways the contract layer can refuse or give up.
#[derive(Debug, Error, PartialEq)]
pub enum RegionError {
    /// The transition table and contraction factors are only proved for
    /// α = 1/√2; any other line height must not silently reuse them.
    #[error("transition contracts hold only for alpha = 1/sqrt(2), not alpha = {alpha}")]
    UncertifiedRegime { alpha: f64 },
    /// An orbit exhausted its iteration budget before re-entering P1 —
    /// reported as data (a would-be counterexample), not a crash.
    #[error("orbit did not return to P1 within {cap} steps")]
    BudgetExceeded { cap: usize },
    #[error(transparent)]
    Step(#[from] DrError),
}

/// One audited iteration step: the labelled endpoints, the squared-distance
/// quotient toward (α, α), and whether the step respects the transition
/// table and the contraction bound for the sector it left.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub from: State2D,
    pub from_label: RegionLabel,
    pub to: State2D,
    pub to_label: RegionLabel,
    /// dist²(to)/dist²(from); `None` when the step starts at the solution.
    pub ratio: Option<f64>,
    pub allowed: bool,
    pub bound_satisfied: bool,
}

/// Result of following one orbit from P1 until it first re-enters P1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReturnMapAudit {
    /// Index of the first return, m ≥ 1.
    pub m: usize,
    /// max over 1 ≤ k ≤ m of dist²(s_k)/dist²(s₀), or 0 for the
    /// stationary orbit at the solution itself.
    pub ratio: f64,
}

/// Assigns the unique sector whose defining predicate holds.
///
/// The predicates partition {x > 0} because the diagonal cases excluded by
/// one sector are forced into a neighbor by 2α² = 1: e.g. x ≥ y > α makes
/// ρ² > 1, so the inside-the-disk sector above α needs no x/y comparison.
pub fn classify(x: f64, y: f64) -> RegionLabel {
    debug_assert!(x.is_finite() && y.is_finite(), "classify needs finite coordinates");
    if x < 0.0 {
        return RegionLabel::LeftHalf;
    }
    if x == 0.0 {
        return RegionLabel::SingularAxis;
    }
    if y <= 0.0 {
        return RegionLabel::P0;
    }
    if x == ALPHA && y == ALPHA {
        // The fixed point itself. Its floating representative lands one
        // rounding outside the unit circle (2·ALPHA² > 1 exactly), yet it
        // is the limit every contraction statement measures toward, so it
        // belongs with the inside sector. No other point is adjusted.
        return RegionLabel::P1;
    }
    let rho_sq = x * x + y * y;
    if y > ALPHA {
        if rho_sq <= 1.0 {
            RegionLabel::P5
        } else if x < y {
            RegionLabel::P4
        } else {
            RegionLabel::P3
        }
    } else {
        // 0 < y ≤ α
        if x < y {
            RegionLabel::P6
        } else if rho_sq <= 1.0 {
            RegionLabel::P1
        } else {
            RegionLabel::P2
        }
    }
}

/// The proved per-step bound on dist²(next)/dist²(current) toward (α, α)
/// while in the given sector, or `None` where no bound is claimed.
pub fn contraction_factor(label: RegionLabel) -> Option<f64> {
    match label {
        RegionLabel::P1 | RegionLabel::P2 | RegionLabel::P3 => Some(0.5),
        RegionLabel::P4 => Some(1.0),
        RegionLabel::P5 | RegionLabel::P6 => Some(RegionConstants::certified().gamma),
        RegionLabel::P0 | RegionLabel::LeftHalf | RegionLabel::SingularAxis => None,
    }
}

/// Where one step may land from each sector, under α = 1/√2.
///
/// P0 is unrestricted (any right-half sector is reachable); the P6 row
/// assumes x ≥ ε — below the threshold the analysis makes no claim and
/// callers must treat the step as unrestricted. The x < 0 and x = 0 rows
/// follow from mirror symmetry and axis invariance of the iteration.
pub fn allowed_transitions(
    label: RegionLabel,
    alpha: f64,
) -> Result<&'static [RegionLabel], RegionError> {
    if !alpha_is_certified(alpha) {
        return Err(RegionError::UncertifiedRegime { alpha });
    }
    use RegionLabel::*;
    Ok(match label {
        P0 => &[P0, P1, P2, P3, P4, P5, P6],
        P1 => &[P1, P2],
        P2 => &[P3, P4],
        P3 => &[P4],
        P4 => &[P4, P5],
        P5 => &[P6],
        P6 => &[P6, P1, P2],
        LeftHalf => &[LeftHalf],
        SingularAxis => &[SingularAxis],
    })
}

/// Additive slack granted on contraction ratios to absorb double rounding.
pub const RATIO_TOLERANCE: f64 = 1e-12;

/// Applies one iteration step and audits it against the sector contracts.
///
/// `allowed` is membership of the landing label in the row for the
/// starting label, except that a start in P6 with x < ε is unrestricted.
/// `bound_satisfied` compares the squared-distance ratio against the
/// sector's factor plus [`RATIO_TOLERANCE`]; steps starting at the
/// solution (zero distance) satisfy every bound by convention.
pub fn check_step(s: State2D, alpha: f64) -> Result<StepReport, RegionError> {
    if !alpha_is_certified(alpha) {
        return Err(RegionError::UncertifiedRegime { alpha });
    }
    let from_label = classify(s.x, s.y);
    let to = dr_step_2d(s, alpha)?;
    let to_label = classify(to.x, to.y);

    let d_from = dist_sq_to_solution(s, SolutionSign::Plus);
    let ratio = if d_from > 0.0 {
        Some(dist_sq_to_solution(to, SolutionSign::Plus) / d_from)
    } else {
        None
    };

    let below_threshold =
        from_label == RegionLabel::P6 && s.x < RegionConstants::certified().epsilon;
    let allowed = below_threshold
        || allowed_transitions(from_label, alpha)?.contains(&to_label);

    let bound_satisfied = match (contraction_factor(from_label), ratio) {
        (Some(factor), Some(r)) => r <= factor + RATIO_TOLERANCE,
        _ => true,
    };

    Ok(StepReport {
        from: s,
        from_label,
        to,
        to_label,
        ratio,
        allowed,
        bound_satisfied,
    })
}

/// Default iteration budget for [`return_map_audit`].
pub const RETURN_MAP_CAP: usize = 10_000;

/// Follows the orbit of a point of P1 until it first re-enters P1 and
/// reports the worst intermediate squared-distance ratio; the analysis
/// promises this stays at or below γ³/4 ≈ 0.8587 < 0.86.
///
/// Panics if the starting point is not in P1 (caller contract); returns
/// [`RegionError::BudgetExceeded`] if the orbit fails to return within the
/// cap, which would contradict the convergence argument and is therefore
/// surfaced as an auditable outcome.
pub fn return_map_audit(s0: State2D, alpha: f64) -> Result<ReturnMapAudit, RegionError> {
    return_map_audit_with_cap(s0, alpha, RETURN_MAP_CAP)
}

pub fn return_map_audit_with_cap(
    s0: State2D,
    alpha: f64,
    cap: usize,
) -> Result<ReturnMapAudit, RegionError> {
    if !alpha_is_certified(alpha) {
        return Err(RegionError::UncertifiedRegime { alpha });
    }
    assert_eq!(
        classify(s0.x, s0.y),
        RegionLabel::P1,
        "return-map audits start in P1"
    );
    let d0 = dist_sq_to_solution(s0, SolutionSign::Plus);
    let mut s = s0;
    let mut worst: f64 = 0.0;
    for k in 1..=cap {
        s = dr_step_2d(s, alpha)?;
        if d0 > 0.0 {
            worst = worst.max(dist_sq_to_solution(s, SolutionSign::Plus) / d0);
        }
        if classify(s.x, s.y) == RegionLabel::P1 {
            return Ok(ReturnMapAudit { m: k, ratio: worst });
        }
    }
    Err(RegionError::BudgetExceeded { cap })
}

/// The slow-sector growth margin g(θ) = α + ε·tanθ − sinθ on (π/4, π/2):
/// nonnegative with a single zero, so x-coordinates above ε keep growing
/// until the orbit leaves the sector.
pub fn g_theta(theta: f64) -> f64 {
    let eps = RegionConstants::certified().epsilon;
    ALPHA + eps * theta.tan() - theta.sin()
}

/// The angle where [`g_theta`] attains its minimum of zero:
/// arcsin(2^(−1/6)).
pub fn g_minimizer() -> f64 {
    0.5_f64.powf(1.0 / 6.0).asin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// The printed sector predicates, transliterated directly; the
    /// classifier must agree with the unique one that holds.
    fn holding_predicates(x: f64, y: f64) -> Vec<RegionLabel> {
        let rho_sq = x * x + y * y;
        let mut out = Vec::new();
        if y <= 0.0 && 0.0 < x {
            out.push(RegionLabel::P0);
        }
        if rho_sq <= 1.0 && 0.0 < y && y <= x {
            out.push(RegionLabel::P1);
        }
        if rho_sq > 1.0 && 0.0 < y && y <= ALPHA {
            out.push(RegionLabel::P2);
        }
        if ALPHA < y && y <= x {
            out.push(RegionLabel::P3);
        }
        if rho_sq > 1.0 && 0.0 < x && x < y {
            out.push(RegionLabel::P4);
        }
        if rho_sq <= 1.0 && x > 0.0 && y > ALPHA {
            out.push(RegionLabel::P5);
        }
        if 0.0 < x && x < y && y <= ALPHA {
            out.push(RegionLabel::P6);
        }
        out
    }

    #[test]
    fn classify_matches_documented_examples() {
        assert_eq!(classify(0.5, -0.2), RegionLabel::P0);
        assert_eq!(classify(0.9, 0.8), RegionLabel::P3);
        assert_eq!(classify(0.2, 0.5), RegionLabel::P6);
        assert_eq!(classify(1.0, ALPHA), RegionLabel::P2);
        assert_eq!(classify(-0.3, 2.0), RegionLabel::LeftHalf);
        assert_eq!(classify(0.0, 1.0), RegionLabel::SingularAxis);
        assert_eq!(classify(0.0, 0.0), RegionLabel::SingularAxis);
    }

    #[test]
    fn classify_boundaries_follow_the_printed_inequalities() {
        // y = 0 belongs below (≤)
        assert_eq!(classify(1.5, 0.0), RegionLabel::P0);
        // the solution sits in P1 (the carve-out for its representative)
        assert_eq!(classify(ALPHA, ALPHA), RegionLabel::P1);
        // on the diagonal inside the disk
        assert_eq!(classify(0.3, 0.3), RegionLabel::P1);
        // diagonal above α and outside the disk is P3 (y ≤ x)
        assert_eq!(classify(0.9, 0.9), RegionLabel::P3);
        // height exactly α outside the disk is P2 even for huge x
        assert_eq!(classify(5.0, ALPHA), RegionLabel::P2);
        // just above α inside the disk
        assert_eq!(classify(0.1, ALPHA + 1e-9), RegionLabel::P5);
    }

    #[test]
    fn every_right_half_point_gets_exactly_one_sector() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..100_000 {
            let x = rng.gen_range(0.0_f64..3.0).max(f64::MIN_POSITIVE);
            let y = rng.gen_range(-3.0..3.0);
            let holds = holding_predicates(x, y);
            assert_eq!(
                holds.len(),
                1,
                "predicates overlap or leave a gap at ({x}, {y}): {holds:?}"
            );
            assert_eq!(classify(x, y), holds[0], "at ({x}, {y})");
        }
    }

    #[test]
    fn constants_satisfy_their_defining_identities() {
        let c = RegionConstants::certified();
        // decimal expansions computed independently at 60 digits
        assert!((c.epsilon - 0.0937).abs() < 5e-5);
        assert!((c.epsilon - 0.09370163760580994).abs() < 1e-15);
        assert!((c.gamma - 1.5087902060906442).abs() < 1e-15);
        assert!((c.gamma * c.eta - 1.0).abs() < 1e-15);
        assert!(c.gamma.powi(3) / 4.0 <= 0.86);
        assert!((c.gamma.powi(3) / 4.0 - 0.8586705687662702).abs() < 1e-14);
        assert!((c.upsilon_chain() - 0.18124764381).abs() < 1e-9);
        assert!(c.upsilon_chain() > 0.14);
        assert!(c.delta_cap > 0.0929 && c.delta_cap < 0.0930);
    }

    #[test]
    fn contraction_factors_match_the_lemmas() {
        let gamma = RegionConstants::certified().gamma;
        assert_eq!(contraction_factor(RegionLabel::P1), Some(0.5));
        assert_eq!(contraction_factor(RegionLabel::P2), Some(0.5));
        assert_eq!(contraction_factor(RegionLabel::P3), Some(0.5));
        assert_eq!(contraction_factor(RegionLabel::P4), Some(1.0));
        assert_eq!(contraction_factor(RegionLabel::P5), Some(gamma));
        assert_eq!(contraction_factor(RegionLabel::P6), Some(gamma));
        assert_eq!(contraction_factor(RegionLabel::P0), None);
        assert_eq!(contraction_factor(RegionLabel::LeftHalf), None);
        assert_eq!(contraction_factor(RegionLabel::SingularAxis), None);
    }

    #[test]
    fn transition_table_rows() {
        use RegionLabel::*;
        assert_eq!(allowed_transitions(P1, ALPHA).unwrap(), &[P1, P2]);
        assert_eq!(allowed_transitions(P2, ALPHA).unwrap(), &[P3, P4]);
        assert_eq!(allowed_transitions(P3, ALPHA).unwrap(), &[P4]);
        assert_eq!(allowed_transitions(P4, ALPHA).unwrap(), &[P4, P5]);
        assert_eq!(allowed_transitions(P5, ALPHA).unwrap(), &[P6]);
        assert_eq!(allowed_transitions(P6, ALPHA).unwrap(), &[P6, P1, P2]);
        assert_eq!(allowed_transitions(P0, ALPHA).unwrap().len(), 7);
    }

    #[test]
    fn uncertified_alpha_is_refused() {
        assert_eq!(
            allowed_transitions(RegionLabel::P1, 0.5),
            Err(RegionError::UncertifiedRegime { alpha: 0.5 })
        );
        assert!(matches!(
            check_step(State2D::new(0.9, 0.8), 0.3),
            Err(RegionError::UncertifiedRegime { .. })
        ));
        assert!(matches!(
            return_map_audit(State2D::new(ALPHA, ALPHA), 0.9),
            Err(RegionError::UncertifiedRegime { .. })
        ));
    }

    #[test]
    fn check_step_audits_documented_examples() {
        // from P3 the step lands in P4 and halves the squared distance
        let r = check_step(State2D::new(0.9, 0.8), ALPHA).unwrap();
        assert_eq!(r.from_label, RegionLabel::P3);
        assert_eq!(r.to_label, RegionLabel::P4);
        assert!(r.ratio.unwrap() <= 0.5 + RATIO_TOLERANCE);
        assert!(r.allowed && r.bound_satisfied);

        // the solution is stationary: no ratio, bounds hold by convention
        let r = check_step(State2D::new(ALPHA, ALPHA), ALPHA).unwrap();
        assert_eq!(r.ratio, None);
        assert!(r.allowed && r.bound_satisfied);
        assert_eq!(r.to_label, RegionLabel::P1);

        // from P5 the only exit is P6, with ratio below gamma
        let s = State2D::new(0.3, 0.9);
        assert!(s.rho() * s.rho() <= 1.0);
        let r = check_step(s, ALPHA).unwrap();
        assert_eq!(r.from_label, RegionLabel::P5);
        assert_eq!(r.to_label, RegionLabel::P6);
        assert!(r.ratio.unwrap() < RegionConstants::certified().gamma);
        assert!(r.allowed && r.bound_satisfied);
    }

    #[test]
    fn sampled_steps_respect_the_transition_table() {
        let eps = RegionConstants::certified().epsilon;
        let mut rng = ChaCha8Rng::seed_from_u64(307);
        let mut seen = 0;
        while seen < 20_000 {
            let x = rng.gen_range(1e-6_f64..2.5);
            let y = rng.gen_range(-2.5..2.5);
            let from = classify(x, y);
            // skip sectors with no claim and the sub-threshold sliver
            if contraction_factor(from).is_none() {
                continue;
            }
            if from == RegionLabel::P6 && x < eps {
                continue;
            }
            let report = check_step(State2D::new(x, y), ALPHA).unwrap();
            assert!(
                report.allowed,
                "{from} -> {} at ({x}, {y})",
                report.to_label
            );
            assert!(
                report.bound_satisfied,
                "ratio {:?} from {from} at ({x}, {y})",
                report.ratio
            );
            seen += 1;
        }
    }

    #[test]
    fn return_map_audit_matches_documented_examples() {
        // the stationary orbit returns immediately with ratio zero
        let audit = return_map_audit(State2D::new(ALPHA, ALPHA), ALPHA).unwrap();
        assert_eq!(audit.m, 1);
        assert_eq!(audit.ratio, 0.0);

        for (x, y) in [(0.9, 0.1), (0.5, 0.4)] {
            let audit = return_map_audit(State2D::new(x, y), ALPHA).unwrap();
            assert!(audit.m >= 1 && audit.m < RETURN_MAP_CAP);
            assert!(
                audit.ratio <= 0.86,
                "ratio {} from ({x}, {y})",
                audit.ratio
            );
        }
    }

    #[test]
    fn return_map_ratio_stays_under_the_cubic_bound_on_a_sample() {
        let c = RegionConstants::certified();
        let bound = c.gamma.powi(3) / 4.0 + 1e-9;
        let mut rng = ChaCha8Rng::seed_from_u64(811);
        let mut audited = 0;
        while audited < 300 {
            let x = rng.gen_range(1e-3_f64..1.0);
            let y = rng.gen_range(1e-3..x);
            if classify(x, y) != RegionLabel::P1 {
                continue;
            }
            let audit = return_map_audit(State2D::new(x, y), ALPHA).unwrap();
            assert!(
                audit.ratio <= bound,
                "ratio {} exceeds {bound} from ({x}, {y}) after m = {}",
                audit.ratio,
                audit.m
            );
            audited += 1;
        }
    }

    #[test]
    #[should_panic(expected = "start in P1")]
    fn return_map_audit_rejects_non_p1_starts() {
        let _ = return_map_audit(State2D::new(0.2, 0.5), ALPHA);
    }

    #[test]
    fn growth_margin_vanishes_only_at_its_minimizer() {
        let theta_star = g_minimizer();
        assert!(g_theta(theta_star).abs() < 1e-12);
        // strictly positive a bit away from the minimizer on both sides
        assert!(g_theta(theta_star - 0.05) > 1e-4);
        assert!(g_theta(theta_star + 0.05) > 1e-4);
        // and nonnegative (to rounding) across the whole interval
        let n = 2000;
        for k in 1..n {
            let theta = std::f64::consts::FRAC_PI_4
                + (std::f64::consts::FRAC_PI_4) * (k as f64) / (n as f64);
            assert!(g_theta(theta) >= -1e-12, "g({theta}) < 0");
        }
        // at the left endpoint g reduces to the threshold constant itself
        let g_quarter = g_theta(std::f64::consts::FRAC_PI_4);
        assert!((g_quarter - RegionConstants::certified().epsilon).abs() < 1e-15);
    }
}
