//! Projections, reflections, and the Douglas-Rachford operator for the
//! unit sphere S = {‖x‖ = 1} and the line L = {λa + αb}, where {a, b} are
//! the first two axes of an orthonormal basis.
//!
//! Everything here is plain f64 arithmetic over immutable values; the exact
//! arithmetic lives in [`crate::exact`] and [`crate::certify`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Line offset of the certified regime: 1/√2, the unique α > 0 for which
/// the intersection points (±α, α) lie on the 45° lines.
pub const ALPHA: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Errors from the operator layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DrError {
    /// Projection onto the sphere is set-valued at the origin; we reject it
    /// rather than pick a selection.
    #[error("singular point: projection onto the sphere is undefined at the origin")]
    SingularPoint,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("dimension must be at least 2, found {found}")]
    DimensionTooSmall { found: usize },
    #[error("alpha must be finite and nonnegative, found {alpha}")]
    InvalidAlpha { alpha: f64 },
}

/// A point with N ≥ 2 finite coordinates relative to the orthonormal basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointN {
    coords: Vec<f64>,
}

impl PointN {
    pub fn new(coords: Vec<f64>) -> Result<Self, DrError> {
        if coords.len() < 2 {
            return Err(DrError::DimensionTooSmall {
                found: coords.len(),
            });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(DrError::NonFinite);
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean norm ρ = √(Σ coords(k)²).
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

impl From<State2D> for PointN {
    fn from(s: State2D) -> Self {
        PointN {
            coords: vec![s.x, s.y],
        }
    }
}

/// Problem parameters: line offset α ≥ 0 and ambient dimension N ≥ 2.
///
/// Any finite α and N run numerically, but the region contracts of
/// [`crate::regions`] are only claimed for α = 1/√2, N = 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub alpha: f64,
    pub dim: usize,
}

impl Params {
    pub fn new(alpha: f64, dim: usize) -> Result<Self, DrError> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(DrError::InvalidAlpha { alpha });
        }
        if dim < 2 {
            return Err(DrError::DimensionTooSmall { found: dim });
        }
        Ok(Self { alpha, dim })
    }

    /// The certified regime is exactly (α = 1/√2, N = 2); a one-ulp slack
    /// absorbs decimal round-trips of the constant through flag parsing.
    pub fn is_certified(&self) -> bool {
        self.dim == 2 && alpha_is_certified(self.alpha)
    }

    fn check_dim(&self, p: &PointN) -> Result<(), DrError> {
        if p.dim() != self.dim {
            return Err(DrError::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        Ok(())
    }
}

/// True when `alpha` is 1/√2 up to one part in 10^15.
pub fn alpha_is_certified(alpha: f64) -> bool {
    (alpha - ALPHA).abs() < 1e-15
}

/// The two sets of the feasibility problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetId {
    Sphere,
    Line,
}

/// Closest-point projection onto L = {λa + αb}: keep the first coordinate,
/// replace the second by α, zero the rest.
pub fn project_line(p: &PointN, params: &Params) -> Result<PointN, DrError> {
    params.check_dim(p)?;
    let mut coords = vec![0.0; p.dim()];
    coords[0] = p.coords[0];
    coords[1] = params.alpha;
    Ok(PointN { coords })
}

/// Radial projection onto the unit sphere, p/‖p‖.
pub fn project_sphere(p: &PointN) -> Result<PointN, DrError> {
    let rho = p.norm();
    if rho == 0.0 {
        return Err(DrError::SingularPoint);
    }
    Ok(PointN {
        coords: p.coords.iter().map(|c| c / rho).collect(),
    })
}

/// Reflection R(p) = 2·project(p) − p in the chosen set.
pub fn reflect(p: &PointN, set: SetId, params: &Params) -> Result<PointN, DrError> {
    let projected = match set {
        SetId::Sphere => project_sphere(p)?,
        SetId::Line => project_line(p, params)?,
    };
    Ok(PointN {
        coords: projected
            .coords
            .iter()
            .zip(&p.coords)
            .map(|(q, c)| 2.0 * q - c)
            .collect(),
    })
}

/// One Douglas-Rachford step ½(R_L R_S + I) in closed form:
/// first coordinate x(1)/ρ, second α + (1 − 1/ρ)·x(2), and
/// (1 − 1/ρ)·x(k) for k ≥ 3.
pub fn dr_step(p: &PointN, params: &Params) -> Result<PointN, DrError> {
    params.check_dim(p)?;
    let rho = p.norm();
    if rho == 0.0 {
        return Err(DrError::SingularPoint);
    }
    let shrink = 1.0 - 1.0 / rho;
    let mut coords: Vec<f64> = p.coords.iter().map(|c| shrink * c).collect();
    coords[0] = p.coords[0] / rho;
    coords[1] = params.alpha + shrink * p.coords[1];
    Ok(PointN { coords })
}

/// The planar iterate (x, y) with derived polar data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct State2D {
    pub x: f64,
    pub y: f64,
}

impl State2D {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// ρ = √(x² + y²), matching the summation order of [`PointN::norm`].
    pub fn rho(&self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    /// Argument of (x, y) in (−π, π]. Always recomputed from the Cartesian
    /// pair, never stored, so the polar and Cartesian views cannot drift.
    pub fn theta(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

/// Which of the two intersection points (±α, α) distances refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolutionSign {
    Plus,
    Minus,
}

/// Squared distance to the intersection point (sign·α, α).
pub fn dist_sq_to_solution(s: State2D, sign: SolutionSign) -> f64 {
    let target_x = match sign {
        SolutionSign::Plus => ALPHA,
        SolutionSign::Minus => -ALPHA,
    };
    let dx = s.x - target_x;
    let dy = s.y - ALPHA;
    dx * dx + dy * dy
}

/// The 2-D closed form of [`dr_step`]: x' = x/ρ, y' = α + (1 − 1/ρ)y.
pub fn dr_step_2d(s: State2D, alpha: f64) -> Result<State2D, DrError> {
    let rho = s.rho();
    if rho == 0.0 {
        return Err(DrError::SingularPoint);
    }
    Ok(State2D {
        x: s.x / rho,
        y: alpha + (1.0 - 1.0 / rho) * s.y,
    })
}

/// Polar form of the same step: x' = cos θ, y' = α + (ρ − 1)·sin θ.
/// Agrees with [`dr_step_2d`] to roundoff; kept as a cross-check.
pub fn dr_step_2d_polar(s: State2D, alpha: f64) -> Result<State2D, DrError> {
    let rho = s.rho();
    if rho == 0.0 {
        return Err(DrError::SingularPoint);
    }
    let theta = s.theta();
    Ok(State2D {
        x: theta.cos(),
        y: alpha + (rho - 1.0) * theta.sin(),
    })
}
