use std::f64::consts::TAU;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Slack allowed in `σ′σ″ ≥ |μ|` for float rounding.
pub const UNCERTAINTY_SLACK: f64 = 1e-12;

const UNIT_TOLERANCE: f64 = 1e-12;

/// A point on the unit sphere given by its direction cosines.
///
/// With respect to poles along x, y and z the colatitudes are
/// `θ′ = acos(cx)`, `θ″ = acos(cy)` and `θ = acos(cz)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Direction {
    pub cx: f64,
    pub cy: f64,
    pub cz: f64,
}

impl Direction {
    pub fn new(cx: f64, cy: f64, cz: f64) -> Result<Self> {
        let norm2 = cx * cx + cy * cy + cz * cz;
        if (norm2 - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::NotUnit(norm2));
        }
        Ok(Self { cx, cy, cz })
    }

    /// Normalises an arbitrary non-zero vector.
    pub fn from_vector(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::NotUnit(norm * norm));
        }
        Ok(Self { cx: x / norm, cy: y / norm, cz: z / norm })
    }

    /// Uniform sample on the sphere (Archimedes: `cz` uniform, azimuth uniform).
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let cz: f64 = rng.random_range(-1.0..=1.0);
        let azimuth: f64 = rng.random_range(0.0..TAU);
        let rho = (1.0 - cz * cz).max(0.0).sqrt();
        Self { cx: rho * azimuth.cos(), cy: rho * azimuth.sin(), cz }
    }

    /// Colatitudes `(θ, θ′, θ″)` from the z, x and y poles.
    pub fn colatitudes(&self) -> (f64, f64, f64) {
        let clamp = |c: f64| c.clamp(-1.0, 1.0).acos();
        (clamp(self.cz), clamp(self.cx), clamp(self.cy))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UncertaintyCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// Spin uncertainty on the sphere: `σ′σ″ ≥ |μ|` with `μ = cz`,
/// `σ′ = √(1 − cx²)` and `σ″ = √(1 − cy²)`.
pub fn uncertainty_check(d: &Direction) -> UncertaintyCheck {
    let sigma_x = (1.0 - d.cx * d.cx).max(0.0).sqrt();
    let sigma_y = (1.0 - d.cy * d.cy).max(0.0).sqrt();
    let lhs = sigma_x * sigma_y;
    let rhs = d.cz.abs();
    UncertaintyCheck { lhs, rhs, ok: lhs >= rhs - UNCERTAINTY_SLACK }
}
