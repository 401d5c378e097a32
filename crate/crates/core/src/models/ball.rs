//! Unit ball `B_1 ⊂ R^d` with sticky diffusion on the whole sphere.

use serde::{Deserialize, Serialize};

use super::positive;
use crate::disk::sigma_omega;
use crate::error::{Error, Result};
use crate::interpolation::{Alpha, BoundConstants};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    pub d: u32,
    /// Tangential diffusivity on the sphere.
    pub beta: f64,
    /// Rate of the inward push at the boundary.
    pub gamma: f64,
}

impl BallSpec {
    pub fn new(d: u32, beta: f64, gamma: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain(format!("dimension d must be >= 2, got {d}")));
        }
        positive("beta", beta)?;
        positive("gamma", gamma)?;
        Ok(BallSpec { d, beta, gamma })
    }

    /// `α = γ / (d + γ)`.
    pub fn alpha(&self) -> Result<Alpha> {
        Alpha::open(self.gamma / (f64::from(self.d) + self.gamma))
    }
}

fn resolve_c_omega(d: u32, c_omega: Option<f64>) -> Result<f64> {
    match (c_omega, d) {
        (Some(c), _) => positive("C_Omega", c),
        (None, 2) => Ok(1.0 / sigma_omega()),
        (None, _) => Err(Error::MissingConstant(format!(
            "C_Omega for the ball in dimension d = {d} must be supplied"
        ))),
    }
}

/// `C_Σ = 1/(β(d−1))`, `K_{Σ,Ω} = 1/d`, `K_1 = (d+1)/(4d²)`, `K_2 = 0`.
///
/// `C_Ω` defaults to `1/σ_Ω` in `d = 2` and is required otherwise.
pub fn ball_constants(spec: &BallSpec, c_omega: Option<f64>) -> Result<BoundConstants> {
    let c_omega = resolve_c_omega(spec.d, c_omega)?;
    let d = f64::from(spec.d);
    BoundConstants::new(
        c_omega,
        1.0 / (spec.beta * (d - 1.0)),
        1.0 / d,
        (d + 1.0) / (4.0 * d * d),
        0.0,
    )
}

/// Closed-form ball bound at an arbitrary `α ∈ (0, 1)`.
pub fn ball_formula(d: u32, beta: f64, c_omega: f64, alpha: Alpha) -> Result<f64> {
    let a = alpha.require_open()?;
    if d < 2 {
        return Err(Error::domain(format!("dimension d must be >= 2, got {d}")));
    }
    positive("beta", beta)?;
    positive("C_Omega", c_omega)?;
    let d = f64::from(d);
    let bulk = c_omega + (1.0 - a) * (d + 1.0) / (4.0 * d * d);
    let mixed = (4.0 * (1.0 - a) * d + 4.0 * a * d * d * c_omega + a * (1.0 - a) * (d + 1.0))
        / (4.0 * d * (a * d + (1.0 - a) * beta * (d - 1.0)));
    Ok(bulk.max(mixed))
}

/// Ball bound at `α = γ/(d+γ)`.
pub fn ball_bound(spec: &BallSpec, c_omega: Option<f64>) -> Result<f64> {
    let c_omega = resolve_c_omega(spec.d, c_omega)?;
    ball_formula(spec.d, spec.beta, c_omega, spec.alpha()?)
}

/// The `d = 2`, `β = 1` specialization written in terms of `σ_Ω`:
/// `(8(1−α)σ + 16α + 3α(1−α)σ) / (8(1+α)σ)`.
pub fn disk_bound_closed_form(sigma: f64, alpha: Alpha) -> Result<f64> {
    let a = alpha.require_open()?;
    positive("sigma_Omega", sigma)?;
    Ok(
        (8.0 * (1.0 - a) * sigma + 16.0 * a + 3.0 * a * (1.0 - a) * sigma)
            / (8.0 * (1.0 + a) * sigma),
    )
}
