//! Unit disk with a needle of length `L` attached at `(1, 0)`. The sticky
//! part of the state space is the circle together with the needle.
//!
//! No bulk-controls-boundary inequality is expected here, so
//! `K_{Σ,Ω} = +∞` and the interpolation bound collapses to
//! `max(C_Ω + (1−α)K_1, C_Σ + αK_2)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::positive;
use crate::disk::sigma_omega;
use crate::error::{Error, Result};
use crate::interpolation::{Alpha, BoundConstants};
use crate::roots::{smallest_positive_root, RootResult, RootSearchConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeedleSpec {
    pub length: f64,
    /// Tangential diffusivity on the circle and the needle.
    pub beta: f64,
}

impl NeedleSpec {
    pub fn new(length: f64, beta: f64) -> Result<Self> {
        positive("needle length L", length)?;
        positive("beta", beta)?;
        Ok(NeedleSpec { length, beta })
    }
}

/// `2 cos(√γ L)(1 − cos(2π√γ)) + sin(√γ L) sin(2π√γ)`.
///
/// Its zeros are the eigenvalues of the tangential Laplacian on the
/// circle-plus-needle graph (with `β` scaled out). `γ = 1` is always a zero.
pub fn needle_secular_fn(gamma: f64, length: f64) -> Result<f64> {
    positive("gamma", gamma)?;
    positive("needle length L", length)?;
    let s = gamma.sqrt();
    let ring = 2.0 * PI * s;
    Ok(2.0 * (s * length).cos() * (1.0 - ring.cos()) + (s * length).sin() * ring.sin())
}

/// Search window for `γ_L`: `(1e-6, 1 + 1e-6]`, since `γ_L ≤ 1` always.
pub fn needle_root_config() -> RootSearchConfig {
    RootSearchConfig {
        x_min: 1e-6,
        x_max: 1.0 + 1e-6,
        step: 1e-4,
        tol: 1e-14,
        max_iter: 200,
    }
}

/// Smallest positive zero `γ_L` of [`needle_secular_fn`].
///
/// When `sin L = 0` the structural zero at `γ = 1` is tangential and cannot
/// be bracketed; it is returned directly if nothing smaller is found.
pub fn needle_gamma(length: f64, cfg: &RootSearchConfig) -> Result<RootResult> {
    positive("needle length L", length)?;
    let f = |g: f64| needle_secular_fn(g, length).unwrap_or(f64::NAN);
    let found = match smallest_positive_root(f, cfg) {
        Ok(r) => r,
        Err(Error::NoRootFound { .. }) if cfg.x_min < 1.0 && cfg.x_max >= 1.0 => RootResult {
            root: 1.0,
            bracket: (1.0, 1.0),
            residual: f(1.0).abs(),
            converged: true,
        },
        Err(e) => return Err(e),
    };
    if found.root > 1.0 + 1e-9 {
        return Err(Error::InvariantViolation(format!(
            "gamma_L = {} exceeds 1 for L = {length}",
            found.root
        )));
    }
    Ok(found)
}

/// `C_Ω = 1/σ_Ω`, `C_Σ = 1/(βγ_L)`, `K_{Σ,Ω} = ∞`, `K_1 = 3/8`,
/// `K_2 = L²(π+L)/(β(2π+L))`.
pub fn needle_constants(spec: &NeedleSpec, gamma_l: f64) -> Result<BoundConstants> {
    let spec = NeedleSpec::new(spec.length, spec.beta)?;
    positive("gamma_L", gamma_l)?;
    let l = spec.length;
    BoundConstants::new(
        1.0 / sigma_omega(),
        1.0 / (spec.beta * gamma_l),
        f64::INFINITY,
        3.0 / 8.0,
        l * l * (PI + l) / (spec.beta * (2.0 * PI + l)),
    )
}

pub fn needle_bound(spec: &NeedleSpec, gamma_l: f64, alpha: Alpha) -> Result<f64> {
    let spec = NeedleSpec::new(spec.length, spec.beta)?;
    positive("gamma_L", gamma_l)?;
    let a = alpha.require_open()?;
    let l = spec.length;
    let bulk = 1.0 / sigma_omega() + 3.0 / 8.0 * (1.0 - a);
    let boundary =
        1.0 / (spec.beta * gamma_l) + a * l * l * (PI + l) / (spec.beta * (2.0 * PI + l));
    Ok(bulk.max(boundary))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NeedleRegime {
    /// `β` large enough that `1/σ_Ω + (3/8)(1−α)` is the bound for all `α`.
    BulkDominates,
    /// `β` small enough that `C_Σ + αK_2` is the bound for all `α`.
    BoundaryDominates,
    Mixed,
}

/// `(lower, upper)` β-thresholds: at or below `lower` the boundary term
/// dominates, at or above `upper` the bulk term does.
pub fn needle_regime_thresholds(length: f64, gamma_l: f64) -> Result<(f64, f64)> {
    positive("needle length L", length)?;
    positive("gamma_L", gamma_l)?;
    let sigma = sigma_omega();
    let l = length;
    let upper = sigma * (1.0 / gamma_l + l * l * (PI + l) / (2.0 * PI + l));
    let lower = 1.0 / gamma_l / (1.0 / sigma + 3.0 / 8.0);
    Ok((lower, upper))
}

pub fn needle_regime(spec: &NeedleSpec, gamma_l: f64) -> Result<NeedleRegime> {
    let (lower, upper) = needle_regime_thresholds(spec.length, gamma_l)?;
    Ok(if spec.beta >= upper {
        NeedleRegime::BulkDominates
    } else if spec.beta <= lower {
        NeedleRegime::BoundaryDominates
    } else {
        NeedleRegime::Mixed
    })
}
