//! Compact Riemannian manifold with boundary under the curvature assumption
//! `Ric ≥ k_R` in the interior and `II ≥ k_2` on the boundary.
//!
//! Two independent bounds are available. `M1` is the interpolation bound with
//! `K_{Σ,Ω} = 2/k_2` (Escobar's Steklov estimate) and `K_1 = (d−1)/(d k_R)`;
//! `M2` comes from applying Reilly's formula to the eigenfunction directly.

use serde::{Deserialize, Serialize};

use super::positive;
use crate::error::{Error, Result};
use crate::interpolation::{Alpha, BoundConstants};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ManifoldSpec {
    pub d: u32,
    /// Lower Ricci bound.
    pub k_r: f64,
    /// Lower bound on the second fundamental form of the boundary.
    pub k_2: f64,
    pub c_omega: f64,
    pub c_sigma: f64,
    /// `|Ω| / |∂Ω|`.
    pub vol_ratio: f64,
}

impl ManifoldSpec {
    pub fn new(
        d: u32,
        k_r: f64,
        k_2: f64,
        c_omega: f64,
        c_sigma: f64,
        vol_ratio: f64,
    ) -> Result<Self> {
        let spec = ManifoldSpec {
            d,
            k_r,
            k_2,
            c_omega,
            c_sigma,
            vol_ratio,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(Error::domain(format!(
                "dimension d must be >= 2, got {}",
                self.d
            )));
        }
        positive("k_R", self.k_r)?;
        positive("k_2", self.k_2)?;
        positive("C_Omega", self.c_omega)?;
        positive("C_Sigma", self.c_sigma)?;
        positive("vol_ratio", self.vol_ratio)?;
        Ok(())
    }

    fn dim(&self) -> f64 {
        f64::from(self.d)
    }
}

pub fn manifold_constants(spec: &ManifoldSpec) -> Result<BoundConstants> {
    spec.validate()?;
    let d = spec.dim();
    BoundConstants::new(
        spec.c_omega,
        spec.c_sigma,
        2.0 / spec.k_2,
        (d - 1.0) / (d * spec.k_r),
        0.0,
    )
}

pub fn manifold_m1(spec: &ManifoldSpec, alpha: Alpha) -> Result<f64> {
    spec.validate()?;
    let a = alpha.require_open()?;
    let ManifoldSpec {
        k_r,
        k_2,
        c_omega,
        c_sigma,
        ..
    } = *spec;
    let d = spec.dim();
    let bulk = c_omega + (1.0 - a) * (d - 1.0) / (d * k_r);
    let mixed = c_sigma / (d * k_r)
        * (2.0 * (1.0 - a) * d * k_r
            + a * d * k_2 * k_r * c_omega
            + a * (1.0 - a) * (d - 1.0) * k_2)
        / (2.0 * (1.0 - a) + a * k_2 * c_sigma);
    Ok(bulk.max(mixed))
}

pub fn manifold_m2(spec: &ManifoldSpec, alpha: Alpha) -> Result<f64> {
    spec.validate()?;
    let a = alpha.require_open()?;
    let d = spec.dim();
    let boundary = (3.0 * d - 1.0) * (1.0 - a) / (d * a * spec.k_2) * spec.vol_ratio;
    Ok(boundary.max((d - 1.0) / (d * spec.k_r)))
}

/// Lower bound on the spectral gap behind `M2`:
/// `min(d k_2 γ/(3d−1), d k_R/(d−1))` with `γ = α/(1−α) · |∂Ω|/|Ω|`.
pub fn reilly_gap_lower_bound(spec: &ManifoldSpec, alpha: Alpha) -> Result<f64> {
    spec.validate()?;
    let a = alpha.require_open()?;
    let d = spec.dim();
    let gamma = a / (1.0 - a) / spec.vol_ratio;
    Ok((d * spec.k_2 * gamma / (3.0 * d - 1.0)).min(d * spec.k_r / (d - 1.0)))
}

/// `min(M1, M2)`.
pub fn manifold_bound(spec: &ManifoldSpec, alpha: Alpha) -> Result<f64> {
    Ok(manifold_m1(spec, alpha)?.min(manifold_m2(spec, alpha)?))
}
