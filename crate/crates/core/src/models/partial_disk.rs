//! Unit disk with sticky diffusion only on the arc `|θ| ≤ δπ`; the rest of
//! the circle is reflecting.

use serde::{Deserialize, Serialize};

use crate::disk::sigma_omega;
use crate::error::{Error, Result};
use crate::interpolation::{Alpha, BoundConstants};
use crate::roots::{smallest_positive_root, RootResult, RootSearchConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartialDiskSpec {
    /// Fraction of the circle carrying boundary diffusion.
    pub delta: f64,
}

impl PartialDiskSpec {
    pub fn new(delta: f64) -> Result<Self> {
        if delta > 0.0 && delta < 1.0 {
            Ok(PartialDiskSpec { delta })
        } else {
            Err(Error::domain(format!(
                "delta must lie in (0, 1), got {delta}"
            )))
        }
    }
}

/// `K_1(δ) = (√(1−δ) π + ¼ √(3/δ))²`.
pub fn partial_disk_k1(delta: f64) -> f64 {
    let v = (1.0 - delta).sqrt() * std::f64::consts::PI + 0.25 * (3.0 / delta).sqrt();
    v * v
}

/// `C_Ω = 1/σ_Ω`, `C_Σ = 4δ²`, `K_{Σ,Ω} = 1/(2δ)`, `K_1 = K_1(δ)`, `K_2 = 0`.
pub fn partial_disk_constants(spec: &PartialDiskSpec) -> Result<BoundConstants> {
    let d = PartialDiskSpec::new(spec.delta)?.delta;
    BoundConstants::new(
        1.0 / sigma_omega(),
        4.0 * d * d,
        1.0 / (2.0 * d),
        partial_disk_k1(d),
        0.0,
    )
}

pub fn partial_disk_bound(spec: &PartialDiskSpec, alpha: Alpha) -> Result<f64> {
    let d = PartialDiskSpec::new(spec.delta)?.delta;
    let a = alpha.require_open()?;
    let c_omega = 1.0 / sigma_omega();
    let k1 = partial_disk_k1(d);
    let d3 = d * d * d;
    let bulk = c_omega + (1.0 - a) * k1;
    let mixed = (4.0 * (1.0 - a) * d * d + 8.0 * a * d3 * c_omega + 8.0 * a * (1.0 - a) * d3 * k1)
        / ((1.0 - a) + 8.0 * a * d3);
    Ok(bulk.max(mixed))
}

/// `C_Σ(δ) − C_Ω − K_1(δ) = 4δ² − 1/σ_Ω − K_1(δ)`; positive means the
/// continuity criterion at `α = 0` holds.
pub fn continuity_margin(delta: f64) -> f64 {
    4.0 * delta * delta - 1.0 / sigma_omega() - partial_disk_k1(delta)
}

/// Smallest `δ` at which `4δ² = 1/σ_Ω + K_1(δ)`. For larger arcs the map
/// `α ↦ C_α` is continuous at zero.
pub fn partial_disk_continuity_threshold() -> Result<RootResult> {
    let cfg = RootSearchConfig::on_interval(1e-4, 1.0)?;
    smallest_positive_root(continuity_margin, &cfg)
}
