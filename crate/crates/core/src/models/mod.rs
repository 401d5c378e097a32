//! Worked geometries. Each model supplies [`BoundConstants`] for the generic
//! interpolation bound and, where one exists, a closed form of that bound.
//!
//! [`BoundConstants`]: crate::interpolation::BoundConstants

pub mod ball;
pub mod manifold;
pub mod needle;
pub mod partial_disk;

pub use ball::{ball_bound, ball_constants, ball_formula, disk_bound_closed_form, BallSpec};
pub use manifold::{
    manifold_bound, manifold_constants, manifold_m1, manifold_m2, reilly_gap_lower_bound,
    ManifoldSpec,
};
pub use needle::{
    needle_bound, needle_constants, needle_gamma, needle_regime, needle_regime_thresholds,
    needle_root_config, needle_secular_fn, NeedleRegime, NeedleSpec,
};
pub use partial_disk::{
    continuity_margin, partial_disk_bound, partial_disk_constants,
    partial_disk_continuity_threshold, partial_disk_k1, PartialDiskSpec,
};

use crate::error::{Error, Result};

pub(crate) fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::domain(format!(
            "{name} must be finite and > 0, got {v}"
        )))
    }
}
