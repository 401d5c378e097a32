//! Exact spectral gap on the unit disk in `R²` with full sticky boundary
//! diffusion (`β = 1`), and the Neumann gap `σ_Ω` of the disk.
//!
//! Separating variables gives eigenfunctions `J_m(√λ r) e^{±imθ}`, where for
//! each mode `m` the admissible `λ` solve
//!
//! ```text
//! √λ J_m''(√λ) + (1+α)/(1−α) J_m'(√λ) = 0.
//! ```
//!
//! The gap `λ_{α,⋆}` is the smallest positive root over all modes and
//! `C_α = 1/λ_{α,⋆}`.
//!
//! All searches run in `x = √λ`. For `α >= 0` every mode `m >= 1` is strictly
//! positive on `0 < x < m` (both `J_m` and `J_m'` are positive there), so the
//! scan for mode `m` starts at `m/2` and a mode with `m² > λ` cannot improve
//! on an already found `λ`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interpolation::{alpha_grid, Alpha, BoundCurve};
use crate::models::ball::disk_bound_closed_form;
use crate::roots::{smallest_positive_root, RootResult, RootSearchConfig};
use crate::special::{bessel_j_and_prime, bessel_j_second, BesselOrder, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskEigenConfig {
    /// Highest Fourier mode scanned.
    pub m_max: u32,
    /// Search ceiling for `λ` in every mode.
    pub lambda_max: f64,
    /// Grid, tolerance and lower cut-off in `x = √λ`; `x_max` is replaced by
    /// `√lambda_max`.
    pub root_cfg: RootSearchConfig,
    /// Scan every mode up to `m_max` instead of stopping once `m² > λ_best`.
    pub strict: bool,
}

impl Default for DiskEigenConfig {
    fn default() -> Self {
        DiskEigenConfig {
            m_max: 50,
            lambda_max: 400.0,
            root_cfg: RootSearchConfig::default(),
            strict: false,
        }
    }
}

impl DiskEigenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m_max < 2 || self.m_max >= MAX_ORDER {
            return Err(Error::InvalidConfig(format!(
                "m_max must lie in [2, {}], got {}",
                MAX_ORDER - 1,
                self.m_max
            )));
        }
        if !(self.lambda_max > 4.0 && self.lambda_max.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "lambda_max must exceed 4, got {}",
                self.lambda_max
            )));
        }
        self.root_cfg.validate()
    }

    /// Root-search window in `x` for mode `m`, or `None` if the mode cannot
    /// have a root below `lambda_max`.
    fn window(&self, m: u32) -> Option<RootSearchConfig> {
        let mf = f64::from(m);
        let x_max = self.lambda_max.sqrt();
        if mf >= x_max {
            return None;
        }
        let mut cfg = self.root_cfg;
        cfg.x_min = cfg.x_min.max(0.5 * mf);
        cfg.x_max = x_max;
        cfg.step = cfg.step.min((cfg.x_max - cfg.x_min) / 10.0);
        Some(cfg)
    }
}

fn check_secular_args(alpha: Alpha, lambda: f64) -> Result<()> {
    if alpha.get() >= 1.0 {
        return Err(Error::domain(
            "alpha = 1 makes the secular coefficient diverge",
        ));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::domain(format!("lambda must be > 0, got {lambda}")));
    }
    Ok(())
}

/// Secular function of mode `m` in the reduced form
/// `((m² − λ)/√λ) J_m(√λ) + (2α/(1−α)) J_m'(√λ)`, obtained from the
/// original one by eliminating `J_m''` with Bessel's equation.
pub fn disk_secular_fn(m: BesselOrder, alpha: Alpha, lambda: f64) -> Result<f64> {
    check_secular_args(alpha, lambda)?;
    reduced(m, coupling(alpha.get()), lambda.sqrt())
}

/// Secular function as originally stated,
/// `√λ J_m''(√λ) + ((1+α)/(1−α)) J_m'(√λ)`.
pub fn disk_secular_fn_full(m: BesselOrder, alpha: Alpha, lambda: f64) -> Result<f64> {
    check_secular_args(alpha, lambda)?;
    let a = alpha.get();
    let x = lambda.sqrt();
    let (_, jp) = bessel_j_and_prime(m, x)?;
    Ok(x * bessel_j_second(m, x)? + (1.0 + a) / (1.0 - a) * jp)
}

/// `2α/(1−α)`, the normal-derivative coefficient of the boundary operator.
fn coupling(alpha: f64) -> f64 {
    2.0 * alpha / (1.0 - alpha)
}

fn reduced(m: BesselOrder, coupling: f64, x: f64) -> Result<f64> {
    let (j, jp) = bessel_j_and_prime(m, x)?;
    let mf = f64::from(m.get());
    Ok((mf * mf - x * x) / x * j + coupling * jp)
}

/// Lowest eigenvalue over all scanned modes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeRoot {
    /// The eigenvalue `λ = x²`.
    pub lambda: f64,
    pub mode: BesselOrder,
    /// Root in `x = √λ`.
    pub root: RootResult,
}

fn lowest_over_modes<F>(cfg: &DiskEigenConfig, mode_fn: F) -> Result<ModeRoot>
where
    F: Fn(BesselOrder, f64) -> Result<f64>,
{
    cfg.validate()?;
    let mut best: Option<ModeRoot> = None;
    for m in 0..=cfg.m_max {
        if let Some(b) = &best {
            if !cfg.strict && f64::from(m * m) > b.lambda {
                break;
            }
        }
        let Some(window) = cfg.window(m) else {
            break;
        };
        let order = BesselOrder::new(m)?;
        // Bessel domain errors cannot occur inside the window; surface them
        // as non-finite values if they ever do.
        let f = |x: f64| mode_fn(order, x).unwrap_or(f64::NAN);
        let root = match smallest_positive_root(f, &window) {
            Ok(r) => r,
            Err(Error::NoRootFound { .. }) => continue,
            Err(e) => return Err(e),
        };
        let lambda = root.root * root.root;
        if best.as_ref().is_none_or(|b| lambda < b.lambda) {
            best = Some(ModeRoot {
                lambda,
                mode: order,
                root,
            });
        }
    }
    best.ok_or(Error::NoRootFound {
        x_min: cfg.root_cfg.x_min,
        x_max: cfg.lambda_max.sqrt(),
    })
}

/// Spectral gap `λ_{α,⋆}` of the sticky-reflecting generator on the disk,
/// `0 <= α < 1`. Ties between modes go to the smaller `m`.
pub fn disk_exact_gap(alpha: Alpha, cfg: &DiskEigenConfig) -> Result<ModeRoot> {
    check_secular_args(alpha, 1.0)?;
    let c = coupling(alpha.get());
    lowest_over_modes(cfg, |m, x| reduced(m, c, x))
}

/// Smallest positive `γ` with `J_m'(√γ) = 0` for some mode `m`.
pub fn neumann_disk_gap_with(cfg: &DiskEigenConfig) -> Result<ModeRoot> {
    lowest_over_modes(cfg, |m, x| Ok(bessel_j_and_prime(m, x)?.1))
}

/// First nonzero Neumann eigenvalue `σ_Ω ≈ 3.39` of the unit disk.
pub fn neumann_disk_gap() -> Result<ModeRoot> {
    neumann_disk_gap_with(&DiskEigenConfig::default())
}

/// `σ_Ω` computed once with default settings and cached.
pub fn sigma_omega() -> f64 {
    static SIGMA: OnceLock<f64> = OnceLock::new();
    *SIGMA.get_or_init(|| {
        neumann_disk_gap()
            .expect("default Neumann gap search always brackets j'_{1,1}")
            .lambda
    })
}

/// `C_α = 1/λ_{α,⋆}` on [`alpha_grid`]`(n_samples)`, alongside the
/// closed-form upper bound for the `d = 2`, `β = 1` disk.
pub fn exact_curve(n_samples: usize, cfg: &DiskEigenConfig) -> Result<BoundCurve> {
    let alphas = alpha_grid(n_samples)?;
    let sigma = neumann_disk_gap_with(cfg)?.lambda;
    let mut exact = Vec::with_capacity(alphas.len());
    let mut upper = Vec::with_capacity(alphas.len());
    for &a in &alphas {
        let alpha = Alpha::new(a)?;
        exact.push(1.0 / disk_exact_gap(alpha, cfg)?.lambda);
        upper.push(disk_bound_closed_form(sigma, alpha)?);
    }
    Ok(BoundCurve {
        alphas,
        upper_bounds: upper,
        exact: Some(exact),
    })
}
