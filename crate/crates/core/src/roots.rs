//! Smallest-positive-root search for scalar functions: scan a uniform grid
//! for sign changes, then refine each bracket by bisection.
//!
//! Zeros where the function touches the axis without crossing it cannot be
//! bracketed. Interior grid points that are local minima of `|f|` with
//! `|f| < TANGENT_TOL` are reported as candidates with `converged == false`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Threshold below which a non-crossing local minimum of `|f|` is reported.
pub const TANGENT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootSearchConfig {
    /// Scan start; keeps the trivial root at zero out of the search.
    pub x_min: f64,
    pub x_max: f64,
    /// Bracket grid spacing.
    pub step: f64,
    /// Bisection stops once the bracket half-width is at most `tol`.
    pub tol: f64,
    pub max_iter: u32,
}

impl Default for RootSearchConfig {
    fn default() -> Self {
        RootSearchConfig {
            x_min: 1e-4,
            x_max: 10.0,
            step: 1e-3,
            tol: 1e-12,
            max_iter: 200,
        }
    }
}

impl RootSearchConfig {
    /// Default step, tolerance and iteration cap on `[x_min, x_max]`.
    pub fn on_interval(x_min: f64, x_max: f64) -> Result<Self> {
        let cfg = RootSearchConfig {
            x_min,
            x_max,
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_step(mut self, step: f64) -> Result<Self> {
        self.step = step;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.x_min.is_finite() && self.x_max.is_finite()) {
            return bad("x_min and x_max must be finite".into());
        }
        if !(0.0 < self.x_min && self.x_min < self.x_max) {
            return bad(format!(
                "require 0 < x_min < x_max, got x_min = {}, x_max = {}",
                self.x_min, self.x_max
            ));
        }
        if !(self.step > 0.0 && self.step <= (self.x_max - self.x_min) / 10.0) {
            return bad(format!(
                "require 0 < step <= (x_max - x_min)/10, got step = {}",
                self.step
            ));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return bad(format!("require tol > 0, got {}", self.tol));
        }
        if self.max_iter == 0 {
            return bad("require max_iter > 0".into());
        }
        Ok(())
    }

    fn grid_len(&self) -> usize {
        ((self.x_max - self.x_min) / self.step).ceil() as usize + 1
    }

    fn grid_point(&self, i: usize) -> f64 {
        (self.x_min + i as f64 * self.step).min(self.x_max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    pub root: f64,
    pub bracket: (f64, f64),
    /// `|f(root)|`.
    pub residual: f64,
    /// False for tangential candidates that were never bracketed.
    pub converged: bool,
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let fx = f(x);
    if fx.is_finite() {
        Ok(fx)
    } else {
        Err(Error::NonFinite { x, fx })
    }
}

fn bisect<F: Fn(f64) -> f64>(
    f: &F,
    mut a: f64,
    mut fa: f64,
    mut b: f64,
    cfg: &RootSearchConfig,
) -> Result<RootResult> {
    let bracket = (a, b);
    for _ in 0..cfg.max_iter {
        if 0.5 * (b - a) <= cfg.tol {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = eval(f, mid)?;
        if fm == 0.0 {
            return Ok(RootResult {
                root: mid,
                bracket,
                residual: 0.0,
                converged: true,
            });
        }
        if fa.signum() == fm.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let root = 0.5 * (a + b);
    Ok(RootResult {
        root,
        bracket,
        residual: eval(f, root)?.abs(),
        converged: 0.5 * (b - a) <= cfg.tol,
    })
}

/// Walks the grid left to right, handing every root event to `visit`.
/// Stops early when `visit` returns false.
fn scan<F, V>(f: &F, cfg: &RootSearchConfig, mut visit: V) -> Result<()>
where
    F: Fn(f64) -> f64,
    V: FnMut(RootResult) -> bool,
{
    cfg.validate()?;
    let n = cfg.grid_len();
    let mut x_prev = cfg.grid_point(0);
    let mut f_prev = eval(f, x_prev)?;
    if f_prev == 0.0 {
        let hit = RootResult {
            root: x_prev,
            bracket: (x_prev, x_prev),
            residual: 0.0,
            converged: true,
        };
        if !visit(hit) {
            return Ok(());
        }
    }
    // |f| at the point before x_prev, for the local-minimum test
    let mut f_before: Option<f64> = None;
    for i in 1..n {
        let x = cfg.grid_point(i);
        let fx = eval(f, x)?;
        let event = if fx == 0.0 {
            Some(RootResult {
                root: x,
                bracket: (x, x),
                residual: 0.0,
                converged: true,
            })
        } else if f_prev != 0.0 && f_prev.signum() != fx.signum() {
            Some(bisect(f, x_prev, f_prev, x, cfg)?)
        } else if let Some(fb) = f_before {
            // x_prev is interior; flag it if |f| dips to ~0 without crossing
            let a = f_prev.abs();
            let tangential = a < TANGENT_TOL
                && a < fb.abs()
                && a <= fx.abs()
                && f_prev != 0.0
                && fb.signum() == f_prev.signum();
            tangential.then(|| RootResult {
                root: x_prev,
                bracket: (cfg.grid_point(i - 2), x),
                residual: a,
                converged: false,
            })
        } else {
            None
        };
        if let Some(hit) = event {
            if !visit(hit) {
                return Ok(());
            }
        }
        f_before = Some(f_prev);
        x_prev = x;
        f_prev = fx;
    }
    Ok(())
}

/// Leftmost root of `f` on `[cfg.x_min, cfg.x_max]`.
///
/// A tangential candidate is returned (with `converged == false`) only when
/// it lies left of every sign change.
pub fn smallest_positive_root<F: Fn(f64) -> f64>(
    f: F,
    cfg: &RootSearchConfig,
) -> Result<RootResult> {
    let mut found = None;
    scan(&f, cfg, |r| {
        found = Some(r);
        false
    })?;
    found.ok_or(Error::NoRootFound {
        x_min: cfg.x_min,
        x_max: cfg.x_max,
    })
}

/// Every root event on the grid, ascending.
pub fn all_roots_in<F: Fn(f64) -> f64>(f: F, cfg: &RootSearchConfig) -> Result<Vec<RootResult>> {
    let mut out = Vec::new();
    scan(&f, cfg, |r| {
        out.push(r);
        true
    })?;
    Ok(out)
}
