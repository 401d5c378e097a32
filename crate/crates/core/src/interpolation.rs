//! Interpolation bound on the Poincaré constant `C_α` of the mixed measure
//! `α λ_Ω + (1 − α) λ_Σ`, and the continuity diagnostics at `α ∈ {0, 1}`.
//!
//! Given the bulk constant `C_Ω`, the boundary constant `C_Σ`, the
//! bulk-controls-boundary constant `K_{Σ,Ω}` and the interaction constants
//! `K_1`, `K_2`, every `α ∈ (0, 1)` satisfies
//!
//! ```text
//! C_α ≤ max( C_Ω + (1−α) K_1,
//!            α K_2,
//!            ((1−α) K C_Σ + α C_Ω C_Σ + α(1−α)(K K_2 + C_Σ K_1)) / ((1−α) K + α C_Σ) )
//! ```
//!
//! with `K = K_{Σ,Ω}`. The same value is also reachable as
//! `inf_{t∈[0,1]} max(a + b t, c − d t)`; both routes are implemented so each
//! can guard the other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The five scalars feeding the interpolation bound.
///
/// `k_sigma_omega` may be `f64::INFINITY` when no bulk-controls-boundary
/// inequality is available.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub c_omega: f64,
    pub c_sigma: f64,
    pub k_sigma_omega: f64,
    pub k1: f64,
    pub k2: f64,
}

impl BoundConstants {
    pub fn new(c_omega: f64, c_sigma: f64, k_sigma_omega: f64, k1: f64, k2: f64) -> Result<Self> {
        let consts = BoundConstants {
            c_omega,
            c_sigma,
            k_sigma_omega,
            k1,
            k2,
        };
        consts.validate()?;
        Ok(consts)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::domain(format!(
                    "{name} must be finite and > 0, got {v}"
                )))
            }
        };
        let non_negative = |name: &str, v: f64| {
            if v.is_finite() && v >= 0.0 {
                Ok(())
            } else {
                Err(Error::domain(format!(
                    "{name} must be finite and >= 0, got {v}"
                )))
            }
        };
        positive("C_Omega", self.c_omega)?;
        positive("C_Sigma", self.c_sigma)?;
        if self.k_sigma_omega.is_nan() || self.k_sigma_omega <= 0.0 {
            return Err(Error::domain(format!(
                "K_Sigma,Omega must be > 0 (or +inf), got {}",
                self.k_sigma_omega
            )));
        }
        non_negative("K_1", self.k1)?;
        non_negative("K_2", self.k2)
    }
}

/// Mixing weight `α ∈ [0, 1]` between bulk and boundary.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Alpha(value))
        } else {
            Err(Error::domain(format!(
                "alpha must lie in [0, 1], got {value}"
            )))
        }
    }

    /// `α` restricted to the open interval `(0, 1)`.
    pub fn open(value: f64) -> Result<Self> {
        let a = Alpha::new(value)?;
        a.require_open()?;
        Ok(a)
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub(crate) fn require_open(self) -> Result<f64> {
        if self.0 > 0.0 && self.0 < 1.0 {
            Ok(self.0)
        } else {
            Err(Error::domain(format!(
                "alpha must lie in the open interval (0, 1), got {}",
                self.0
            )))
        }
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(v: f64) -> Result<Self> {
        Alpha::new(v)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

/// Sampled `α ↦ C_α` data: an upper bound per sample and optionally the
/// exact value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCurve {
    pub alphas: Vec<f64>,
    pub upper_bounds: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<f64>>,
}

impl BoundCurve {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.alphas.len();
        if self.upper_bounds.len() != n || self.exact.as_ref().is_some_and(|e| e.len() != n) {
            return Err(Error::InvariantViolation(
                "curve columns differ in length".into(),
            ));
        }
        if self
            .alphas
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return Err(Error::InvariantViolation(
                "alphas must be strictly increasing".into(),
            ));
        }
        if let Some(&b) = self
            .upper_bounds
            .iter()
            .find(|b| !(b.is_finite() && **b > 0.0))
        {
            return Err(Error::InvariantViolation(format!(
                "bound {b} is not finite and positive"
            )));
        }
        if let Some(exact) = &self.exact {
            for (i, (e, b)) in exact.iter().zip(&self.upper_bounds).enumerate() {
                if *e > b + 1e-9 {
                    return Err(Error::InvariantViolation(format!(
                        "exact value {e} exceeds bound {b} at alpha = {}",
                        self.alphas[i]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Uniform grid of `n` points on `(0, 1)`, offset from each endpoint by half
/// a step: `α_i = (i + 1/2) / n`.
pub fn alpha_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 samples, got {n}")));
    }
    Ok((0..n).map(|i| (i as f64 + 0.5) / n as f64).collect())
}

/// `inf_{t∈[0,1]} max(a + b t, c − d t)`.
///
/// `b = +∞` is accepted and yields the limit `max(a, c)`.
pub fn inf_max_affine(a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    for (name, v) in [("a", a), ("c", c), ("d", d)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::domain(format!(
                "{name} must be finite and > 0, got {v}"
            )));
        }
    }
    if b.is_nan() || b <= 0.0 {
        return Err(Error::domain(format!("b must be > 0, got {b}")));
    }
    let gap = c - a;
    if gap < 0.0 {
        return Ok(a);
    }
    if b.is_infinite() {
        return Ok(c);
    }
    if gap > b + d {
        Ok(c - d)
    } else {
        Ok((b * c + a * d) / (b + d))
    }
}

/// Closed-form interpolation bound on `C_α`, `α ∈ (0, 1)`.
pub fn interpolation_bound(consts: &BoundConstants, alpha: Alpha) -> Result<f64> {
    consts.validate()?;
    let a = alpha.require_open()?;
    let BoundConstants {
        c_omega,
        c_sigma,
        k_sigma_omega: k,
        k1,
        k2,
    } = *consts;
    let bulk = c_omega + (1.0 - a) * k1;
    let boundary_only = a * k2;
    let mixed = if k.is_infinite() {
        c_sigma + a * k2
    } else {
        ((1.0 - a) * k * c_sigma + a * c_omega * c_sigma + a * (1.0 - a) * (k * k2 + c_sigma * k1))
            / ((1.0 - a) * k + a * c_sigma)
    };
    Ok(bulk.max(boundary_only).max(mixed))
}

/// The same bound, evaluated as `inf_t max(a + b t, c − d t)` with
/// `a = C_Ω + (1−α)K_1`, `b = (1−α)K_{Σ,Ω}/α`, `c = C_Σ + αK_2`, `d = C_Σ`.
pub fn interpolation_bound_via_infmax(consts: &BoundConstants, alpha: Alpha) -> Result<f64> {
    consts.validate()?;
    let al = alpha.require_open()?;
    let a = consts.c_omega + (1.0 - al) * consts.k1;
    let b = (1.0 - al) / al * consts.k_sigma_omega;
    let c = consts.c_sigma + al * consts.k2;
    let d = consts.c_sigma;
    inf_max_affine(a, b, c, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Continuity {
    Continuous,
    Discontinuous,
    /// Neither sufficient criterion applies.
    Unknown,
}

/// Continuity of `α ↦ C_α` at `α = 0`.
///
/// `c_tilde_zero` is the inverse spectral gap of the process killed on `Σ`;
/// `C_Σ` below it forces a jump.
pub fn continuity_at_zero(consts: &BoundConstants, c_tilde_zero: Option<f64>) -> Continuity {
    if c_tilde_zero.is_some_and(|c0| consts.c_sigma < c0) {
        Continuity::Discontinuous
    } else if consts.c_sigma >= consts.c_omega + consts.k1 {
        Continuity::Continuous
    } else {
        Continuity::Unknown
    }
}

/// Continuity of `α ↦ C_α` at `α = 1`.
pub fn continuity_at_one(consts: &BoundConstants) -> Continuity {
    if consts.c_omega >= consts.k2 {
        Continuity::Continuous
    } else {
        Continuity::Unknown
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectangleLimit {
    /// `lim_{α→0} C_α`.
    pub limit: f64,
    pub discontinuous_at_zero: bool,
}

/// Rectangle `(0, b) × (0, 1)` with sticky diffusion on the bottom edge:
/// `lim_{α→0} C_α = max(b²/π², 4/π²)`, with a jump at zero iff `b < 2`.
pub fn rectangle_limit(b: f64) -> Result<RectangleLimit> {
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::domain(format!(
            "rectangle width b must be > 0, got {b}"
        )));
    }
    let pi2 = std::f64::consts::PI.powi(2);
    let c_sigma = b * b / pi2;
    let killed = 4.0 / pi2;
    Ok(RectangleLimit {
        limit: c_sigma.max(killed),
        discontinuous_at_zero: b < 2.0,
    })
}

/// Interpolation bound sampled on [`alpha_grid`]`(n_samples)`.
pub fn bound_curve(consts: &BoundConstants, n_samples: usize) -> Result<BoundCurve> {
    let alphas = alpha_grid(n_samples)?;
    let upper_bounds = alphas
        .iter()
        .map(|&a| interpolation_bound(consts, Alpha::new(a)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundCurve {
        alphas,
        upper_bounds,
        exact: None,
    })
}

/// Discrete measures, used to exercise the variance split behind the bound.
pub mod discrete {
    pub fn mean(weights: &[f64], f: &[f64]) -> f64 {
        weights.iter().zip(f).map(|(w, v)| w * v).sum()
    }

    pub fn variance(weights: &[f64], f: &[f64]) -> f64 {
        let m = mean(weights, f);
        weights
            .iter()
            .zip(f)
            .map(|(w, v)| w * (v - m) * (v - m))
            .sum()
    }

    /// `α Var_μ f + (1−α) Var_ν f + α(1−α)(E_μ f − E_ν f)²`, which equals the
    /// variance of `f` under `α μ + (1−α) ν`.
    pub fn split_variance(alpha: f64, mu: &[f64], nu: &[f64], f: &[f64]) -> f64 {
        let gap = mean(mu, f) - mean(nu, f);
        alpha * variance(mu, f)
            + (1.0 - alpha) * variance(nu, f)
            + alpha * (1.0 - alpha) * gap * gap
    }
}
