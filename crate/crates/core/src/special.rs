//! Bessel functions of the first kind for integer order.
//!
//! `J_m` is evaluated by its ascending series for small arguments and by
//! Miller's backward recurrence, normalized with `J_0 + 2 Σ J_2k = 1`,
//! everywhere else. [`bessel_j_quadrature`] integrates the defining
//! integral `J_m(x) = (1/π) ∫_0^π cos(m t − x sin t) dt` directly and is
//! kept as an independent cross-check; nothing on the hot path calls it.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: u32 = 200;

/// Largest supported argument.
pub const MAX_ARG: f64 = 1e4;

/// Below this argument the ascending series is used.
const SERIES_CUTOFF: f64 = 2.0;

const RESCALE_AT: f64 = 1e250;

/// Integer order `m` of a Bessel function, `0 <= m <= 200`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct BesselOrder(u32);

impl BesselOrder {
    pub fn new(m: u32) -> Result<Self> {
        if m > MAX_ORDER {
            return Err(Error::domain(format!(
                "Bessel order m = {m} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        Ok(BesselOrder(m))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for BesselOrder {
    type Error = Error;

    fn try_from(m: u32) -> Result<Self> {
        BesselOrder::new(m)
    }
}

impl From<BesselOrder> for u32 {
    fn from(m: BesselOrder) -> u32 {
        m.0
    }
}

fn check_arg(x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!(
            "Bessel argument must be finite and non-negative, got {x}"
        )));
    }
    if x > MAX_ARG {
        return Err(Error::domain(format!(
            "Bessel argument {x} exceeds the supported maximum {MAX_ARG}"
        )));
    }
    Ok(())
}

/// `J_m(x)`.
pub fn bessel_j(m: BesselOrder, x: f64) -> Result<f64> {
    check_arg(x)?;
    Ok(orders_up_to(m.0, x)[m.0 as usize])
}

/// `J_m'(x)`, from `J_0' = -J_1` and `J_m' = (J_{m-1} - J_{m+1}) / 2`.
pub fn bessel_j_prime(m: BesselOrder, x: f64) -> Result<f64> {
    Ok(bessel_j_and_prime(m, x)?.1)
}

/// `(J_m(x), J_m'(x))` from a single recurrence pass.
pub fn bessel_j_and_prime(m: BesselOrder, x: f64) -> Result<(f64, f64)> {
    check_arg(x)?;
    let m = m.0 as usize;
    let j = orders_up_to(m as u32 + 1, x);
    let prime = if m == 0 {
        -j[1]
    } else {
        0.5 * (j[m - 1] - j[m + 1])
    };
    Ok((j[m], prime))
}

/// `J_m''(x)` for `x > 0`, read off Bessel's equation:
/// `J_m'' = ((m² − x²) J_m − x J_m') / x²`.
pub fn bessel_j_second(m: BesselOrder, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x == 0.0 {
        return Err(Error::domain("J_m'' is evaluated for x > 0 only"));
    }
    let (j, jp) = bessel_j_and_prime(m, x)?;
    let mf = f64::from(m.0);
    Ok(((mf * mf - x * x) * j - x * jp) / (x * x))
}

/// Composite Simpson rule applied to the integral representation of `J_m`.
///
/// `n_panels` must be even and at least 64. The integrand extends to a smooth
/// even periodic function, so convergence is much faster than the nominal
/// fourth order once `n_panels` resolves the oscillation.
pub fn bessel_j_quadrature(m: BesselOrder, x: f64, n_panels: usize) -> Result<f64> {
    check_arg(x)?;
    if n_panels < 64 || !n_panels.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "n_panels must be even and >= 64, got {n_panels}"
        )));
    }
    let mf = f64::from(m.0);
    let h = PI / n_panels as f64;
    let integrand = |t: f64| (mf * t - x * t.sin()).cos();
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..n_panels {
        let v = integrand(i as f64 * h);
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    let sum = integrand(0.0) + integrand(PI) + 4.0 * odd + 2.0 * even;
    Ok(sum * h / 3.0 / PI)
}

/// `[J_0(x), ..., J_top(x)]`. Caller guarantees `x` is in range.
fn orders_up_to(top: u32, x: f64) -> Vec<f64> {
    let top = top as usize;
    if x == 0.0 {
        let mut out = vec![0.0; top + 1];
        out[0] = 1.0;
        return out;
    }
    if x < SERIES_CUTOFF {
        return (0..=top).map(|m| series(m, x)).collect();
    }
    miller(top, x)
}

fn series(m: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    // (x/2)^m / m!
    let mut lead = 1.0;
    for i in 1..=m {
        lead *= half / i as f64;
    }
    if lead == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= q / (k as f64 * (k + m) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn miller(top: usize, x: f64) -> Vec<f64> {
    let scale = (top as f64).max(x);
    let mut start = (scale + 30.0 + (40.0 * scale).sqrt()).ceil() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut vals = vec![0.0; start + 1];
    let mut next = 0.0;
    let mut cur = 1e-30;
    vals[start] = cur;
    let mut norm = 0.0;
    for k in (1..=start).rev() {
        let prev = 2.0 * k as f64 / x * cur - next;
        next = cur;
        cur = prev;
        vals[k - 1] = cur;
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > RESCALE_AT {
            let s = 1.0 / RESCALE_AT;
            for v in vals[k - 1..].iter_mut() {
                *v *= s;
            }
            next *= s;
            cur *= s;
            norm *= s;
        }
    }
    norm += vals[0];
    vals.truncate(top + 1);
    for v in vals.iter_mut() {
        *v /= norm;
    }
    vals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(m: u32) -> BesselOrder {
        BesselOrder::new(m).unwrap()
    }

    fn quad(m: u32, x: f64) -> f64 {
        bessel_j_quadrature(ord(m), x, 1024).unwrap()
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(ord(0), 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(ord(1), 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(ord(0), 0.0).unwrap(), 0.0);
        assert!((bessel_j_prime(ord(1), 0.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn first_zero_of_j0() {
        // bisect the quadrature oracle, independently of the series/recurrence
        let (mut a, mut b) = (2.0, 3.0);
        for _ in 0..60 {
            let mid = 0.5 * (a + b);
            if quad(0, a) * quad(0, mid) <= 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let oracle_root = 0.5 * (a + b);
        assert!((oracle_root - 2.404825557695773).abs() < 1e-12);
        assert!(bessel_j(ord(0), 2.404825557695773).unwrap().abs() < 1e-10);
    }

    #[test]
    fn first_extremum_of_j1() {
        let h = 1e-5;
        let d = |x: f64| (quad(1, x + h) - quad(1, x - h)) / (2.0 * h);
        let (mut a, mut b) = (1.5, 2.2);
        for _ in 0..50 {
            let mid = 0.5 * (a + b);
            if d(a) * d(mid) <= 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        assert!((0.5 * (a + b) - 1.841183781340659).abs() < 1e-8);
        assert!(bessel_j_prime(ord(1), 1.841183781340659).unwrap().abs() < 1e-9);
    }

    #[test]
    fn second_derivative() {
        let v = bessel_j_second(ord(0), 1e-6).unwrap();
        assert!((v + 0.5).abs() < 1e-5, "{v}");

        let h = 1e-4;
        let fd = (quad(2, 1.0 + h) - 2.0 * quad(2, 1.0) + quad(2, 1.0 - h)) / (h * h);
        assert!((bessel_j_second(ord(2), 1.0).unwrap() - fd).abs() < 1e-6);

        let x = 1.841183781340659;
        let expected = (1.0 - x * x) * bessel_j(ord(1), x).unwrap() / (x * x);
        assert!((bessel_j_second(ord(1), x).unwrap() - expected).abs() < 1e-9);

        assert!(bessel_j_second(ord(1), 0.0).is_err());
    }

    #[test]
    fn quadrature_examples() {
        assert!((bessel_j_quadrature(ord(0), 0.0, 64).unwrap() - 1.0).abs() < 1e-14);
        assert!(bessel_j_quadrature(ord(1), 0.0, 256).unwrap().abs() < 1e-14);
        let q = bessel_j_quadrature(ord(3), 5.0, 512).unwrap();
        assert!((q - bessel_j(ord(3), 5.0).unwrap()).abs() < 1e-10);
        assert!(bessel_j_quadrature(ord(0), 1.0, 63).is_err());
        assert!(bessel_j_quadrature(ord(0), 1.0, 65).is_err());
        assert!(bessel_j_quadrature(ord(0), 1.0, 32).is_err());
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_j(ord(0), -1.0).is_err());
        assert!(bessel_j(ord(0), f64::NAN).is_err());
        assert!(bessel_j(ord(0), f64::INFINITY).is_err());
        assert!(bessel_j(ord(0), 2e4).is_err());
        assert!(BesselOrder::new(201).is_err());
        assert!(BesselOrder::new(200).is_ok());
    }

    #[test]
    fn series_and_recurrence_meet_at_cutoff() {
        for m in 0..=12 {
            let below = series(m, SERIES_CUTOFF);
            let above = miller(m, SERIES_CUTOFF)[m];
            assert!((below - above).abs() < 1e-14, "m={m}: {below} vs {above}");
        }
    }

    #[test]
    fn large_argument_and_order() {
        // J_0 and J_1 are bounded by 1 and 1/√2; the sum rule must still hold
        for &x in &[100.0, 1234.5, 9999.0] {
            let j = orders_up_to(2, x);
            assert!(j[0].abs() <= 1.0 && j[1].abs() <= 1.0);
            let q = bessel_j_quadrature(ord(0), x, 1 << 16).unwrap();
            assert!((j[0] - q).abs() < 1e-9, "x={x}: {} vs {q}", j[0]);
        }
        let v = bessel_j(ord(200), 50.0).unwrap();
        assert!((0.0..1e-50).contains(&v));
        let v = bessel_j(ord(200), 250.0).unwrap();
        let q = bessel_j_quadrature(ord(200), 250.0, 4096).unwrap();
        assert!((v - q).abs() < 1e-12);
    }

    #[test]
    fn recurrence_and_ode_residuals() {
        for m in 1..=10u32 {
            for i in 5..=300 {
                let x = i as f64 * 0.1;
                let j = |k: u32| bessel_j(ord(k), x).unwrap();
                let r = j(m - 1) + j(m + 1) - 2.0 * f64::from(m) / x * j(m);
                assert!(r.abs() <= 1e-9, "recurrence m={m} x={x}: {r}");
                let jp = bessel_j_prime(ord(m), x).unwrap();
                let jpp = bessel_j_second(ord(m), x).unwrap();
                let mf = f64::from(m);
                let ode = x * x * jpp + x * jp + (x * x - mf * mf) * j(m);
                assert!(ode.abs() <= 1e-8, "ode m={m} x={x}: {ode}");
            }
        }
    }
}
