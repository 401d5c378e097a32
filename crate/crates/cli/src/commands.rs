use std::path::PathBuf;

use stickygap::models::{
    ball_bound, ball_constants, ball_formula, continuity_margin, manifold_bound,
    manifold_constants, manifold_m1, manifold_m2, needle_bound, needle_constants, needle_gamma,
    needle_regime, needle_regime_thresholds, needle_root_config, partial_disk_bound,
    partial_disk_constants, partial_disk_continuity_threshold, reilly_gap_lower_bound, BallSpec,
    ManifoldSpec, NeedleRegime, NeedleSpec, PartialDiskSpec,
};
use stickygap::{
    alpha_grid, continuity_at_one, continuity_at_zero, disk_exact_gap, exact_curve,
    interpolation_bound, neumann_disk_gap_with, Alpha, BoundConstants, BoundCurve, Continuity,
    DiskEigenConfig, ModeRoot, RootResult,
};

use crate::args::{AlphaOrCurve, BoundModel, Command, Figure, FigureArgs, OutputArgs, SolveTarget};
use crate::record::{curve_csv, OutputRecord};
use crate::CliError;

pub const M_MAX_ENV: &str = "STICKYGAP_M_MAX";

/// A finished command: the record, and for figures the plain data table
/// that is written unless `--json` is given.
pub struct Outcome {
    pub record: OutputRecord,
    pub table: Option<String>,
    pub output: OutputArgs,
}

impl Outcome {
    pub fn render(&self) -> String {
        match (&self.table, self.output.json) {
            (_, true) => self.record.to_json(),
            (Some(table), false) => table.clone(),
            (None, false) => self.record.to_csv(),
        }
    }

    pub fn destination(&self) -> Option<&PathBuf> {
        self.output.out.as_ref()
    }
}

pub fn execute(command: Command, m_max_env: Option<&str>) -> Result<Outcome, CliError> {
    let outcome = match command {
        Command::Bound { model } => bound(model)?,
        Command::Figure(args) => figure(args, m_max_env)?,
        Command::Solve { which } => solve(which, m_max_env)?,
    };
    let missing = outcome.record.missing_provenance();
    if !missing.is_empty() {
        return Err(CliError::Numeric(format!(
            "results without provenance: {missing:?}"
        )));
    }
    Ok(outcome)
}

fn disk_config(strict: bool, m_max_env: Option<&str>) -> Result<DiskEigenConfig, CliError> {
    let mut cfg = DiskEigenConfig {
        strict,
        ..Default::default()
    };
    if let Some(raw) = m_max_env {
        cfg.m_max = raw.trim().parse().map_err(|_| {
            CliError::Input(format!(
                "{M_MAX_ENV} must be a non-negative integer, got {raw:?}"
            ))
        })?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn continuity_name(c: Continuity) -> &'static str {
    match c {
        Continuity::Continuous => "continuous",
        Continuity::Discontinuous => "discontinuous",
        Continuity::Unknown => "unknown",
    }
}

fn record_constants(rec: &mut OutputRecord, c: &BoundConstants, anchors: [&str; 5]) {
    rec.result("c_omega", c.c_omega, anchors[0])
        .result("c_sigma", c.c_sigma, anchors[1])
        .result("k_sigma_omega", c.k_sigma_omega, anchors[2])
        .result("k1", c.k1, anchors[3])
        .result("k2", c.k2, anchors[4]);
}

fn sample<F>(n: usize, f: F) -> Result<BoundCurve, CliError>
where
    F: Fn(Alpha) -> stickygap::Result<f64>,
{
    let alphas = alpha_grid(n)?;
    let upper_bounds = alphas
        .iter()
        .map(|&a| f(Alpha::new(a)?))
        .collect::<stickygap::Result<Vec<_>>>()?;
    Ok(BoundCurve {
        alphas,
        upper_bounds,
        exact: None,
    })
}

/// Single-α evaluation or a curve, depending on which flag was given.
fn at_alpha_or_curve<F>(
    rec: &mut OutputRecord,
    at: &AlphaOrCurve,
    anchor: &str,
    f: F,
) -> Result<(), CliError>
where
    F: Fn(Alpha) -> stickygap::Result<f64>,
{
    rec.echo_opt("alpha", at.alpha).echo_opt("curve", at.curve);
    match (at.alpha, at.curve) {
        (Some(a), _) => {
            let v = f(Alpha::open(a)?)?;
            rec.result("upper_bound", v, anchor);
        }
        (None, Some(n)) => {
            rec.set_curve(sample(n, f)?, anchor);
        }
        (None, None) => unreachable!("clap requires --alpha or --curve"),
    }
    Ok(())
}

const INTERP: &str = "max(C_Omega + (1-a)K1, a K2, ((1-a)K C_Sigma + a C_Omega C_Sigma + a(1-a)(K K2 + C_Sigma K1)) / ((1-a)K + a C_Sigma))";
const SIGMA_ANCHOR: &str =
    "1/sigma_Omega, sigma_Omega = j'_{1,1}^2 the first nonzero Neumann eigenvalue of the unit disk";

fn bound(model: BoundModel) -> Result<Outcome, CliError> {
    match model {
        BoundModel::Ball {
            d,
            beta,
            gamma,
            alpha,
            curve,
            c_omega,
            output,
        } => {
            let mut rec = OutputRecord::new("bound ball");
            rec.echo("d", d)
                .echo("beta", beta)
                .echo_opt("gamma", gamma)
                .echo_opt("alpha", alpha)
                .echo_opt("curve", curve)
                .echo_opt("c_omega", c_omega);
            // γ only fixes α; the constants do not depend on it
            let spec = BallSpec::new(d, beta, gamma.unwrap_or(1.0))?;
            let consts = ball_constants(&spec, c_omega)?;
            let c_omega_anchor = if c_omega.is_some() {
                "supplied via --c-omega"
            } else {
                SIGMA_ANCHOR
            };
            record_constants(
                &mut rec,
                &consts,
                [c_omega_anchor, "1/(beta(d-1))", "1/d", "(d+1)/(4d^2)", "0"],
            );
            let formula = "ball bound max(C_Omega + (1-a)(d+1)/(4d^2), (4(1-a)d + 4a d^2 C_Omega + a(1-a)(d+1)) / (4d(a d + (1-a) beta (d-1))))";
            if let Some(g) = gamma {
                let spec = BallSpec::new(d, beta, g)?;
                rec.result("alpha", spec.alpha()?.get(), "alpha = gamma/(d+gamma)")
                    .result("upper_bound", ball_bound(&spec, c_omega)?, formula);
            } else if let Some(a) = alpha {
                rec.result(
                    "upper_bound",
                    ball_formula(d, beta, consts.c_omega, Alpha::open(a)?)?,
                    formula,
                );
            } else if let Some(n) = curve {
                rec.set_curve(
                    sample(n, |a| ball_formula(d, beta, consts.c_omega, a))?,
                    formula,
                );
            }
            rec.result(
                "continuity_at_one",
                continuity_name(continuity_at_one(&consts)),
                "C_alpha continuous at alpha = 1 when C_Omega >= K2",
            );
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        BoundModel::Manifold {
            d,
            k_r,
            k_2,
            c_omega,
            c_sigma,
            vol_ratio,
            at,
            output,
        } => {
            let mut rec = OutputRecord::new("bound manifold");
            rec.echo("d", d)
                .echo("k_r", k_r)
                .echo("k_2", k_2)
                .echo("c_omega", c_omega)
                .echo("c_sigma", c_sigma)
                .echo("vol_ratio", vol_ratio);
            let spec = ManifoldSpec::new(d, k_r, k_2, c_omega, c_sigma, vol_ratio)?;
            let consts = manifold_constants(&spec)?;
            record_constants(
                &mut rec,
                &consts,
                [
                    "supplied via --c-omega",
                    "supplied via --c-sigma",
                    "2/k_2, Steklov lower bound on convex boundaries",
                    "(d-1)/(d k_R), Lichnerowicz",
                    "0",
                ],
            );
            let min_anchor = "min(M1, M2)";
            at_alpha_or_curve(&mut rec, &at, min_anchor, |a| manifold_bound(&spec, a))?;
            if let Some(a) = at.alpha {
                let a = Alpha::open(a)?;
                rec.result(
                    "m1",
                    manifold_m1(&spec, a)?,
                    "interpolation bound with manifold constants",
                )
                .result(
                    "m2",
                    manifold_m2(&spec, a)?,
                    "max((3d-1)(1-a)/(d a k_2) |Omega|/|boundary|, (d-1)/(d k_R)), Reilly formula",
                )
                .result(
                    "reilly_gap_lower_bound",
                    reilly_gap_lower_bound(&spec, a)?,
                    "min(d k_2 gamma/(3d-1), d k_R/(d-1)), gamma = a/(1-a) |boundary|/|Omega|",
                );
            }
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        BoundModel::PartialDisk { delta, at, output } => {
            let mut rec = OutputRecord::new("bound partial-disk");
            rec.echo("delta", delta);
            let spec = PartialDiskSpec::new(delta)?;
            let consts = partial_disk_constants(&spec)?;
            record_constants(
                &mut rec,
                &consts,
                [
                    SIGMA_ANCHOR,
                    "4 delta^2",
                    "1/(2 delta)",
                    "(sqrt(1-delta) pi + sqrt(3/delta)/4)^2",
                    "0",
                ],
            );
            at_alpha_or_curve(&mut rec, &at, INTERP, |a| partial_disk_bound(&spec, a))?;
            rec.result(
                "continuity_margin",
                continuity_margin(delta),
                "4 delta^2 - 1/sigma_Omega - K1(delta); >= 0 means continuous at alpha = 0",
            )
            .result(
                "continuity_at_zero",
                continuity_name(continuity_at_zero(&consts, None)),
                "C_alpha continuous at alpha = 0 when C_Sigma >= C_Omega + K1",
            );
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        BoundModel::Needle {
            length,
            beta,
            at,
            output,
        } => {
            let mut rec = OutputRecord::new("bound needle");
            rec.echo("L", length).echo("beta", beta);
            let spec = NeedleSpec::new(length, beta)?;
            let gamma = needle_gamma(length, &needle_root_config())?;
            let g = gamma.root;
            rec.result(
                "gamma_l",
                g,
                "smallest positive zero of 2cos(sL)(1-cos 2pi s) + sin(sL) sin 2pi s, s = sqrt(gamma)",
            );
            let consts = needle_constants(&spec, g)?;
            record_constants(
                &mut rec,
                &consts,
                [
                    SIGMA_ANCHOR,
                    "1/(beta gamma_L)",
                    "inf, no trace inequality",
                    "3/8",
                    "L^2(pi+L)/(beta(2pi+L))",
                ],
            );
            at_alpha_or_curve(
                &mut rec,
                &at,
                "max(C_Omega + (1-a)K1, C_Sigma + a K2)",
                |a| needle_bound(&spec, g, a),
            )?;
            let (lower, upper) = needle_regime_thresholds(length, g)?;
            let regime = match needle_regime(&spec, g)? {
                NeedleRegime::BulkDominates => "bulk-dominates",
                NeedleRegime::BoundaryDominates => "boundary-dominates",
                NeedleRegime::Mixed => "mixed",
            };
            rec.result(
                "regime",
                regime,
                "beta against the thresholds beta_lower and beta_upper",
            )
            .result(
                "beta_lower",
                lower,
                "(1/gamma_L)/(1/sigma_Omega + 3/8): boundary term dominates for every alpha below it",
            )
            .result(
                "beta_upper",
                upper,
                "sigma_Omega (1/gamma_L + L^2(pi+L)/(2pi+L)): bulk term dominates for every alpha above it",
            );
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        BoundModel::Generic {
            c_omega,
            c_sigma,
            k,
            k1,
            k2,
            at,
            output,
        } => {
            let mut rec = OutputRecord::new("bound generic");
            rec.echo("c_omega", c_omega)
                .echo("c_sigma", c_sigma)
                .echo("k", k)
                .echo("k1", k1)
                .echo("k2", k2);
            let consts = BoundConstants::new(c_omega, c_sigma, k, k1, k2)?;
            at_alpha_or_curve(&mut rec, &at, INTERP, |a| interpolation_bound(&consts, a))?;
            rec.result(
                "continuity_at_zero",
                continuity_name(continuity_at_zero(&consts, None)),
                "C_alpha continuous at alpha = 0 when C_Sigma >= C_Omega + K1",
            )
            .result(
                "continuity_at_one",
                continuity_name(continuity_at_one(&consts)),
                "C_alpha continuous at alpha = 1 when C_Omega >= K2",
            );
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
    }
}

fn figure(args: FigureArgs, m_max_env: Option<&str>) -> Result<Outcome, CliError> {
    let FigureArgs {
        which,
        n,
        strict_scan,
        output,
    } = args;
    let mut rec = OutputRecord::new(format!("figure {}", which.name()));
    rec.echo("n", n);
    let curve = match which {
        Figure::Fig1 => {
            rec.echo("strict_scan", strict_scan);
            let cfg = disk_config(strict_scan, m_max_env)?;
            let curve = exact_curve(n, &cfg)?;
            curve.validate()?;
            rec.set_curve(
                curve.clone(),
                "exact: 1/lambda_{alpha,*} from the Bessel secular equation; upper_bound: (8(1-a)s + 16a + 3a(1-a)s)/(8(1+a)s), s = sigma_Omega",
            );
            curve
        }
        Figure::Fig2a | Figure::Fig2b => {
            let delta = if which == Figure::Fig2a { 0.5 } else { 0.9 };
            rec.echo("delta", delta);
            let spec = PartialDiskSpec::new(delta)?;
            let curve = sample(n, |a| partial_disk_bound(&spec, a))?;
            rec.set_curve(curve.clone(), INTERP);
            curve
        }
    };
    Ok(Outcome {
        record: rec,
        table: Some(curve_csv(&curve)),
        output,
    })
}

fn record_root(rec: &mut OutputRecord, root: &RootResult, what: &str) {
    rec.result(
        "residual",
        root.residual,
        &format!("|f| at the returned {what}"),
    )
    .result(
        "bracket_lo",
        root.bracket.0,
        &format!("sign-change bracket for {what}, lower end"),
    )
    .result(
        "bracket_hi",
        root.bracket.1,
        &format!("sign-change bracket for {what}, upper end"),
    )
    .result(
        "converged",
        root.converged,
        "false only for a tangential zero located without a bracket",
    );
}

fn record_mode_root(rec: &mut OutputRecord, m: &ModeRoot) {
    rec.result("mode", m.mode.get(), "Fourier mode attaining the minimum")
        .result(
            "sqrt_lambda",
            m.root.root,
            "root x of the mode's secular equation, lambda = x^2",
        );
    record_root(rec, &m.root, "sqrt(lambda)");
}

fn solve(which: SolveTarget, m_max_env: Option<&str>) -> Result<Outcome, CliError> {
    match which {
        SolveTarget::NeumannGap {
            strict_scan,
            output,
        } => {
            let mut rec = OutputRecord::new("solve neumann-gap");
            rec.echo("strict_scan", strict_scan);
            let gap = neumann_disk_gap_with(&disk_config(strict_scan, m_max_env)?)?;
            rec.result(
                "sigma_omega",
                gap.lambda,
                "smallest positive root of J_m'(sqrt(lambda)) = 0 over modes m",
            )
            .result("c_omega", 1.0 / gap.lambda, "1/sigma_Omega");
            record_mode_root(&mut rec, &gap);
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        SolveTarget::DiskGap {
            alpha,
            strict_scan,
            output,
        } => {
            let mut rec = OutputRecord::new("solve disk-gap");
            rec.echo("alpha", alpha).echo("strict_scan", strict_scan);
            let a = Alpha::new(alpha)?;
            if a.get() >= 1.0 {
                return Err(CliError::Input(format!(
                    "disk-gap requires 0 <= alpha < 1, got {alpha}"
                )));
            }
            let gap = disk_exact_gap(a, &disk_config(strict_scan, m_max_env)?)?;
            rec.result(
                "lambda_star",
                gap.lambda,
                "smallest positive root over modes m of ((m^2 - x^2)/x) J_m(x) + (2a/(1-a)) J_m'(x), lambda = x^2",
            )
            .result("c_alpha", 1.0 / gap.lambda, "C_alpha = 1/lambda_{alpha,*}");
            record_mode_root(&mut rec, &gap);
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        SolveTarget::NeedleGamma { length, output } => {
            let mut rec = OutputRecord::new("solve needle-gamma");
            rec.echo("L", length);
            let root = needle_gamma(length, &needle_root_config())?;
            rec.result(
                "gamma_l",
                root.root,
                "smallest positive zero of 2cos(sL)(1-cos 2pi s) + sin(sL) sin 2pi s, s = sqrt(gamma)",
            );
            record_root(&mut rec, &root, "gamma_L");
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
        SolveTarget::PartialThreshold { output } => {
            let mut rec = OutputRecord::new("solve partial-threshold");
            let root = partial_disk_continuity_threshold()?;
            rec.result(
                "delta",
                root.root,
                "smallest delta with 4 delta^2 = 1/sigma_Omega + (sqrt(1-delta) pi + sqrt(3/delta)/4)^2",
            );
            record_root(&mut rec, &root, "delta");
            Ok(Outcome {
                record: rec,
                table: None,
                output,
            })
        }
    }
}
