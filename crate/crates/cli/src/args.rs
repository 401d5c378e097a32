use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "stickygap",
    version,
    about = "Poincaré-constant bounds and exact spectral gaps for sticky-reflecting Brownian motion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an upper bound on C_alpha at one alpha or along a curve.
    Bound {
        #[command(subcommand)]
        model: BoundModel,
    },
    /// Emit the data behind a figure as CSV.
    Figure(FigureArgs),
    /// Solve one of the secular equations.
    Solve {
        #[command(subcommand)]
        which: SolveTarget,
    },
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Emit the JSON record instead of CSV.
    #[arg(long)]
    pub json: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Either a single alpha or a curve of N midpoint samples.
#[derive(Debug, Clone, Args)]
#[group(id = "at", required = true, multiple = false)]
pub struct AlphaOrCurve {
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Sample the bound at alpha = (i + 1/2)/N, i = 0..N.
    #[arg(long, value_name = "N")]
    pub curve: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum BoundModel {
    /// Unit ball in R^d, fully sticky sphere.
    #[command(group(ArgGroup::new("at").required(true).args(["gamma", "alpha", "curve"])))]
    Ball {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        beta: f64,
        /// Inward push rate; alpha = gamma/(d + gamma).
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_name = "N")]
        curve: Option<usize>,
        /// Poincaré constant of the ball; defaults to 1/sigma_Omega when d = 2.
        #[arg(long = "c-omega")]
        c_omega: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Manifold with Ric >= k_R and second fundamental form >= k_2.
    Manifold {
        #[arg(long)]
        d: u32,
        #[arg(long = "k-r")]
        k_r: f64,
        #[arg(long = "k-2")]
        k_2: f64,
        #[arg(long = "c-omega")]
        c_omega: f64,
        #[arg(long = "c-sigma")]
        c_sigma: f64,
        /// |Omega| / |boundary|.
        #[arg(long = "vol-ratio")]
        vol_ratio: f64,
        #[command(flatten)]
        at: AlphaOrCurve,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Unit disk with sticky arc |theta| <= delta*pi.
    PartialDisk {
        #[arg(long)]
        delta: f64,
        #[command(flatten)]
        at: AlphaOrCurve,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Unit disk with a needle of length L.
    Needle {
        #[arg(long = "L")]
        length: f64,
        #[arg(long)]
        beta: f64,
        #[command(flatten)]
        at: AlphaOrCurve,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The interpolation bound from five raw constants.
    Generic {
        #[arg(long = "c-omega")]
        c_omega: f64,
        #[arg(long = "c-sigma")]
        c_sigma: f64,
        /// Trace constant K_{Sigma,Omega}; `inf` is allowed.
        #[arg(long)]
        k: f64,
        #[arg(long)]
        k1: f64,
        #[arg(long)]
        k2: f64,
        #[command(flatten)]
        at: AlphaOrCurve,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    /// Exact C_alpha and the closed-form bound for the unit disk.
    Fig1,
    /// Partial-disk bound, delta = 0.5.
    Fig2a,
    /// Partial-disk bound, delta = 0.9.
    Fig2b,
}

impl Figure {
    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2a => "fig2a",
            Figure::Fig2b => "fig2b",
        }
    }
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    pub which: Figure,
    #[arg(long, default_value_t = 99)]
    pub n: usize,
    /// Scan every Bessel mode up to the cap instead of stopping early.
    #[arg(long = "strict-scan")]
    pub strict_scan: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum SolveTarget {
    /// First nonzero Neumann eigenvalue sigma_Omega of the unit disk.
    NeumannGap {
        #[arg(long = "strict-scan")]
        strict_scan: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Spectral gap of the sticky-reflecting disk at the given alpha.
    DiskGap {
        #[arg(long)]
        alpha: f64,
        #[arg(long = "strict-scan")]
        strict_scan: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Smallest positive eigenvalue gamma_L on the circle-plus-needle graph.
    NeedleGamma {
        #[arg(long = "L")]
        length: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Smallest delta with 4 delta^2 = 1/sigma_Omega + K_1(delta).
    PartialThreshold {
        #[command(flatten)]
        output: OutputArgs,
    },
}
