//! Upper bounds on the optimal Poincaré constant `C_α` (equivalently, lower
//! bounds on the spectral gap) of Brownian motion with sticky-reflecting
//! boundary diffusion.
//!
//! The generic bound lives in [`interpolation`]; [`models`] supplies the
//! constants for the ball, manifolds under curvature bounds, the disk with a
//! partial sticky arc, and the disk with a needle. [`disk`] solves the Bessel
//! secular equation for the exact planar gap, against which the bounds are
//! checked.

pub mod disk;
pub mod error;
pub mod interpolation;
pub mod models;
pub mod roots;
pub mod special;

pub use disk::{
    disk_exact_gap, disk_secular_fn, disk_secular_fn_full, exact_curve, neumann_disk_gap,
    neumann_disk_gap_with, sigma_omega, DiskEigenConfig, ModeRoot,
};
pub use error::{Error, Result};
pub use interpolation::{
    alpha_grid, bound_curve, continuity_at_one, continuity_at_zero, inf_max_affine,
    interpolation_bound, interpolation_bound_via_infmax, rectangle_limit, Alpha, BoundConstants,
    BoundCurve, Continuity, RectangleLimit,
};
pub use roots::{all_roots_in, smallest_positive_root, RootResult, RootSearchConfig};
pub use special::{
    bessel_j, bessel_j_and_prime, bessel_j_prime, bessel_j_quadrature, bessel_j_second, BesselOrder,
};
