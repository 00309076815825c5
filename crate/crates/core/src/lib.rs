//! Wigner random matrices, their spectra, and kernel estimators of the
//! semicircle law.
//!
//! The pipeline is: pick an [`EntryDistribution`], build `W_n = X / b_n`
//! with [`build_wigner`], compute its [`Spectrum`] with
//! [`symmetric_eigenvalues`], then estimate the limiting density and
//! distribution function with [`kde_at`] / [`kcdf_at`] and compare against
//! [`semicircle_pdf`] / [`semicircle_cdf`] using the distances in
//! [`metrics`]. Heavy-tailed entries (infinite variance, domain of
//! attraction of the normal law) are supported through the
//! `log_tail_heavy` law and the infimum definition of `b_n`.
//!
//! ```
//! use wigner_kde::{build_wigner, symmetric_eigenvalues, kde_at, semicircle_pdf,
//!                  bandwidth_default, EntryDistribution, KernelSpec};
//!
//! let w = build_wigner(EntryDistribution::ShiftedExponential, 200, 7).unwrap();
//! let spectrum = symmetric_eigenvalues(&w.matrix).unwrap();
//! let h = bandwidth_default(200).unwrap();
//! let f0 = kde_at(&spectrum, &KernelSpec::gaussian(), h, 0.0).unwrap();
//! assert!((f0 - semicircle_pdf(0.0)).abs() < 0.1);
//! ```

pub mod eigen;
pub mod ensembles;
pub mod error;
pub mod estimators;
pub mod experiment;
pub mod matrix;
pub mod metrics;
pub mod quadrature;
pub mod reductions;
mod special;
pub mod transforms;

pub use eigen::{symmetric_eigenvalues, tridiagonalize, Spectrum, Tridiagonal};
pub use ensembles::{
    build_wigner, sample_raw, seeded_rng, EntryDistribution, ScalingConstant, ScalingMode, Wigner,
};
pub use error::{Error, Result};
pub use estimators::{
    bandwidth_default, curve, esd_at, kcdf_at, kde_at, linear_grid, semicircle_cdf,
    semicircle_pdf, BandwidthRule, CurveKind, EstimatorCurve, KernelSpec,
};
pub use matrix::SymmetricMatrix;
pub use metrics::{
    kolmogorov_distance, kolmogorov_esd, kolmogorov_spectra, levy_cube_trace_bound,
    levy_distance, rank_inequality_check, semicircle_grid, sup_density_error, Support,
};
pub use reductions::{
    center_and_rescale, lindeberg_diagnostic, reduction_chain, truncate_entries, zero_diagonal,
};
pub use transforms::{cauchy_kernel_identity_check, stieltjes_esd, stieltjes_semicircle, ComplexPoint};
