//! Distances between distribution functions and the matrix perturbation
//! inequalities used to compare spectra of nearby matrices.

use crate::eigen::{symmetric_eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::estimators::{esd_at, semicircle_pdf};
use crate::matrix::SymmetricMatrix;

/// Where to look for the supremum in [`kolmogorov_distance`].
#[derive(Debug, Clone, Copy)]
pub enum Support<'a> {
    /// Every jump point of the step function(s) involved. The supremum is
    /// taken exactly: each point is evaluated together with its left limit.
    Jumps(&'a [f64]),
    /// Dense grid for two continuous cdfs; refined by golden-section search
    /// around the coarse maximum.
    Grid(&'a [f64]),
}

/// `sup_x |F(x) - G(x)|`.
pub fn kolmogorov_distance(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    support: Support<'_>,
) -> Result<f64> {
    let gap = |x: f64| (f(x) - g(x)).abs();
    match support {
        Support::Jumps(points) => {
            if points.is_empty() {
                return Err(Error::Domain("no jump points supplied".into()));
            }
            Ok(points
                .iter()
                .map(|&x| gap(x).max(gap(x.next_down())))
                .fold(0.0, f64::max))
        }
        Support::Grid(grid) => {
            if grid.is_empty() {
                return Err(Error::Domain("empty grid".into()));
            }
            let values: Vec<f64> = grid.iter().map(|&x| gap(x)).collect();
            let (best, &coarse) = values
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(b.1))
                .expect("nonempty");
            if grid.len() < 2 {
                return Ok(coarse);
            }
            let lo = grid[best.saturating_sub(1)];
            let hi = grid[(best + 1).min(grid.len() - 1)];
            Ok(coarse.max(golden_section_max(&gap, lo, hi, 1e-12)))
        }
    }
}

fn golden_section_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    fc.max(fd)
}

/// Kolmogorov distance between the ESD of `spectrum` and a continuous cdf,
/// evaluated exactly at the jumps.
pub fn kolmogorov_esd(spectrum: &Spectrum, cdf: impl Fn(f64) -> f64) -> f64 {
    kolmogorov_distance(|x| esd_at(spectrum, x), cdf, Support::Jumps(spectrum.eigenvalues()))
        .expect("spectrum is nonempty")
}

/// Kolmogorov distance between two ESDs.
pub fn kolmogorov_spectra(a: &Spectrum, b: &Spectrum) -> f64 {
    let jumps = merged_points(a.eigenvalues(), b.eigenvalues());
    kolmogorov_distance(|x| esd_at(a, x), |x| esd_at(b, x), Support::Jumps(&jumps))
        .expect("spectra are nonempty")
}

fn merged_points(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut all: Vec<f64> = a.iter().chain(b).copied().collect();
    all.sort_by(f64::total_cmp);
    all.dedup();
    all
}

/// Lévy distance `inf{e > 0 : F(x-e) - e <= G(x) <= F(x+e) + e for all x}`,
/// by bisection on `e` to within `tolerance`.
///
/// The universal check runs over `knots`, their shifts by `±e`, and their
/// left neighbours. `knots` must contain every jump of either cdf; for
/// continuous cdfs add a dense grid.
pub fn levy_distance(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    knots: &[f64],
    tolerance: f64,
) -> Result<f64> {
    if !(tolerance > 0.0) {
        return Err(Error::Domain(format!("tolerance must be > 0, got {tolerance}")));
    }
    if knots.is_empty() {
        return Err(Error::Domain("no knots supplied".into()));
    }
    let mut knots = knots.to_vec();
    knots.sort_by(f64::total_cmp);
    knots.dedup();
    for (name, h) in [("first", &f as &dyn Fn(f64) -> f64), ("second", &g)] {
        let vals: Vec<f64> = knots.iter().map(|&x| h(x)).collect();
        if vals.windows(2).any(|w| w[1] < w[0]) || vals.iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::Domain(format!("{name} argument is not a distribution function")));
        }
    }

    const SLACK: f64 = 1e-15;
    let feasible = |eps: f64| {
        let holds_at = |x: f64| {
            f(x - eps) - eps <= g(x) + SLACK && g(x) <= f(x + eps) + eps + SLACK
        };
        knots.iter().all(|&k| {
            [k, k.next_down(), k + eps, (k + eps).next_down(), k - eps, (k - eps).next_down()]
                .into_iter()
                .all(holds_at)
        })
    };
    if feasible(0.0) {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Lévy distance between two ESDs.
pub fn levy_spectra(a: &Spectrum, b: &Spectrum, tolerance: f64) -> Result<f64> {
    let knots = merged_points(a.eigenvalues(), b.eigenvalues());
    levy_distance(|x| esd_at(a, x), |x| esd_at(b, x), &knots, tolerance)
}

/// `sup_{x in grid} |f_est(x) - semicircle_pdf(x)|` over a grid spanning
/// `[-2, 2]` with spacing at most `0.01`.
pub fn sup_density_error(f_est: impl Fn(f64) -> f64, grid: &[f64]) -> Result<f64> {
    const SPACING: f64 = 0.01 + 1e-12;
    let (Some(&first), Some(&last)) = (grid.first(), grid.last()) else {
        return Err(Error::Domain("empty grid".into()));
    };
    if grid.iter().any(|x| x.abs() > 2.0) {
        return Err(Error::Domain("density grid leaves [-2, 2]".into()));
    }
    if first > -2.0 + SPACING || last < 2.0 - SPACING || grid.windows(2).any(|w| !(w[1] > w[0]) || w[1] - w[0] > SPACING) {
        return Err(Error::Domain("density grid must cover [-2, 2] with spacing <= 0.01".into()));
    }
    Ok(grid
        .iter()
        .map(|&x| (f_est(x) - semicircle_pdf(x)).abs())
        .fold(0.0, f64::max))
}

/// The 401-point grid `-2, -1.99, ..., 2`.
pub fn semicircle_grid() -> Vec<f64> {
    (0..=400).map(|i| -2.0 + i as f64 * 0.01).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceBound {
    /// `L^3` for the ESDs of the two matrices.
    pub lhs: f64,
    /// `tr((a - b)^2) / n`
    pub rhs: f64,
    pub holds: bool,
}

/// Checks `L^3(F^a, F^b) <= tr((a - b)^2) / n`.
pub fn levy_cube_trace_bound(a: &SymmetricMatrix, b: &SymmetricMatrix) -> Result<TraceBound> {
    a.check_same_size(b)?;
    let levy = levy_spectra(&symmetric_eigenvalues(a)?, &symmetric_eigenvalues(b)?, 1e-5)?;
    let lhs = levy.powi(3);
    let rhs = a.sub(b)?.frobenius_sq() / a.n() as f64;
    Ok(TraceBound {
        lhs,
        rhs,
        holds: lhs <= rhs + 1e-4,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankCheck {
    pub sup_diff: f64,
    /// `rank_bound / n`
    pub bound: f64,
    pub holds: bool,
}

/// Checks `||F^a - F^b|| <= rank(a - b) / n` given an upper bound on the rank.
pub fn rank_inequality_check(
    a: &SymmetricMatrix,
    b: &SymmetricMatrix,
    rank_bound: usize,
) -> Result<RankCheck> {
    a.check_same_size(b)?;
    let sup_diff = kolmogorov_spectra(&symmetric_eigenvalues(a)?, &symmetric_eigenvalues(b)?);
    let bound = rank_bound as f64 / a.n() as f64;
    Ok(RankCheck {
        sup_diff,
        bound,
        holds: sup_diff <= bound + 1e-10,
    })
}
