//! Matrix reductions that leave the limiting spectral distribution
//! unchanged: diagonal removal, truncation at `b_n`, and centring with
//! variance normalisation. Plus a Monte Carlo estimate of the Lindeberg
//! quantity for the normalised entries.

use crate::ensembles::{seeded_rng, EntryDistribution};
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Copy of `m` with a zero diagonal.
pub fn zero_diagonal(m: &SymmetricMatrix) -> SymmetricMatrix {
    m.map_upper(|j, k, v| if j == k { 0.0 } else { v })
}

/// `b_n^{-1} x_jk 1{|x_jk| <= b_n}` for raw (unscaled) entries.
pub fn truncate_entries(raw: &SymmetricMatrix, b_n: f64) -> Result<SymmetricMatrix> {
    check_threshold(b_n)?;
    Ok(raw.map_upper(|_, _, x| if x.abs() <= b_n { x / b_n } else { 0.0 }))
}

/// Population moments of `X 1{|X| <= b_n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedMoments {
    pub mean: f64,
    pub variance: f64,
}

pub fn truncated_moments(dist: EntryDistribution, b_n: f64) -> Result<TruncatedMoments> {
    check_threshold(b_n)?;
    let mean = dist.truncated_mean(b_n)?;
    let variance = dist.truncated_second_moment(b_n)? - mean * mean;
    if !(variance > 0.0) {
        return Err(Error::Domain(format!(
            "truncated variance of {dist} at {b_n} is {variance}"
        )));
    }
    Ok(TruncatedMoments { mean, variance })
}

/// Off-diagonal entries become `(x 1{|x| <= b_n} - mu_t) / sqrt(n sigma_t^2)`
/// where `mu_t`, `sigma_t^2` are the mean and variance of `X 1{|X| <= b_n}`
/// under `dist`; the diagonal is set to zero.
///
/// Accepts raw entries or raw entries already truncated at the same `b_n`
/// (truncated entries are zero, which maps identically).
pub fn center_and_rescale(
    truncated_raw: &SymmetricMatrix,
    dist: EntryDistribution,
    b_n: f64,
    n: usize,
) -> Result<SymmetricMatrix> {
    if n != truncated_raw.n() {
        return Err(Error::Domain(format!(
            "n = {n} does not match matrix size {}",
            truncated_raw.n()
        )));
    }
    let TruncatedMoments { mean, variance } = truncated_moments(dist, b_n)?;
    let scale = (n as f64 * variance).sqrt().recip();
    Ok(truncated_raw.map_upper(|j, k, x| {
        if j == k {
            0.0
        } else {
            let kept = if x.abs() <= b_n { x } else { 0.0 };
            (kept - mean) * scale
        }
    }))
}

/// The intermediate matrices of the reduction, all from one raw sample.
#[derive(Debug, Clone)]
pub struct ReductionChain {
    /// `W_n` itself.
    pub wigner: SymmetricMatrix,
    /// `W_n` with zero diagonal.
    pub diagonal_removed: SymmetricMatrix,
    /// Zero diagonal, entries above `b_n` dropped, scaled by `1/b_n`.
    pub truncated: SymmetricMatrix,
    /// Zero diagonal, truncated, centred and variance-normalised.
    pub normalized: SymmetricMatrix,
}

pub fn reduction_chain(
    raw: &SymmetricMatrix,
    dist: EntryDistribution,
    b_n: f64,
) -> Result<ReductionChain> {
    check_threshold(b_n)?;
    let off_diagonal = zero_diagonal(raw);
    Ok(ReductionChain {
        wigner: raw.scaled(b_n.recip()),
        diagonal_removed: off_diagonal.scaled(b_n.recip()),
        truncated: truncate_entries(&off_diagonal, b_n)?,
        normalized: center_and_rescale(&off_diagonal, dist, b_n, raw.n())?,
    })
}

/// Monte Carlo estimate of `E[Y^2 1{|Y| > eta sqrt(n)}]` for
/// `Y = (X 1{|X| <= b_n} - mu_t) / sigma_t`.
pub fn lindeberg_diagnostic(
    dist: EntryDistribution,
    n: usize,
    eta: f64,
    mc_samples: usize,
    seed: u64,
) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::Domain(format!("eta must be > 0, got {eta}")));
    }
    if mc_samples < 10_000 {
        return Err(Error::Domain(format!(
            "at least 10^4 Monte Carlo samples required, got {mc_samples}"
        )));
    }
    let b_n = dist.scaling_constant(n)?.b_n;
    let TruncatedMoments { mean, variance } = truncated_moments(dist, b_n)?;
    let sd = variance.sqrt();
    let threshold = eta * (n as f64).sqrt();
    let mut rng = seeded_rng(seed);
    let mut sum = 0.0;
    for _ in 0..mc_samples {
        let x = dist.sample(&mut rng);
        let y = (if x.abs() <= b_n { x } else { 0.0 } - mean) / sd;
        if y.abs() > threshold {
            sum += y * y;
        }
    }
    Ok(sum / mc_samples as f64)
}

fn check_threshold(b_n: f64) -> Result<()> {
    if b_n > 0.0 && b_n.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("b_n must be > 0, got {b_n}")))
    }
}
