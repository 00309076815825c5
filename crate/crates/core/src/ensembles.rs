//! Entry distributions, truncated moments, the scaling constant `b_n` and
//! Wigner matrix assembly.
//!
//! Every supported law is centred. Three of them have unit variance; the
//! fourth, [`EntryDistribution::LogTailHeavy`], has the symmetric density
//! `|t|^-3` on `|t| >= 1`, so `P(|X| > x) = x^-2` and the truncated second
//! moment `l(x) = E[X^2; |X| <= x] = 2 ln x` is slowly varying: infinite
//! variance, yet in the domain of attraction of the normal law.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Poisson, StandardNormal};

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::special::{erf, normal_pdf, normal_two_sided_tail};

/// Seeded generator used for every random draw in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Law of the i.i.d. matrix entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntryDistribution {
    /// `E - 1` with `E ~ Exp(1)`: `P(X <= x) = 1 - e^{-(x+1)}`, `x >= -1`.
    ShiftedExponential,
    /// `P - 1` with `P ~ Poisson(1)`: `P(X = k) = e^{-1} / (k+1)!`, `k >= -1`.
    ShiftedPoisson,
    StandardNormal,
    /// Symmetric density `|t|^-3` on `|t| >= 1`.
    LogTailHeavy,
}

/// Series terms below this are dropped.
const SERIES_CUTOFF: f64 = 1e-16;

impl EntryDistribution {
    pub const ALL: [EntryDistribution; 4] = [
        EntryDistribution::ShiftedExponential,
        EntryDistribution::ShiftedPoisson,
        EntryDistribution::StandardNormal,
        EntryDistribution::LogTailHeavy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EntryDistribution::ShiftedExponential => "shifted_exponential",
            EntryDistribution::ShiftedPoisson => "shifted_poisson",
            EntryDistribution::StandardNormal => "standard_normal",
            EntryDistribution::LogTailHeavy => "log_tail_heavy",
        }
    }

    pub fn analytic_variance(self) -> Option<f64> {
        match self {
            EntryDistribution::LogTailHeavy => None,
            _ => Some(1.0),
        }
    }

    pub fn has_finite_variance(self) -> bool {
        self.analytic_variance().is_some()
    }

    /// `b = inf{x > 0 : l(x) > 0}`.
    pub fn moment_onset(self) -> f64 {
        match self {
            EntryDistribution::ShiftedExponential | EntryDistribution::StandardNormal => 0.0,
            // smallest nonzero |X| is 1 for both
            EntryDistribution::ShiftedPoisson | EntryDistribution::LogTailHeavy => 1.0,
        }
    }

    /// One draw.
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> f64 {
        match self {
            EntryDistribution::ShiftedExponential => {
                let e: f64 = Exp1.sample(rng);
                e - 1.0
            }
            EntryDistribution::ShiftedPoisson => {
                let p: f64 = Poisson::new(1.0).expect("unit rate").sample(rng);
                p - 1.0
            }
            EntryDistribution::StandardNormal => StandardNormal.sample(rng),
            EntryDistribution::LogTailHeavy => {
                // Low bit picks the sign, the top 53 bits a uniform on (0, 1].
                let bits = rng.next_u64();
                let u = ((bits >> 11) as f64 + 1.0) * (1.0 / (1u64 << 53) as f64);
                let magnitude = u.sqrt().recip();
                if bits & 1 == 0 {
                    magnitude
                } else {
                    -magnitude
                }
            }
        }
    }

    /// `count` i.i.d. draws from a generator seeded with `seed`.
    pub fn sample_entries(self, count: usize, seed: u64) -> Result<Vec<f64>> {
        if count == 0 {
            return Err(Error::Domain("sample count must be at least 1".into()));
        }
        let mut rng = seeded_rng(seed);
        Ok((0..count).map(|_| self.sample(&mut rng)).collect())
    }

    /// Truncated second moment `l(x) = E[X^2; |X| <= x]`.
    pub fn truncated_second_moment(self, x: f64) -> Result<f64> {
        check_positive("x", x)?;
        Ok(match self {
            EntryDistribution::ShiftedExponential => {
                // antiderivative of t^2 e^{-(t+1)} is -e^{-(t+1)} (t^2 + 2t + 2)
                let g = |t: f64| -(-(t + 1.0)).exp() * (t * t + 2.0 * t + 2.0);
                g(x) - g((-x).max(-1.0))
            }
            EntryDistribution::ShiftedPoisson => poisson_truncated_sum(x, |k| k * k),
            EntryDistribution::StandardNormal => {
                erf(x * std::f64::consts::FRAC_1_SQRT_2) - 2.0 * x * normal_pdf(x)
            }
            EntryDistribution::LogTailHeavy => {
                if x <= 1.0 {
                    0.0
                } else {
                    2.0 * x.ln()
                }
            }
        })
    }

    /// Truncated first moment `E[X; |X| <= x]`.
    pub fn truncated_mean(self, x: f64) -> Result<f64> {
        check_positive("x", x)?;
        Ok(match self {
            EntryDistribution::ShiftedExponential => {
                // antiderivative of t e^{-(t+1)} is -e^{-(t+1)} (t + 1)
                let g = |t: f64| -(-(t + 1.0)).exp() * (t + 1.0);
                g(x) - g((-x).max(-1.0))
            }
            EntryDistribution::ShiftedPoisson => poisson_truncated_sum(x, |k| k),
            EntryDistribution::StandardNormal | EntryDistribution::LogTailHeavy => 0.0,
        })
    }

    /// `P(|X| > x)` for `x >= 0`.
    pub fn tail_probability(self, x: f64) -> Result<f64> {
        if !(x >= 0.0) {
            return Err(Error::Domain(format!("tail threshold must be >= 0, got {x}")));
        }
        Ok(match self {
            EntryDistribution::ShiftedExponential => {
                let upper = (-(x + 1.0)).exp();
                let lower = if x < 1.0 { -(x - 1.0).exp_m1() } else { 0.0 };
                upper + lower
            }
            EntryDistribution::ShiftedPoisson => {
                // atom at -1 when x < 1, plus sum_{k > x} e^{-1}/(k+1)!
                let mut tail = if x < 1.0 { (-1.0f64).exp() } else { 0.0 };
                if x < 170.0 {
                    let first = x.floor() as i64 + 1;
                    let mut p = (-1.0f64).exp();
                    for j in 1..=(first + 1) {
                        p /= j as f64;
                    }
                    let mut k = first;
                    while p > tail * SERIES_CUTOFF && p > 0.0 {
                        tail += p;
                        k += 1;
                        p /= (k + 1) as f64;
                    }
                }
                tail
            }
            EntryDistribution::StandardNormal => normal_two_sided_tail(x),
            EntryDistribution::LogTailHeavy => {
                if x < 1.0 {
                    1.0
                } else {
                    1.0 / (x * x)
                }
            }
        })
    }

    /// The normalising constant `b_n` for matrix size `n`.
    ///
    /// Finite variance: `sqrt(n * Var X)`. Otherwise the smallest
    /// `x >= b + 1` with `n l(x) <= x^2`, located by bisection to relative
    /// tolerance `1e-10`.
    pub fn scaling_constant(self, n: usize) -> Result<ScalingConstant> {
        if n < 2 {
            return Err(Error::Domain(format!("matrix size must be >= 2, got {n}")));
        }
        if let Some(var) = self.analytic_variance() {
            return Ok(ScalingConstant {
                b_n: (n as f64 * var).sqrt(),
                n,
                mode: ScalingMode::FiniteVariance,
            });
        }
        let nf = n as f64;
        let gap = |x: f64| -> Result<f64> { Ok(x * x - nf * self.truncated_second_moment(x)?) };
        let mut lo = (self.moment_onset() + 1.0).max(1.0 + f64::EPSILON);
        let b_n = if gap(lo)? >= 0.0 {
            lo
        } else {
            let mut hi = nf.sqrt() * nf.ln() + 10.0;
            let (g_lo, g_hi) = (gap(lo)?, gap(hi)?);
            if g_hi < 0.0 {
                return Err(Error::Numeric(format!(
                    "b_n root not bracketed for n={n}: gap({lo})={g_lo}, gap({hi})={g_hi}"
                )));
            }
            while hi - lo > 1e-10 * hi {
                let mid = 0.5 * (lo + hi);
                if gap(mid)? >= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            hi
        };
        Ok(ScalingConstant {
            b_n,
            n,
            mode: ScalingMode::InfiniteVariance,
        })
    }

    /// Rows of `(x, x^2 P(|X| > x) / l(x))`.
    pub fn tail_diagnostic(self, x_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
        let b = self.moment_onset();
        x_grid
            .iter()
            .map(|&x| {
                if !(x > b) {
                    return Err(Error::Domain(format!("tail diagnostic needs x > {b}, got {x}")));
                }
                let l = self.truncated_second_moment(x)?;
                if l <= 0.0 {
                    return Err(Error::Domain(format!("l({x}) = 0")));
                }
                Ok((x, x * x * self.tail_probability(x)? / l))
            })
            .collect()
    }
}

impl fmt::Display for EntryDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EntryDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "shifted_exponential" | "exponential" => Ok(EntryDistribution::ShiftedExponential),
            "shifted_poisson" | "poisson" => Ok(EntryDistribution::ShiftedPoisson),
            "standard_normal" | "normal" => Ok(EntryDistribution::StandardNormal),
            "log_tail_heavy" | "heavy" => Ok(EntryDistribution::LogTailHeavy),
            other => Err(Error::Config(format!("unknown distribution {other:?}"))),
        }
    }
}

fn check_positive(what: &str, x: f64) -> Result<()> {
    if x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be > 0, got {x}")))
    }
}

/// `sum_{k >= -1, |k| <= x} w(k) e^{-1}/(k+1)!`, stopping once terms drop below
/// [`SERIES_CUTOFF`].
fn poisson_truncated_sum(x: f64, weight: impl Fn(f64) -> f64) -> f64 {
    let mut sum = 0.0;
    let mut p = (-1.0f64).exp(); // P(X = -1)
    let mut k = -1i64;
    while (k as f64) <= x {
        let kf = k as f64;
        if kf.abs() <= x {
            let term = weight(kf) * p;
            if k > 1 && term.abs() < SERIES_CUTOFF {
                break;
            }
            sum += term;
        }
        k += 1;
        p /= (k + 1) as f64;
    }
    sum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingMode {
    FiniteVariance,
    InfiniteVariance,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingConstant {
    pub b_n: f64,
    pub n: usize,
    pub mode: ScalingMode,
}

/// A Wigner matrix `W_n = X / b_n` together with the constant used.
#[derive(Debug, Clone)]
pub struct Wigner {
    pub matrix: SymmetricMatrix,
    pub scaling: ScalingConstant,
}

/// Unscaled entries `X_jk`. Draws are taken row by row over the upper
/// triangle including the diagonal, `n(n+1)/2` in total.
pub fn sample_raw(dist: EntryDistribution, n: usize, seed: u64) -> Result<SymmetricMatrix> {
    if n < 2 {
        return Err(Error::Domain(format!("matrix size must be >= 2, got {n}")));
    }
    let mut rng = seeded_rng(seed);
    Ok(SymmetricMatrix::from_upper_fn(n, |_, _| dist.sample(&mut rng)))
}

/// `W_n = b_n^{-1} (X_jk)`.
pub fn build_wigner(dist: EntryDistribution, n: usize, seed: u64) -> Result<Wigner> {
    let raw = sample_raw(dist, n, seed)?;
    let scaling = dist.scaling_constant(n)?;
    Ok(Wigner {
        matrix: raw.scaled(scaling.b_n.recip()),
        scaling,
    })
}
