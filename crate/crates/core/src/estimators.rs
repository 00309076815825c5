//! Kernel density and kernel distribution estimators on a spectrum, the
//! empirical spectral distribution, and the semicircle reference curves.
//!
//! With eigenvalues `mu_1..mu_p` and bandwidth `h`:
//!
//! ```text
//! f_n(x) = (1/(p h)) sum_i K((x - mu_i)/h)
//! F_n(x) = (1/p)     sum_i C((x - mu_i)/h)      C = antiderivative of K
//! ```

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use crate::eigen::Spectrum;
use crate::error::{Error, Result};
use crate::quadrature::integrate_real_line;
use crate::special::{normal_cdf, normal_pdf};

/// A smoothing kernel with its antiderivative.
#[derive(Debug, Clone)]
pub struct KernelSpec {
    name: String,
    pdf: fn(f64) -> f64,
    cdf: fn(f64) -> f64,
    is_probability_density: bool,
    has_bounded_variation: bool,
}

fn gaussian_pdf(x: f64) -> f64 {
    normal_pdf(x)
}

fn gaussian_cdf(x: f64) -> f64 {
    normal_cdf(x)
}

fn cauchy_pdf(x: f64) -> f64 {
    1.0 / (PI * (1.0 + x * x))
}

fn cauchy_cdf(x: f64) -> f64 {
    0.5 + x.atan() / PI
}

impl KernelSpec {
    /// Standard normal density.
    pub fn gaussian() -> Self {
        Self {
            name: "gaussian".into(),
            pdf: gaussian_pdf,
            cdf: gaussian_cdf,
            is_probability_density: true,
            has_bounded_variation: true,
        }
    }

    /// `K(x) = 1 / (pi (1 + x^2))`. With this kernel `f_n(x)` equals
    /// `Im m(x + ih) / pi` for the Stieltjes transform `m` of the spectrum.
    pub fn cauchy() -> Self {
        Self {
            name: "cauchy".into(),
            pdf: cauchy_pdf,
            cdf: cauchy_cdf,
            is_probability_density: true,
            has_bounded_variation: true,
        }
    }

    /// Registers a user kernel. It must be a probability density (checked by
    /// quadrature to `1e-8`), its `cdf` must run monotonically from 0 to 1,
    /// and `\int |K'|` must be finite.
    pub fn custom(name: impl Into<String>, pdf: fn(f64) -> f64, cdf: fn(f64) -> f64) -> Result<Self> {
        let name = name.into();
        let probe: Vec<f64> = (-2000..=2000).map(|i| (i as f64 * 0.05).sinh()).collect();
        if probe.iter().any(|&x| !(pdf(x) >= 0.0)) {
            return Err(Error::Domain(format!("kernel {name}: pdf is negative or NaN somewhere")));
        }
        let mass = integrate_real_line(&pdf, 1e-11);
        if (mass - 1.0).abs() > 1e-8 {
            return Err(Error::Domain(format!("kernel {name}: pdf integrates to {mass}, not 1")));
        }
        if probe.windows(2).any(|w| cdf(w[1]) < cdf(w[0])) {
            return Err(Error::Domain(format!("kernel {name}: cdf is not monotone")));
        }
        let (lo, hi) = (cdf(-1e12), cdf(1e12));
        if lo.abs() > 1e-8 || (hi - 1.0).abs() > 1e-8 {
            return Err(Error::Domain(format!(
                "kernel {name}: cdf limits are {lo} and {hi}, expected 0 and 1"
            )));
        }
        let has_bounded_variation = {
            let variation = |points: usize| -> f64 {
                let step = std::f64::consts::PI / points as f64;
                let xs = (1..points).map(|i| (-std::f64::consts::FRAC_PI_2 + i as f64 * step).tan());
                let vals: Vec<f64> = xs.map(pdf).collect();
                vals.windows(2).map(|w| (w[1] - w[0]).abs()).sum()
            };
            let (coarse, fine) = (variation(20_000), variation(40_000));
            fine.is_finite() && (fine - coarse).abs() <= 1e-6 * fine.max(1.0)
        };
        if !has_bounded_variation {
            return Err(Error::Domain(format!(
                "kernel {name}: total variation of the pdf does not converge"
            )));
        }
        Ok(Self {
            name,
            pdf,
            cdf,
            is_probability_density: true,
            has_bounded_variation,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn pdf(&self, x: f64) -> f64 {
        (self.pdf)(x)
    }

    #[inline]
    pub fn cdf(&self, x: f64) -> f64 {
        (self.cdf)(x)
    }

    /// `K >= 0` and `\int K = 1`.
    pub fn is_probability_density(&self) -> bool {
        self.is_probability_density
    }

    /// `\int |K'| < infinity`.
    pub fn has_bounded_variation(&self) -> bool {
        self.has_bounded_variation
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "gaussian" | "normal" => Ok(Self::gaussian()),
            "cauchy" => Ok(Self::cauchy()),
            other => Err(Error::Config(format!("unknown kernel {other:?}"))),
        }
    }
}

/// `h = n^{-2/5}`.
pub fn bandwidth_default(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("bandwidth needs n >= 2, got {n}")));
    }
    Ok((n as f64).powf(-0.4))
}

/// How the bandwidth is chosen for a given matrix size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BandwidthRule {
    /// `n^{-2/5}`
    Default,
    Fixed(f64),
}

impl BandwidthRule {
    pub fn resolve(self, n: usize) -> Result<f64> {
        match self {
            BandwidthRule::Default => bandwidth_default(n),
            BandwidthRule::Fixed(h) => check_bandwidth(h).map(|_| h),
        }
    }
}

impl fmt::Display for BandwidthRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BandwidthRule::Default => f.write_str("default"),
            BandwidthRule::Fixed(h) => write!(f, "{h}"),
        }
    }
}

impl FromStr for BandwidthRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "paper_default" || s == "default" {
            return Ok(BandwidthRule::Default);
        }
        let v = s.strip_prefix("fixed:").unwrap_or(s);
        let h: f64 = v
            .parse()
            .map_err(|_| Error::Config(format!("bad bandwidth {s:?}")))?;
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Config(format!("bandwidth must be positive, got {s:?}")));
        }
        Ok(BandwidthRule::Fixed(h))
    }
}

fn check_bandwidth(h: f64) -> Result<()> {
    if h > 0.0 && h.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("bandwidth must be > 0, got {h}")))
    }
}

/// Kernel density estimate `f_n(x)`. Exact sum over all eigenvalues.
pub fn kde_at(spectrum: &Spectrum, kernel: &KernelSpec, h: f64, x: f64) -> Result<f64> {
    check_bandwidth(h)?;
    let sum: f64 = spectrum.eigenvalues().iter().map(|&mu| kernel.pdf((x - mu) / h)).sum();
    Ok(sum / (spectrum.len() as f64 * h))
}

/// Kernel distribution estimate `F_n(x)` through the kernel antiderivative.
pub fn kcdf_at(spectrum: &Spectrum, kernel: &KernelSpec, h: f64, x: f64) -> Result<f64> {
    check_bandwidth(h)?;
    let sum: f64 = spectrum.eigenvalues().iter().map(|&mu| kernel.cdf((x - mu) / h)).sum();
    Ok((sum / spectrum.len() as f64).clamp(0.0, 1.0))
}

/// Empirical spectral distribution: fraction of eigenvalues `<= x`.
pub fn esd_at(spectrum: &Spectrum, x: f64) -> f64 {
    spectrum.count_le(x) as f64 / spectrum.len() as f64
}

/// Semicircle density `sqrt(4 - x^2) / (2 pi)` on `[-2, 2]`.
pub fn semicircle_pdf(x: f64) -> f64 {
    if x.abs() >= 2.0 {
        0.0
    } else {
        (4.0 - x * x).sqrt() / (2.0 * PI)
    }
}

/// Semicircle distribution function.
pub fn semicircle_cdf(x: f64) -> f64 {
    if x <= -2.0 {
        0.0
    } else if x >= 2.0 {
        1.0
    } else {
        (0.5 + x * (4.0 - x * x).sqrt() / (4.0 * PI) + (0.5 * x).asin() / PI).clamp(0.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Kde,
    Kcdf,
    Esd,
    SemicirclePdf,
    SemicircleCdf,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Kde => "kde",
            CurveKind::Kcdf => "kcdf",
            CurveKind::Esd => "esd",
            CurveKind::SemicirclePdf => "semicircle_pdf",
            CurveKind::SemicircleCdf => "semicircle_cdf",
        }
    }

    pub fn is_distribution(self) -> bool {
        matches!(self, CurveKind::Kcdf | CurveKind::Esd | CurveKind::SemicircleCdf)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveMeta {
    pub kind: CurveKind,
    pub n: Option<usize>,
    pub h: Option<f64>,
    pub kernel: Option<String>,
    pub seed: Option<u64>,
}

/// A sampled curve `(x_i, value_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorCurve {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub meta: CurveMeta,
}

/// Below this many kernel evaluations a curve is computed serially.
const PARALLEL_THRESHOLD: usize = 1 << 16;

/// Evaluates `kind` on every grid point. Inputs a kind does not use
/// (the spectrum for semicircle curves, kernel and `h` for the ESD) are
/// left out of the metadata.
pub fn curve(
    kind: CurveKind,
    spectrum: &Spectrum,
    kernel: &KernelSpec,
    h: f64,
    grid: &[f64],
) -> Result<EstimatorCurve> {
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Domain("curve grid must be strictly increasing".into()));
    }
    let point = |x: f64| -> Result<f64> {
        match kind {
            CurveKind::Kde => kde_at(spectrum, kernel, h, x),
            CurveKind::Kcdf => kcdf_at(spectrum, kernel, h, x),
            CurveKind::Esd => Ok(esd_at(spectrum, x)),
            CurveKind::SemicirclePdf => Ok(semicircle_pdf(x)),
            CurveKind::SemicircleCdf => Ok(semicircle_cdf(x)),
        }
    };
    let values: Vec<f64> = if grid.len() * spectrum.len() >= PARALLEL_THRESHOLD {
        grid.par_iter().map(|&x| point(x)).collect::<Result<_>>()?
    } else {
        grid.iter().map(|&x| point(x)).collect::<Result<_>>()?
    };
    let uses_spectrum = matches!(kind, CurveKind::Kde | CurveKind::Kcdf | CurveKind::Esd);
    let uses_kernel = matches!(kind, CurveKind::Kde | CurveKind::Kcdf);
    Ok(EstimatorCurve {
        grid: grid.to_vec(),
        values,
        meta: CurveMeta {
            kind,
            n: uses_spectrum.then(|| spectrum.len()),
            h: uses_kernel.then_some(h),
            kernel: uses_kernel.then(|| kernel.name().to_string()),
            seed: None,
        },
    })
}

/// `points` equally spaced values from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if !(lo < hi) || points < 2 {
        return Err(Error::Domain(format!(
            "grid needs lo < hi and at least 2 points, got ({lo}, {hi}, {points})"
        )));
    }
    let step = (hi - lo) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| if i + 1 == points { hi } else { lo + i as f64 * step })
        .collect())
}

impl EstimatorCurve {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.meta.seed = Some(seed);
        self
    }

    /// Checks the range and monotonicity constraints for this kind of curve.
    pub fn check_invariants(&self) -> Result<()> {
        if self.meta.kind.is_distribution() {
            if self.values.iter().any(|v| !(0.0..=1.0).contains(v)) {
                return Err(Error::Domain("distribution curve leaves [0, 1]".into()));
            }
            if self.values.windows(2).any(|w| w[1] < w[0]) {
                return Err(Error::Domain("distribution curve decreases".into()));
            }
        } else if self.values.iter().any(|v| !(*v >= 0.0)) {
            return Err(Error::Domain("density curve is negative".into()));
        }
        Ok(())
    }

    /// `# n=.., h=.., kernel=.., seed=.., kind=..` then `x,value` rows.
    pub fn to_csv(&self) -> String {
        fn opt<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "none".to_string(), |v| v.to_string())
        }
        let m = &self.meta;
        let mut out = format!(
            "# n={}, h={}, kernel={}, seed={}, kind={}\nx,value\n",
            opt(&m.n),
            opt(&m.h),
            opt(&m.kernel),
            opt(&m.seed),
            m.kind.name()
        );
        for (x, v) in self.grid.iter().zip(&self.values) {
            let _ = writeln!(out, "{x},{v}");
        }
        out
    }
}
