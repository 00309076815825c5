//! Experiment runner: configuration, the simulation presets behind the
//! command-line tool, and their CSV artifacts.
//!
//! Every artifact is a pure function of its configuration and seed, and
//! starts with a `#` comment line carrying everything needed to rerun it.
//! Replicate `r` of a run with base seed `s` uses seed `s + r`.

use std::fmt::{self, Write as _};
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;

use crate::eigen::{symmetric_eigenvalues, Spectrum};
use crate::ensembles::{build_wigner, EntryDistribution};
use crate::error::{Error, Result};
use crate::estimators::{
    bandwidth_default, kcdf_at, kde_at, linear_grid, semicircle_cdf, semicircle_pdf, BandwidthRule,
    KernelSpec,
};
use crate::metrics::{kolmogorov_distance, kolmogorov_esd, semicircle_grid, sup_density_error, Support};
use crate::transforms::cauchy_kernel_identity_check;

/// Evaluation grid `points` equally spaced values on `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl GridSpec {
    pub const FIGURE: GridSpec = GridSpec {
        lo: -3.0,
        hi: 3.0,
        points: 601,
    };

    pub fn values(&self) -> Result<Vec<f64>> {
        linear_grid(self.lo, self.hi, self.points)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.points)
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    /// `lo:hi:points` or `lo,hi,points`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split([':', ',']).map(str::trim).collect();
        let bad = || Error::Config(format!("grid must be lo:hi:points, got {s:?}"));
        let [lo, hi, points] = parts.as_slice() else {
            return Err(bad());
        };
        let grid = GridSpec {
            lo: lo.parse().map_err(|_| bad())?,
            hi: hi.parse().map_err(|_| bad())?,
            points: points.parse().map_err(|_| bad())?,
        };
        if !(grid.lo < grid.hi) || grid.points < 2 {
            return Err(Error::Config(format!("grid needs lo < hi and points >= 2, got {s:?}")));
        }
        Ok(grid)
    }
}

/// Settings for a replicated convergence run.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub dist: EntryDistribution,
    pub sizes: Vec<usize>,
    pub kernel: String,
    pub bandwidth: BandwidthRule,
    pub grid: GridSpec,
    pub replicates: usize,
    pub base_seed: u64,
    pub out_dir: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            dist: EntryDistribution::StandardNormal,
            sizes: vec![50, 200, 800],
            kernel: "gaussian".into(),
            bandwidth: BandwidthRule::Default,
            grid: GridSpec::FIGURE,
            replicates: 20,
            base_seed: 0,
            out_dir: None,
        }
    }
}

impl ExperimentConfig {
    /// Reads a flat `key = value` file on top of the defaults. `#` starts a
    /// comment; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected key=value, got {line:?}"),
            })?;
            config.set(key.trim(), value.trim()).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
        }
        config.validate()?;
        Ok(config)
    }

    /// Sets one key; the same names are accepted in config files.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let int = |v: &str| -> Result<u64> {
            v.parse()
                .map_err(|_| Error::Config(format!("{key}: expected an integer, got {v:?}")))
        };
        match key {
            "dist" | "distribution" => self.dist = value.parse()?,
            "sizes" | "n" => {
                self.sizes = value
                    .split(',')
                    .map(|v| int(v.trim()).map(|v| v as usize))
                    .collect::<Result<_>>()?
            }
            "kernel" => {
                value.parse::<KernelSpec>()?;
                self.kernel = value.to_string();
            }
            "bandwidth" => self.bandwidth = value.parse()?,
            "grid" => self.grid = value.parse()?,
            "replicates" => self.replicates = int(value)? as usize,
            "seed" | "base_seed" => self.base_seed = int(value)?,
            "out" | "output" => self.out_dir = Some(PathBuf::from(value)),
            other => return Err(Error::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.sizes.iter().any(|&n| n < 2) {
            return Err(Error::Config(format!("sizes must all be >= 2, got {:?}", self.sizes)));
        }
        if self.replicates < 1 {
            return Err(Error::Config("replicates must be >= 1".into()));
        }
        if !(self.grid.lo < self.grid.hi) || self.grid.points < 2 {
            return Err(Error::Config(format!("invalid grid {}", self.grid)));
        }
        self.kernel_spec()?;
        Ok(())
    }

    pub fn kernel_spec(&self) -> Result<KernelSpec> {
        self.kernel.parse()
    }

    pub fn replicate_seed(&self, replicate: usize) -> u64 {
        self.base_seed.wrapping_add(replicate as u64)
    }

    /// Key/value pairs that reproduce this run.
    pub fn describe(&self) -> String {
        let sizes: Vec<String> = self.sizes.iter().map(|n| n.to_string()).collect();
        format!(
            "dist={}, sizes={}, kernel={}, bandwidth={}, grid={}, replicates={}, seed={}",
            self.dist,
            sizes.join(";"),
            self.kernel,
            self.bandwidth,
            self.grid,
            self.replicates,
            self.base_seed
        )
    }
}

/// Eigenvalues of `W_n` for one seed.
pub fn spectrum_for(dist: EntryDistribution, n: usize, seed: u64) -> Result<Spectrum> {
    let w = build_wigner(dist, n, seed)?;
    Ok(symmetric_eigenvalues(&w.matrix)?.with_scaling(w.scaling.b_n))
}

/// Eigenvalue CSV for the `spectrum` command.
pub fn spectrum_csv(dist: EntryDistribution, n: usize, seed: u64) -> Result<String> {
    let spectrum = spectrum_for(dist, n, seed)?;
    let b_n = spectrum.scaling_used().expect("set by spectrum_for");
    Ok(spectrum.to_csv(&[format!(
        "command=spectrum, dist={dist}, n={n}, seed={seed}, b_n={b_n}"
    )]))
}

/// The four simulation-study figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// Densities at n = 50 and 800, shifted exponential entries.
    ExponentialDensity = 1,
    /// Densities at n = 50 and 800, shifted Poisson entries.
    PoissonDensity = 2,
    /// Distribution estimators at n = 50, shifted exponential entries.
    ExponentialDistribution = 3,
    /// Distribution estimators at n = 50, shifted Poisson entries.
    PoissonDistribution = 4,
}

impl FigureId {
    pub fn from_number(fig: u32) -> Result<Self> {
        match fig {
            1 => Ok(FigureId::ExponentialDensity),
            2 => Ok(FigureId::PoissonDensity),
            3 => Ok(FigureId::ExponentialDistribution),
            4 => Ok(FigureId::PoissonDistribution),
            other => Err(Error::Config(format!("figure must be 1, 2, 3 or 4, got {other}"))),
        }
    }

    pub fn number(self) -> u32 {
        self as u32
    }

    pub fn dist(self) -> EntryDistribution {
        match self {
            FigureId::ExponentialDensity | FigureId::ExponentialDistribution => {
                EntryDistribution::ShiftedExponential
            }
            FigureId::PoissonDensity | FigureId::PoissonDistribution => {
                EntryDistribution::ShiftedPoisson
            }
        }
    }

    pub fn is_density(self) -> bool {
        matches!(self, FigureId::ExponentialDensity | FigureId::PoissonDensity)
    }
}

/// Column-oriented figure data.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub figure: FigureId,
    pub comment: String,
    pub x: Vec<f64>,
    pub columns: Vec<(String, Vec<f64>)>,
}

impl FigureTable {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|(c, _)| c == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# {}\nx", self.comment);
        for (name, _) in &self.columns {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, x) in self.x.iter().enumerate() {
            let _ = write!(out, "{x}");
            for (_, col) in &self.columns {
                let _ = write!(out, ",{}", col[i]);
            }
            out.push('\n');
        }
        out
    }
}

/// Options for [`figure`]; the defaults are the simulation-study settings.
#[derive(Debug, Clone)]
pub struct FigureOptions {
    pub kernel: KernelSpec,
    pub bandwidth: BandwidthRule,
    pub grid: GridSpec,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            kernel: KernelSpec::gaussian(),
            bandwidth: BandwidthRule::Default,
            grid: GridSpec::FIGURE,
        }
    }
}

/// Figures 1/2: `x, kde_n50, kde_n800, semicircle_pdf`.
/// Figures 3/4: `x, kcdf_n50, esd_n50, semicircle_cdf`.
/// Each matrix size is sampled from its own stream seeded with `seed`.
pub fn figure(fig: FigureId, seed: u64, options: &FigureOptions) -> Result<FigureTable> {
    let dist = fig.dist();
    let x = options.grid.values()?;
    let kernel = &options.kernel;
    let mut columns = Vec::new();
    let mut bandwidths = Vec::new();
    if fig.is_density() {
        for n in [50usize, 800] {
            let spectrum = spectrum_for(dist, n, seed)?;
            let h = options.bandwidth.resolve(n)?;
            bandwidths.push(format!("h_n{n}={h}"));
            let values = x
                .par_iter()
                .map(|&t| kde_at(&spectrum, kernel, h, t))
                .collect::<Result<Vec<_>>>()?;
            columns.push((format!("kde_n{n}"), values));
        }
        columns.push(("semicircle_pdf".into(), x.iter().map(|&t| semicircle_pdf(t)).collect()));
    } else {
        let n = 50usize;
        let spectrum = spectrum_for(dist, n, seed)?;
        let h = options.bandwidth.resolve(n)?;
        bandwidths.push(format!("h_n{n}={h}"));
        let kcdf = x
            .iter()
            .map(|&t| kcdf_at(&spectrum, kernel, h, t))
            .collect::<Result<Vec<_>>>()?;
        columns.push((format!("kcdf_n{n}"), kcdf));
        columns.push((
            format!("esd_n{n}"),
            x.iter().map(|&t| crate::estimators::esd_at(&spectrum, t)).collect(),
        ));
        columns.push(("semicircle_cdf".into(), x.iter().map(|&t| semicircle_cdf(t)).collect()));
    }
    let comment = format!(
        "command=figure, figure={}, dist={dist}, seed={seed}, kernel={}, bandwidth={}, {}, grid={}",
        fig.number(),
        kernel.name(),
        options.bandwidth,
        bandwidths.join(", "),
        options.grid
    );
    Ok(FigureTable {
        figure: fig,
        comment,
        x,
        columns,
    })
}

/// Kolmogorov distance between the kernel cdf estimate and the semicircle
/// law. The grid is widened to cover the spectrum plus six bandwidths on
/// either side, keeping the spacing of `grid`.
pub fn kolmogorov_kcdf(spectrum: &Spectrum, kernel: &KernelSpec, h: f64, grid: GridSpec) -> Result<f64> {
    let spacing = (grid.hi - grid.lo) / (grid.points - 1) as f64;
    let lo = grid.lo.min(spectrum.min() - 6.0 * h);
    let hi = grid.hi.max(spectrum.max() + 6.0 * h);
    let points = ((hi - lo) / spacing).ceil() as usize + 1;
    let xs = linear_grid(lo, hi, points)?;
    kolmogorov_distance(
        |x| kcdf_at(spectrum, kernel, h, x).unwrap_or(f64::NAN),
        semicircle_cdf,
        Support::Grid(&xs),
    )
}

/// Metrics for one replicate of a convergence run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReplicateMetrics {
    pub size: usize,
    pub replicate: usize,
    pub seed: u64,
    pub h: f64,
    /// `sup |F_n - F|` for the kernel distribution estimator.
    pub ks_kcdf: f64,
    /// `sup |F^{W_n} - F|` for the empirical spectral distribution.
    pub ks_esd: f64,
    /// `sup_{[-2,2]} |f_n - f|`.
    pub sup_density_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizeMedians {
    pub size: usize,
    pub h: f64,
    pub ks_kcdf: f64,
    pub ks_esd: f64,
    pub sup_density_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceSummary {
    pub config: ExperimentConfig,
    pub rows: Vec<ReplicateMetrics>,
    pub medians: Vec<SizeMedians>,
}

/// Computes the three distances to the semicircle law for one spectrum.
pub fn replicate_metrics(
    spectrum: &Spectrum,
    kernel: &KernelSpec,
    h: f64,
    grid: GridSpec,
) -> Result<(f64, f64, f64)> {
    let ks_kcdf = kolmogorov_kcdf(spectrum, kernel, h, grid)?;
    let ks_esd = kolmogorov_esd(spectrum, semicircle_cdf);
    let density_grid = semicircle_grid();
    let sup = sup_density_error(
        |x| kde_at(spectrum, kernel, h, x).unwrap_or(f64::NAN),
        &density_grid,
    )?;
    Ok((ks_kcdf, ks_esd, sup))
}

/// Replicated distances to the semicircle law across matrix sizes.
/// Replicates run in parallel; rows are ordered by size, then replicate.
pub fn run_convergence(config: &ExperimentConfig) -> Result<ConvergenceSummary> {
    config.validate()?;
    let kernel = config.kernel_spec()?;
    let jobs: Vec<(usize, usize)> = config
        .sizes
        .iter()
        .flat_map(|&n| (0..config.replicates).map(move |r| (n, r)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(size, replicate)| {
            let seed = config.replicate_seed(replicate);
            let run = || -> Result<ReplicateMetrics> {
                let h = config.bandwidth.resolve(size)?;
                let spectrum = spectrum_for(config.dist, size, seed)?;
                let (ks_kcdf, ks_esd, sup_density_error) =
                    replicate_metrics(&spectrum, &kernel, h, config.grid)?;
                Ok(ReplicateMetrics {
                    size,
                    replicate,
                    seed,
                    h,
                    ks_kcdf,
                    ks_esd,
                    sup_density_error,
                })
            };
            run().map_err(|e| {
                e.context(format!(
                    "dist={}, n={size}, replicate={replicate}, seed={seed}",
                    config.dist
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let medians = config
        .sizes
        .iter()
        .map(|&size| {
            let of_size: Vec<&ReplicateMetrics> = rows.iter().filter(|r| r.size == size).collect();
            let pick = |f: fn(&ReplicateMetrics) -> f64| median(of_size.iter().map(|r| f(r)).collect());
            SizeMedians {
                size,
                h: of_size[0].h,
                ks_kcdf: pick(|r| r.ks_kcdf),
                ks_esd: pick(|r| r.ks_esd),
                sup_density_error: pick(|r| r.sup_density_error),
            }
        })
        .collect();
    Ok(ConvergenceSummary {
        config: config.clone(),
        rows,
        medians,
    })
}

impl ConvergenceSummary {
    /// Data rows for each size followed by that size's median row.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# command=convergence, {}\nsize,replicate,seed,h,ks_kcdf,ks_esd,sup_density_error\n",
            self.config.describe()
        );
        for m in &self.medians {
            for r in self.rows.iter().filter(|r| r.size == m.size) {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.size, r.replicate, r.seed, r.h, r.ks_kcdf, r.ks_esd, r.sup_density_error
                );
            }
            let _ = writeln!(
                out,
                "{},median,,{},{},{},{}",
                m.size, m.h, m.ks_kcdf, m.ks_esd, m.sup_density_error
            );
        }
        out
    }
}

/// Median; the mean of the two middle values for even lengths.
pub fn median(mut values: Vec<f64>) -> f64 {
    assert!(!values.is_empty(), "median of an empty sample");
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

/// Result of the Cauchy-kernel identity sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub n: usize,
    pub h: f64,
    pub points: usize,
    pub max_difference: f64,
}

/// Largest difference tolerated between the two closed forms.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Sweeps the Cauchy-kernel identity over a 101-point grid on `[-3, 3]`.
pub fn identity_sweep(spectrum: &Spectrum, h: f64) -> Result<IdentityReport> {
    let grid = linear_grid(-3.0, 3.0, 101)?;
    let mut max_difference: f64 = 0.0;
    for &x in &grid {
        max_difference = max_difference.max(cauchy_kernel_identity_check(spectrum, h, x)?.abs_difference);
    }
    Ok(IdentityReport {
        n: spectrum.len(),
        h,
        points: grid.len(),
        max_difference,
    })
}

impl IdentityReport {
    /// `Err(Tolerance)` when the sweep exceeded [`IDENTITY_TOLERANCE`].
    pub fn check(&self) -> Result<()> {
        if self.max_difference <= IDENTITY_TOLERANCE {
            Ok(())
        } else {
            Err(Error::Tolerance(format!(
                "max |kde_cauchy - Im m / pi| = {:e} exceeds {:e}",
                self.max_difference, IDENTITY_TOLERANCE
            )))
        }
    }
}

/// Identity sweep on a freshly sampled `W_n` with `h = n^{-2/5}`.
pub fn identity_check(dist: EntryDistribution, n: usize, seed: u64) -> Result<IdentityReport> {
    let spectrum = spectrum_for(dist, n, seed)?;
    identity_sweep(&spectrum, bandwidth_default(n)?)
}
