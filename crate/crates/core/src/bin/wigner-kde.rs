//! Command-line front end for the simulation presets.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 numeric failure,
//! 3 tolerance breach.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wigner_kde::experiment::{
    figure, identity_check, identity_sweep, run_convergence, spectrum_csv, ExperimentConfig,
    FigureId, FigureOptions, GridSpec,
};
use wigner_kde::{BandwidthRule, EntryDistribution, KernelSpec, Result, Spectrum};

#[derive(Parser)]
#[command(name = "wigner-kde", version, about = "Wigner matrix spectra and kernel estimators of the semicircle law")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample W_n and write its sorted eigenvalues.
    Spectrum {
        #[arg(long, default_value = "standard_normal")]
        dist: EntryDistribution,
        #[arg(long, value_parser = matrix_size)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the CSV behind one of the simulation-study figures.
    Figure {
        #[arg(long)]
        fig: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "gaussian")]
        kernel: KernelSpec,
        #[arg(long, default_value = "default")]
        bandwidth: BandwidthRule,
        #[arg(long, default_value = "-3:3:601")]
        grid: GridSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replicated distances to the semicircle law across matrix sizes.
    Convergence(ConvergenceArgs),
    /// Compare the Cauchy-kernel density estimate with Im m(x + ih)/pi.
    IdentityCheck {
        #[arg(long, default_value = "standard_normal")]
        dist: EntryDistribution,
        #[arg(long, default_value_t = 50, value_parser = matrix_size)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use eigenvalues from this file instead of sampling.
        #[arg(long)]
        spectrum: Option<PathBuf>,
        #[arg(long)]
        bandwidth: Option<BandwidthRule>,
    },
}

#[derive(Args)]
struct ConvergenceArgs {
    /// key=value config file; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    dist: Option<String>,
    /// Comma-separated matrix sizes.
    #[arg(long = "n", alias = "sizes")]
    sizes: Option<String>,
    #[arg(long)]
    kernel: Option<String>,
    #[arg(long)]
    bandwidth: Option<String>,
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    replicates: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn matrix_size(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        Ok(n) => Err(format!("matrix size must be >= 2, got {n}")),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Spectrum { dist, n, seed, out } => {
            let csv = spectrum_csv(dist, n, seed)?;
            emit(out.as_deref(), &format!("spectrum_{dist}_n{n}_seed{seed}.csv"), &csv)
        }
        Command::Figure {
            fig,
            seed,
            kernel,
            bandwidth,
            grid,
            out,
        } => {
            let fig = FigureId::from_number(fig)?;
            let options = FigureOptions {
                kernel,
                bandwidth,
                grid,
            };
            let table = figure(fig, seed, &options)?;
            emit(out.as_deref(), &format!("figure{}.csv", fig.number()), &table.to_csv())
        }
        Command::Convergence(args) => {
            let mut config = match &args.config {
                Some(path) => ExperimentConfig::parse(&fs::read_to_string(path)?)?,
                None => ExperimentConfig::default(),
            };
            let overrides = [
                ("dist", &args.dist),
                ("sizes", &args.sizes),
                ("kernel", &args.kernel),
                ("bandwidth", &args.bandwidth),
                ("grid", &args.grid),
                ("replicates", &args.replicates),
                ("seed", &args.seed),
            ];
            for (key, value) in overrides {
                if let Some(v) = value {
                    config.set(key, v)?;
                }
            }
            if let Some(out) = args.out {
                config.out_dir = Some(out);
            }
            config.validate()?;
            let summary = run_convergence(&config)?;
            emit(config.out_dir.as_deref(), "convergence.csv", &summary.to_csv())
        }
        Command::IdentityCheck {
            dist,
            n,
            seed,
            spectrum,
            bandwidth,
        } => {
            let report = match spectrum {
                Some(path) => {
                    let spectrum = Spectrum::parse_csv(&fs::read_to_string(&path)?)
                        .map_err(|e| e.context(path.display().to_string()))?;
                    let h = bandwidth
                        .unwrap_or(BandwidthRule::Default)
                        .resolve(spectrum.len().max(2))?;
                    identity_sweep(&spectrum, h)?
                }
                None => match bandwidth {
                    Some(rule) => {
                        let spectrum = wigner_kde::experiment::spectrum_for(dist, n, seed)?;
                        identity_sweep(&spectrum, rule.resolve(n)?)?
                    }
                    None => identity_check(dist, n, seed)?,
                },
            };
            println!(
                "n={} h={} points={} max_abs_difference={:e}",
                report.n, report.h, report.points, report.max_difference
            );
            report.check()
        }
    }
}

fn emit(dir: Option<&Path>, file_name: &str, contents: &str) -> Result<()> {
    match dir {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let path = dir.join(file_name);
            fs::write(&path, contents)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

