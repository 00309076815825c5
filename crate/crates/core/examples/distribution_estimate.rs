// The smooth kernel distribution estimator against the step-function
// empirical spectral distribution.
//
// ```bash
// cargo run --example distribution_estimate
// ```

use wigner_kde::experiment::{figure, kolmogorov_kcdf, spectrum_for, FigureId, FigureOptions, GridSpec};
use wigner_kde::{bandwidth_default, kolmogorov_esd, semicircle_cdf, EntryDistribution, KernelSpec};

pub fn run_example() -> wigner_kde::Result<(f64, f64)> {
    let n = 50;
    let kernel = KernelSpec::gaussian();
    let h = bandwidth_default(n)?;
    let spectrum = spectrum_for(EntryDistribution::ShiftedExponential, n, 3)?;
    let ks_kcdf = kolmogorov_kcdf(&spectrum, &kernel, h, GridSpec::FIGURE)?;
    let ks_esd = kolmogorov_esd(&spectrum, semicircle_cdf);
    println!("n = {n}: sup |F_n - F| = {ks_kcdf:.4} (kernel), {ks_esd:.4} (empirical)");

    let table = figure(FigureId::from_number(3)?, 3, &FigureOptions::default())?;
    let x = &table.x;
    let kcdf = table.column("kcdf_n50").unwrap_or(&[]);
    for i in (0..x.len()).step_by(100) {
        println!("x = {:>5.2}  kcdf = {:.4}", x[i], kcdf[i]);
    }
    Ok((ks_kcdf, ks_esd))
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
