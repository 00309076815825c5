// Registering a kernel beyond the built-in Gaussian and Cauchy ones.
//
// ```bash
// cargo run --example custom_kernel
// ```

use wigner_kde::experiment::spectrum_for;
use wigner_kde::{bandwidth_default, curve, linear_grid, CurveKind, EntryDistribution, KernelSpec};

fn logistic_pdf(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    e / ((1.0 + e) * (1.0 + e))
}

fn logistic_cdf(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

pub fn run_example() -> wigner_kde::Result<String> {
    let kernel = KernelSpec::custom("logistic", logistic_pdf, logistic_cdf)?;
    // a kernel whose mass is wrong is rejected at registration
    assert!(KernelSpec::custom("half", |x| 0.5 * logistic_pdf(x), logistic_cdf).is_err());

    let n = 100;
    let spectrum = spectrum_for(EntryDistribution::StandardNormal, n, 2)?;
    let grid = linear_grid(-3.0, 3.0, 13)?;
    let estimate = curve(CurveKind::Kcdf, &spectrum, &kernel, bandwidth_default(n)?, &grid)?.with_seed(2);
    estimate.check_invariants()?;
    let csv = estimate.to_csv();
    print!("{csv}");
    Ok(csv)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
