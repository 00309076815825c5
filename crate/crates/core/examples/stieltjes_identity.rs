// The Cauchy-kernel density estimate equals Im m(x + ih) / pi, where m is
// the Stieltjes transform of the empirical spectral distribution.
//
// ```bash
// cargo run --example stieltjes_identity
// ```

use wigner_kde::experiment::{identity_sweep, spectrum_for};
use wigner_kde::{
    bandwidth_default, cauchy_kernel_identity_check, stieltjes_esd, stieltjes_semicircle, ComplexPoint,
    EntryDistribution,
};

pub fn run_example() -> wigner_kde::Result<f64> {
    let n = 200;
    let spectrum = spectrum_for(EntryDistribution::StandardNormal, n, 5)?;
    let h = bandwidth_default(n)?;

    let check = cauchy_kernel_identity_check(&spectrum, h, 0.5)?;
    println!(
        "x = 0.5: kde {:.12}, Im m / pi {:.12}, difference {:.1e}",
        check.kde_value, check.transform_value, check.abs_difference
    );
    let report = identity_sweep(&spectrum, h)?;
    println!("max difference over {} points: {:.1e}", report.points, report.max_difference);
    report.check()?;

    let z = ComplexPoint::new(0.5, 0.5)?;
    let m = stieltjes_esd(&spectrum, z);
    let s = stieltjes_semicircle(z);
    println!("m_n(z) = {m:.4}, s(z) = {s:.4}, |m_n - s| = {:.4}", (m - s).norm());
    Ok(report.max_difference)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
