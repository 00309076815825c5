// Infinite-variance entries in the domain of attraction of the normal law:
// the scaling constant, the slowly varying truncated second moment and the
// resulting semicircle convergence.
//
// ```bash
// cargo run --release --example heavy_tail
// ```

use wigner_kde::experiment::spectrum_for;
use wigner_kde::{kolmogorov_esd, semicircle_cdf, EntryDistribution};

pub fn run_example() -> wigner_kde::Result<Vec<f64>> {
    let dist = EntryDistribution::LogTailHeavy;
    for (x, ratio) in dist.tail_diagnostic(&[10.0, 1e3, 1e6])? {
        println!("x = {x:e}: x^2 P(|X| > x) / l(x) = {ratio:.4}");
    }
    let mut distances = Vec::new();
    for n in [100, 400] {
        let b = dist.scaling_constant(n)?;
        let spectrum = spectrum_for(dist, n, 11)?;
        let ks = kolmogorov_esd(&spectrum, semicircle_cdf);
        println!("n = {n}: b_n = {:.4} ({:?}), Kolmogorov distance {ks:.4}", b.b_n, b.mode);
        distances.push(ks);
    }
    Ok(distances)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
