// Kernel density estimates of the semicircle density from one spectrum
// per matrix size.
//
// ```bash
// cargo run --example density_estimate
// ```

use wigner_kde::experiment::spectrum_for;
use wigner_kde::{
    bandwidth_default, kde_at, semicircle_grid, semicircle_pdf, sup_density_error, EntryDistribution,
    KernelSpec,
};

pub fn run_example() -> wigner_kde::Result<Vec<(usize, f64)>> {
    let kernel = KernelSpec::gaussian();
    let mut errors = Vec::new();
    for n in [50, 200, 800] {
        let spectrum = spectrum_for(EntryDistribution::ShiftedPoisson, n, 1)?;
        let h = bandwidth_default(n)?;
        let f = |x: f64| kde_at(&spectrum, &kernel, h, x).unwrap_or(f64::NAN);
        let sup = sup_density_error(f, &semicircle_grid())?;
        println!("n = {n:>3}, h = {h:.4}, f_n(0) = {:.4}, sup error on [-2, 2] = {sup:.4}", f(0.0));
        errors.push((n, sup));
    }
    println!("semicircle density at 0: {:.4}", semicircle_pdf(0.0));
    Ok(errors)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
