// Sample a Wigner matrix, solve for its spectrum and compare the empirical
// spectral distribution with the semicircle law.
//
// ```bash
// cargo run --example wigner_spectrum
// ```

use wigner_kde::{
    build_wigner, kolmogorov_esd, semicircle_cdf, symmetric_eigenvalues, EntryDistribution, Spectrum,
};

pub fn run_example() -> wigner_kde::Result<Spectrum> {
    let w = build_wigner(EntryDistribution::ShiftedExponential, 400, 7)?;
    let spectrum = symmetric_eigenvalues(&w.matrix)?.with_scaling(w.scaling.b_n);

    // the eigenvalues carry the trace and the Frobenius norm of W_n
    let sum: f64 = spectrum.eigenvalues().iter().sum();
    let sq: f64 = spectrum.eigenvalues().iter().map(|v| v * v).sum();
    println!("n = 400, b_n = {:.4}", w.scaling.b_n);
    println!("trace {:.6} vs {:.6}", sum, w.matrix.trace());
    println!("sum of squares {:.6} vs {:.6}", sq, w.matrix.frobenius_sq());
    println!("support [{:.4}, {:.4}]", spectrum.min(), spectrum.max());
    println!("Kolmogorov distance to the semicircle law {:.4}", kolmogorov_esd(&spectrum, semicircle_cdf));
    Ok(spectrum)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
