// A replicated convergence study driven by a key=value configuration.
//
// ```bash
// cargo run --release --example convergence_study
// ```

use wigner_kde::experiment::{run_convergence, ExperimentConfig};

const CONFIG: &str = "
# entries and sizes
dist = shifted_poisson
sizes = 50,200
kernel = gaussian
bandwidth = default
grid = -3:3:601
replicates = 5
seed = 100
";

pub fn run_example() -> wigner_kde::Result<String> {
    let config = ExperimentConfig::parse(CONFIG)?;
    let summary = run_convergence(&config)?;
    for m in &summary.medians {
        println!(
            "n = {:>3}: median KS(kcdf) {:.4}, KS(esd) {:.4}, sup density error {:.4}",
            m.size, m.ks_kcdf, m.ks_esd, m.sup_density_error
        );
    }
    Ok(summary.to_csv())
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
