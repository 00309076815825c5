// Monte Carlo Lindeberg quantity E[Y^2; |Y| > eta sqrt(n)] for the
// truncated and standardized entries.
//
// ```bash
// cargo run --release --example lindeberg
// ```

use wigner_kde::{lindeberg_diagnostic, EntryDistribution};

pub fn run_example() -> wigner_kde::Result<Vec<Vec<f64>>> {
    let eta = 0.04;
    let mut table = Vec::new();
    for dist in EntryDistribution::ALL {
        let row = [100, 1000, 10_000]
            .iter()
            .map(|&n| lindeberg_diagnostic(dist, n, eta, 100_000, 1))
            .collect::<wigner_kde::Result<Vec<f64>>>()?;
        println!("{dist:>20}: {:.3e} {:.3e} {:.3e}", row[0], row[1], row[2]);
        table.push(row);
    }
    Ok(table)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
