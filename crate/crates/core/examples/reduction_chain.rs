// The truncation and renormalization steps that reduce a heavy-tailed
// Wigner matrix to bounded centred entries, with the two matrix
// inequalities that control each step.
//
// ```bash
// cargo run --release --example reduction_chain
// ```

use wigner_kde::{
    kolmogorov_spectra, levy_cube_trace_bound, rank_inequality_check, reduction_chain, sample_raw,
    symmetric_eigenvalues, EntryDistribution,
};

pub fn run_example() -> wigner_kde::Result<f64> {
    let dist = EntryDistribution::LogTailHeavy;
    let n = 200;
    let b_n = dist.scaling_constant(n)?.b_n;
    let raw = sample_raw(dist, n, 21)?;
    let chain = reduction_chain(&raw, dist, b_n)?;

    let trace = levy_cube_trace_bound(&chain.wigner, &chain.diagonal_removed)?;
    println!("drop diagonal: L^3 {:.2e} <= {:.2e} + 1e-4: {}", trace.lhs, trace.rhs, trace.holds);

    // truncation only touches rows that hold an entry above b_n
    let cut_rows = (0..n)
        .filter(|&j| (0..n).any(|k| k != j && raw.get(j, k).abs() > b_n))
        .count();
    let rank = rank_inequality_check(&chain.diagonal_removed, &chain.truncated, 2 * cut_rows)?;
    println!(
        "truncate: {cut_rows} rows touched, sup diff {:.4} <= {:.4}: {}",
        rank.sup_diff, rank.bound, rank.holds
    );

    let trace = levy_cube_trace_bound(&chain.truncated, &chain.normalized)?;
    println!("recentre: L^3 {:.2e} <= {:.2e} + 1e-4: {}", trace.lhs, trace.rhs, trace.holds);

    let before = symmetric_eigenvalues(&chain.wigner)?;
    let after = symmetric_eigenvalues(&chain.normalized)?;
    let ks = kolmogorov_spectra(&before, &after);
    println!("Kolmogorov distance between the end points {ks:.4}");
    Ok(ks)
}

#[allow(dead_code)]
fn main() -> wigner_kde::Result<()> {
    run_example().map(|_| ())
}
