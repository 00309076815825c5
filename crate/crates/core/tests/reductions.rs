mod common;

use common::{median, simpson_pieces, TestRng};
use proptest::prelude::*;
use wigner_kde::reductions::truncated_moments;
use wigner_kde::{
    center_and_rescale, lindeberg_diagnostic, reduction_chain, sample_raw, truncate_entries,
    zero_diagonal, EntryDistribution, SymmetricMatrix,
};

#[test]
fn exponential_centering_uses_truncated_moments() {
    let b = 800f64.sqrt();
    let density = |t: f64| if t >= -1.0 { (-(t + 1.0)).exp() } else { 0.0 };
    let mu = simpson_pieces(&|t| t * density(t), -1.0, b, 1e-14);
    let second = simpson_pieces(&|t| t * t * density(t), -1.0, b, 1e-14);
    let var = second - mu * mu;
    let m = truncated_moments(EntryDistribution::ShiftedExponential, b).unwrap();
    assert!((m.mean - mu).abs() < 1e-10);
    assert!((m.variance - var).abs() < 1e-10);

    let raw = SymmetricMatrix::from_upper_fn(800, |j, k| if j == 0 && k == 1 { 0.0 } else { 1.0 });
    let out = center_and_rescale(&raw, EntryDistribution::ShiftedExponential, b, 800).unwrap();
    let want = -mu / (800.0 * var).sqrt();
    assert!((out.get(0, 1) - want).abs() < 1e-15);
    assert_eq!(out.get(0, 0), 0.0);
}

#[test]
fn truncation_is_idempotent() {
    let raw = sample_raw(EntryDistribution::LogTailHeavy, 60, 3).unwrap();
    let b = 5.0;
    let cut = raw.map_upper(|_, _, x| if x.abs() <= b { x } else { 0.0 });
    assert_eq!(truncate_entries(&raw, b).unwrap(), truncate_entries(&cut, b).unwrap());
    assert_eq!(
        center_and_rescale(&raw, EntryDistribution::LogTailHeavy, b, 60).unwrap(),
        center_and_rescale(&cut, EntryDistribution::LogTailHeavy, b, 60).unwrap()
    );
}

#[test]
fn heavy_normalisation_equals_b_n() {
    // sigma_t^2 = l(b_n) and n l(b_n) = b_n^2 at the root
    let d = EntryDistribution::LogTailHeavy;
    let s = d.scaling_constant(400).unwrap();
    let m = truncated_moments(d, s.b_n).unwrap();
    assert!(((400.0 * m.variance).sqrt() - s.b_n).abs() < 1e-8 * s.b_n);
}

/// Exact Lindeberg quantity for the heavy law when the threshold exceeds
/// the smallest |Y|: E[Y^2; |Y| > t] = 2 ln(b / (t sigma)) / sigma^2.
fn heavy_lindeberg_exact(n: usize, eta: f64) -> f64 {
    let b = EntryDistribution::LogTailHeavy.scaling_constant(n).unwrap().b_n;
    let var = 2.0 * b.ln();
    let cut = eta * (n as f64).sqrt() * var.sqrt();
    if cut >= b {
        0.0
    } else {
        2.0 * (b / cut.max(1.0)).ln() / var
    }
}

#[test]
fn lindeberg_monte_carlo_matches_exact_heavy_value() {
    for &(n, eta) in &[(100usize, 0.5), (1000, 0.5), (10_000, 0.04)] {
        let exact = heavy_lindeberg_exact(n, eta);
        let mc = lindeberg_diagnostic(EntryDistribution::LogTailHeavy, n, eta, 1_000_000, 77).unwrap();
        assert!((mc - exact).abs() < 0.03 + 0.05 * exact, "n={n}: {mc} vs {exact}");
    }
}

#[test]
fn lindeberg_heavy_decreases_along_ladder() {
    let meds: Vec<f64> = [100usize, 1000, 10_000]
        .iter()
        .map(|&n| {
            median(
                (0..5)
                    .map(|s| lindeberg_diagnostic(EntryDistribution::LogTailHeavy, n, 0.5, 1_000_000, s).unwrap())
                    .collect(),
            )
        })
        .collect();
    assert!(meds[0] > meds[1] && meds[1] > meds[2], "{meds:?}");
}

#[test]
fn chain_shapes() {
    let raw = sample_raw(EntryDistribution::ShiftedExponential, 12, 1).unwrap();
    let c = reduction_chain(&raw, EntryDistribution::ShiftedExponential, 12f64.sqrt()).unwrap();
    assert_eq!(c.diagonal_removed.trace(), 0.0);
    assert_eq!(c.truncated.trace(), 0.0);
    assert_eq!(c.normalized.trace(), 0.0);
    assert_eq!(c.wigner.get(3, 4), raw.get(3, 4) / 12f64.sqrt());
}

proptest! {
    #[test]
    fn transforms_preserve_symmetry(seed in any::<u64>(), n in 2usize..20, b in 0.1f64..5.0) {
        let mut rng = TestRng::new(seed);
        let m = SymmetricMatrix::from_upper_fn(n, |_, _| rng.uniform(-6.0, 6.0));
        prop_assert!(zero_diagonal(&m).is_symmetric());
        prop_assert!(zero_diagonal(&m).trace() == 0.0);
        prop_assert!(truncate_entries(&m, b).unwrap().is_symmetric());
        for d in EntryDistribution::ALL {
            prop_assert!(center_and_rescale(&m, d, b.max(1.5), n).unwrap().is_symmetric());
        }
    }
}
