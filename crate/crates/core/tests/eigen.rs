mod common;

use common::{char_poly_roots, random_symmetric, TestRng};
use proptest::prelude::*;
use wigner_kde::{build_wigner, symmetric_eigenvalues, tridiagonalize, EntryDistribution, SymmetricMatrix};

#[test]
fn characteristic_polynomial_oracle_small_n() {
    let mut rng = TestRng::new(7);
    for n in 1..=4 {
        for _ in 0..25 {
            let m = random_symmetric(n, &mut rng);
            let roots = char_poly_roots(&m);
            assert_eq!(roots.len(), n, "oracle missed a root for n={n}");
            let got = symmetric_eigenvalues(&m).unwrap();
            for (g, r) in got.eigenvalues().iter().zip(&roots) {
                assert!((g - r).abs() < 1e-8, "n={n}: {:?} vs {roots:?}", got.eigenvalues());
            }
        }
    }
}

#[test]
fn toeplitz_eigenvalues() {
    for n in [1usize, 2, 3, 5, 10, 64, 200] {
        let m = SymmetricMatrix::from_upper_fn(n, |j, k| match k - j {
            0 => 2.0,
            1 => 1.0,
            _ => 0.0,
        });
        let got = symmetric_eigenvalues(&m).unwrap();
        let mut want: Vec<f64> = (1..=n)
            .map(|k| 2.0 + 2.0 * (k as f64 * std::f64::consts::PI / (n + 1) as f64).cos())
            .collect();
        want.sort_by(f64::total_cmp);
        for (g, w) in got.eigenvalues().iter().zip(&want) {
            assert!((g - w).abs() < 1e-10, "n={n}: {g} vs {w}");
        }
    }
}

#[test]
fn similarity_invariants_up_to_400() {
    let mut rng = TestRng::new(99);
    for n in [5usize, 37, 100, 250, 400] {
        let m = random_symmetric(n, &mut rng);
        let s = symmetric_eigenvalues(&m).unwrap();
        assert_eq!(s.len(), n);
        assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        let sum: f64 = s.eigenvalues().iter().sum();
        let sq: f64 = s.eigenvalues().iter().map(|v| v * v).sum();
        let scale = m.frobenius_sq().sqrt() * n as f64;
        assert!((sum - m.trace()).abs() <= 1e-9 * scale, "n={n} trace");
        assert!((sq - m.frobenius_sq()).abs() <= 1e-9 * m.frobenius_sq(), "n={n} frobenius");
    }
}

#[test]
fn tridiagonalization_preserves_trace_and_norm() {
    let mut rng = TestRng::new(3);
    let m = random_symmetric(6, &mut rng);
    let t = tridiagonalize(&m);
    let trace: f64 = t.diagonal.iter().sum();
    let frob: f64 = t.diagonal.iter().map(|d| d * d).sum::<f64>()
        + 2.0 * t.offdiagonal.iter().map(|e| e * e).sum::<f64>();
    assert!((trace - m.trace()).abs() <= 1e-12 * m.trace().abs().max(1.0));
    assert!((frob - m.frobenius_sq()).abs() <= 1e-12 * m.frobenius_sq());
}

#[test]
fn wigner_spectrum_solves_at_scale() {
    let w = build_wigner(EntryDistribution::ShiftedExponential, 800, 1).unwrap();
    let s = symmetric_eigenvalues(&w.matrix).unwrap();
    let sq: f64 = s.eigenvalues().iter().map(|v| v * v).sum();
    assert!((sq - w.matrix.frobenius_sq()).abs() <= 1e-9 * w.matrix.frobenius_sq());
}

#[test]
fn repeated_eigenvalues() {
    let m = SymmetricMatrix::from_upper_fn(6, |_, _| 1.0); // rank one: {0 x5, 6}
    let s = symmetric_eigenvalues(&m).unwrap();
    for v in &s.eigenvalues()[..5] {
        assert!(v.abs() < 1e-14);
    }
    assert!((s.eigenvalues()[5] - 6.0).abs() < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_invariance(seed in any::<u64>(), n in 2usize..30) {
        let mut rng = TestRng::new(seed);
        let m = random_symmetric(n, &mut rng);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.below(i + 1));
        }
        let a = symmetric_eigenvalues(&m).unwrap();
        let b = symmetric_eigenvalues(&m.permuted(&perm)).unwrap();
        for (x, y) in a.eigenvalues().iter().zip(b.eigenvalues()) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn shift_invariance(seed in any::<u64>(), n in 1usize..30, c in -5.0f64..5.0) {
        let mut rng = TestRng::new(seed);
        let m = random_symmetric(n, &mut rng);
        let a = symmetric_eigenvalues(&m).unwrap();
        let b = symmetric_eigenvalues(&m.shifted(c)).unwrap();
        for (x, y) in a.eigenvalues().iter().zip(b.eigenvalues()) {
            prop_assert!((x + c - y).abs() < 1e-10);
        }
    }
}
