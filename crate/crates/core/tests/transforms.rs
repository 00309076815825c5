mod common;

use common::{median, TestRng};
use num_complex::Complex64;
use proptest::prelude::*;
use wigner_kde::experiment::spectrum_for;
use wigner_kde::{
    bandwidth_default, cauchy_kernel_identity_check, linear_grid, stieltjes_esd, stieltjes_semicircle,
    ComplexPoint, EntryDistribution, Spectrum,
};

#[test]
fn pair_transform_by_hand() {
    let s = Spectrum::from_values(vec![-1.0, 1.0]).unwrap();
    let z = Complex64::new(0.0, 1.0);
    let brute = (Complex64::new(-1.0, 0.0) - z).inv() * 0.5 + (Complex64::new(1.0, 0.0) - z).inv() * 0.5;
    let got = stieltjes_esd(&s, ComplexPoint::new(0.0, 1.0).unwrap());
    assert!((got - brute).norm() < 1e-16);
    assert!((got - Complex64::new(0.0, 0.5)).norm() < 1e-16);
}

#[test]
fn identity_on_pair() {
    let s = Spectrum::from_values(vec![-1.0, 1.0]).unwrap();
    let c = cauchy_kernel_identity_check(&s, 0.5, 0.3).unwrap();
    // closed forms evaluated independently
    let kde = [(-1.0f64), 1.0]
        .iter()
        .map(|mu| {
            let u = (0.3 - mu) / 0.5;
            1.0 / (std::f64::consts::PI * (1.0 + u * u)) / 0.5
        })
        .sum::<f64>()
        / 2.0;
    assert!((c.kde_value - kde).abs() < 1e-14);
    assert!(c.abs_difference < 1e-12);
}

#[test]
fn identity_on_random_spectrum() {
    let mut rng = TestRng::new(50);
    let s = Spectrum::from_values((0..50).map(|_| rng.uniform(-2.0, 2.0)).collect()).unwrap();
    let h = bandwidth_default(50).unwrap();
    for x in linear_grid(-3.0, 3.0, 101).unwrap() {
        assert!(cauchy_kernel_identity_check(&s, h, x).unwrap().abs_difference < 1e-12);
    }
}

#[test]
fn semicircle_transform_far_up_the_axis() {
    let s = stieltjes_semicircle(ComplexPoint::new(0.0, 10.0).unwrap());
    assert!(s.re.abs() < 1e-15);
    assert!(s.norm() < 0.1 + 0.02);
    let y = 1e3;
    let s = stieltjes_semicircle(ComplexPoint::new(0.0, y).unwrap());
    let diff = (s + Complex64::new(0.0, y).inv()).norm();
    assert!(diff < 2e-6, "{diff}");
}

#[test]
fn esd_transform_approaches_semicircle() {
    let z = ComplexPoint::new(0.5, 0.5).unwrap();
    let target = stieltjes_semicircle(z);
    let diffs: Vec<f64> = (0..10)
        .map(|seed| {
            let s = spectrum_for(EntryDistribution::StandardNormal, 800, seed).unwrap();
            (stieltjes_esd(&s, z) - target).norm()
        })
        .collect();
    let m = median(diffs);
    assert!(m < 0.05, "median |m_n - s| = {m}");
}

proptest! {
    #[test]
    fn herglotz(
        eig in prop::collection::vec(-1e3f64..1e3, 1..50),
        re in -1e3f64..1e3,
        im in 1e-6f64..1e3,
    ) {
        let s = Spectrum::from_values(eig).unwrap();
        let z = ComplexPoint::new(re, im).unwrap();
        prop_assert!(stieltjes_esd(&s, z).im > 0.0);
        let sc = stieltjes_semicircle(z);
        prop_assert!(sc.im > 0.0);
        let res = sc * sc + z.as_complex() * sc + 1.0;
        prop_assert!(res.norm() < 1e-12);
    }

    #[test]
    fn cauchy_identity_holds(
        eig in prop::collection::vec(-3.0f64..3.0, 1..80),
        h in 0.01f64..2.0,
        x in -4.0f64..4.0,
    ) {
        let s = Spectrum::from_values(eig).unwrap();
        prop_assert!(cauchy_kernel_identity_check(&s, h, x).unwrap().abs_difference <= 1e-12);
    }
}
