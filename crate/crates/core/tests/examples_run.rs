//! Every example under `examples/` runs and produces sensible output.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(wigner_spectrum);
example!(density_estimate);
example!(distribution_estimate);
example!(heavy_tail);
example!(stieltjes_identity);
example!(reduction_chain);
example!(lindeberg);
example!(custom_kernel);
example!(convergence_study);

#[test]
fn wigner_spectrum_runs() {
    let s = wigner_spectrum::run_example().unwrap();
    assert_eq!(s.len(), 400);
    assert!(s.min() > -3.0 && s.max() < 3.0);
}

#[test]
fn density_estimate_runs() {
    let errors = density_estimate::run_example().unwrap();
    assert!(errors[2].1 < errors[0].1);
}

#[test]
fn distribution_estimate_runs() {
    let (kcdf, esd) = distribution_estimate::run_example().unwrap();
    assert!(kcdf > 0.0 && esd > 0.0 && kcdf < 0.2 && esd < 0.2);
}

#[test]
fn heavy_tail_runs() {
    let d = heavy_tail::run_example().unwrap();
    assert!(d.iter().all(|&v| v > 0.0 && v < 0.2));
}

#[test]
fn stieltjes_identity_runs() {
    assert!(stieltjes_identity::run_example().unwrap() <= 1e-12);
}

#[test]
fn reduction_chain_runs() {
    assert!(reduction_chain::run_example().unwrap() < 0.1);
}

#[test]
fn lindeberg_runs() {
    let table = lindeberg::run_example().unwrap();
    assert_eq!(table.len(), 4);
    assert!(table.iter().all(|row| row[2] < row[0]));
}

#[test]
fn custom_kernel_runs() {
    let csv = custom_kernel::run_example().unwrap();
    assert!(csv.starts_with("# n=100"));
    assert!(csv.contains("kernel=logistic"));
    assert_eq!(csv.lines().count(), 2 + 13);
}

#[test]
fn convergence_study_runs() {
    let csv = convergence_study::run_example().unwrap();
    assert_eq!(csv.lines().filter(|l| l.contains(",median,")).count(), 2);
}
