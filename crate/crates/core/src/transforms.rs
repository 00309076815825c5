//! Stieltjes transforms `m(z) = \int (lambda - z)^{-1} dF(lambda)` on the
//! upper half plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::eigen::Spectrum;
use crate::error::{Error, Result};
use crate::estimators::{kde_at, KernelSpec};

/// A point `re + i im` with `im > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint(Complex64);

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if im > 0.0 && re.is_finite() && im.is_finite() {
            Ok(Self(Complex64::new(re, im)))
        } else {
            Err(Error::Domain(format!(
                "evaluation point must lie in the upper half plane, got {re} + {im}i"
            )))
        }
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn as_complex(self) -> Complex64 {
        self.0
    }
}

/// `(1/p) sum_i 1/(mu_i - z)`.
pub fn stieltjes_esd(spectrum: &Spectrum, z: ComplexPoint) -> Complex64 {
    let z = z.0;
    let sum: Complex64 = spectrum.eigenvalues().iter().map(|&mu| (mu - z).inv()).sum();
    sum / spectrum.len() as f64
}

/// Transform of the semicircle law: the root of `s^2 + z s + 1 = 0` with
/// positive imaginary part.
pub fn stieltjes_semicircle(z: ComplexPoint) -> Complex64 {
    let z = z.0;
    let root = (z * z - 4.0).sqrt();
    let a = (-z + root) * 0.5;
    let b = (-z - root) * 0.5;
    // the two roots multiply to 1, so exactly one lies in the upper half plane
    let s = if a.im > b.im { a } else { b };
    // one Newton step on the quadratic cleans up cancellation for large |z|
    let residual = s * s + z * s + 1.0;
    s - residual / (2.0 * s + z)
}

/// Both sides of the Cauchy-kernel identity at `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    pub kde_value: f64,
    pub transform_value: f64,
    pub abs_difference: f64,
}

/// Compares the Cauchy-kernel density estimate at `x` with `Im m(x + ih) / pi`.
pub fn cauchy_kernel_identity_check(spectrum: &Spectrum, h: f64, x: f64) -> Result<IdentityCheck> {
    let kde_value = kde_at(spectrum, &KernelSpec::cauchy(), h, x)?;
    let transform_value = stieltjes_esd(spectrum, ComplexPoint::new(x, h)?).im / PI;
    Ok(IdentityCheck {
        kde_value,
        transform_value,
        abs_difference: (kde_value - transform_value).abs(),
    })
}
