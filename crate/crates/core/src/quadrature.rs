//! Adaptive Simpson quadrature.

/// `\int_a^b f` to absolute tolerance `tol` (heuristic, Richardson-corrected).
pub fn integrate(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// `\int_R f` through the substitution `x = tan(theta)`.
pub fn integrate_real_line(f: &impl Fn(f64) -> f64, tol: f64) -> f64 {
    let edge = std::f64::consts::FRAC_PI_2 * (1.0 - 1e-12);
    let g = |theta: f64| {
        let t = theta.tan();
        let v = f(t) * (1.0 + t * t);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    // split at 0 so symmetric integrands are resolved on each half
    integrate(&g, -edge, 0.0, 0.5 * tol) + integrate(&g, 0.0, edge, 0.5 * tol)
}
