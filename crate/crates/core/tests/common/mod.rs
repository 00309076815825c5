#![allow(dead_code)]

//! Test-only numerical oracles, independent of the library's code paths.

/// Adaptive Simpson, written out separately from the library's quadrature.
pub fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
        let right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    rec(f, a, b, fa, fm, fb, (b - a) * (fa + 4.0 * fm + fb) / 6.0, tol, 60)
}

/// [`simpson`] over unit-width pieces, so narrow features are not missed.
pub fn simpson_pieces(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let pieces = ((b - a).ceil() as usize).max(1);
    let w = (b - a) / pieces as f64;
    (0..pieces)
        .map(|i| {
            let lo = a + i as f64 * w;
            let hi = if i + 1 == pieces { b } else { lo + w };
            simpson(f, lo, hi, tol / pieces as f64)
        })
        .sum()
}

/// Plain bisection for a sign change of `g` on `[lo, hi]`.
pub fn bisect(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    let g_lo = g(lo);
    assert!(g_lo * g(hi) < 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) == (g_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Small deterministic generator for test inputs (SplitMix64).
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * ((self.next_u64() >> 11) as f64 / (1u64 << 53) as f64)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Symmetric matrix with upper-triangle entries uniform on `[-1, 1]`.
pub fn random_symmetric(n: usize, rng: &mut TestRng) -> wigner_kde::SymmetricMatrix {
    wigner_kde::SymmetricMatrix::from_upper_fn(n, |_, _| rng.uniform(-1.0, 1.0))
}

pub fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<f64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

/// Roots of det(M - x I) located by a sign-change scan over the Gershgorin
/// interval followed by bisection.
pub fn char_poly_roots(m: &wigner_kde::SymmetricMatrix) -> Vec<f64> {
    let n = m.n();
    let p = |x: f64| {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..n).map(|k| m.get(j, k) - if j == k { x } else { 0.0 }).collect())
            .collect();
        det(&rows)
    };
    let radius = (0..n)
        .map(|j| m.get(j, j).abs() + (0..n).filter(|&k| k != j).map(|k| m.get(j, k).abs()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    let steps = 20_000;
    let mut roots = Vec::new();
    let mut prev_x = -radius;
    let mut prev = p(prev_x);
    for i in 1..=steps {
        let x = -radius + 2.0 * radius * i as f64 / steps as f64;
        let v = p(x);
        if prev == 0.0 {
            roots.push(prev_x);
        } else if prev * v < 0.0 {
            let (mut lo, mut hi) = (prev_x, x);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if (p(mid) < 0.0) == (prev < 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev = v;
    }
    roots
}
