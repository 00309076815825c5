//! Eigenvalues of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by implicit
//! Wilkinson-shift QL iteration. Eigenvectors are never formed.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Eigenvalues in ascending order. Never empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    source_n: usize,
    scaling_used: Option<f64>,
}

impl Spectrum {
    /// Sorts `values` ascending (stable, so ties keep input order).
    pub fn from_values(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("spectrum must be nonempty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("spectrum contains a non-finite value".into()));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self {
            source_n: values.len(),
            eigenvalues: values,
            scaling_used: None,
        })
    }

    pub fn with_scaling(mut self, b_n: f64) -> Self {
        self.scaling_used = Some(b_n);
        self
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    pub fn scaling_used(&self) -> Option<f64> {
        self.scaling_used
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    /// Number of eigenvalues `<= x`.
    pub fn count_le(&self, x: f64) -> usize {
        self.eigenvalues.partition_point(|&v| v <= x)
    }

    /// Every eigenvalue moved by `c`.
    pub fn shifted(&self, c: f64) -> Self {
        Self {
            eigenvalues: self.eigenvalues.iter().map(|v| v + c).collect(),
            ..self.clone()
        }
    }

    /// One eigenvalue per line, preceded by `#` comment lines.
    pub fn to_csv(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        for v in &self.eigenvalues {
            let _ = writeln!(out, "{v}");
        }
        out
    }

    /// Inverse of [`Spectrum::to_csv`]; blank and `#` lines are skipped.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: f64 = line.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("not a number: {line:?}"),
            })?;
            values.push(v);
        }
        if values.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no eigenvalues found".into(),
            });
        }
        Self::from_values(values)
    }
}

/// Symmetric tridiagonal matrix: `diagonal[i]` and `offdiagonal[i]` at `(i, i+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diagonal: Vec<f64>,
    pub offdiagonal: Vec<f64>,
}

/// Householder reduction `Q^T M Q = T`.
pub fn tridiagonalize(m: &SymmetricMatrix) -> Tridiagonal {
    let n = m.n();
    let mut a = m.clone();
    let mut diagonal = vec![0.0; n];
    let mut offdiagonal = vec![0.0; n.saturating_sub(1)];
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];

    for k in 0..n.saturating_sub(2) {
        diagonal[k] = a.get(k, k);
        let start = k + 1;
        let size = n - start;
        let x = &a.row(k)[start..];
        let tail_sq: f64 = x[1..].iter().map(|t| t * t).sum();
        if tail_sq == 0.0 {
            offdiagonal[k] = x[0];
            continue;
        }
        let norm = (x[0] * x[0] + tail_sq).sqrt();
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let v = &mut v[..size];
        v.copy_from_slice(x);
        v[0] -= alpha;
        let beta = 2.0 / (v[0] * v[0] + tail_sq);
        offdiagonal[k] = alpha;

        // p = beta * S v, w = p - (beta/2)(p.v) v, S <- S - v w^T - w v^T
        let w = &mut w[..size];
        for (i, wi) in w.iter_mut().enumerate() {
            let row = &a.row(start + i)[start..];
            *wi = beta * dot(row, v);
        }
        let kappa = 0.5 * beta * dot(w, v);
        for (wi, vi) in w.iter_mut().zip(v.iter()) {
            *wi -= kappa * vi;
        }
        let data = a.data_mut();
        for i in 0..size {
            let (vi, wi) = (v[i], w[i]);
            let row = &mut data[(start + i) * n + start..(start + i + 1) * n];
            for ((s, &vj), &wj) in row.iter_mut().zip(v.iter()).zip(w.iter()) {
                *s -= vi * wj + wi * vj;
            }
        }
    }
    if n >= 2 {
        diagonal[n - 2] = a.get(n - 2, n - 2);
        offdiagonal[n - 2] = a.get(n - 2, n - 1);
    }
    if n >= 1 {
        diagonal[n - 1] = a.get(n - 1, n - 1);
    }
    Tridiagonal {
        diagonal,
        offdiagonal,
    }
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL with
/// Wilkinson shifts. At most `30 n` iterations in total.
pub fn tridiagonal_eigenvalues(t: &Tridiagonal) -> Result<Vec<f64>> {
    let n = t.diagonal.len();
    let mut d = t.diagonal.clone();
    let mut e = t.offdiagonal.clone();
    e.push(0.0);
    let budget = 30 * n.max(1);
    let mut iterations = 0usize;

    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > budget {
                return Err(Error::Numeric(format!(
                    "QL iteration did not converge for eigenvalue index {l} after {budget} sweeps"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(d)
}

/// All eigenvalues of `m`, ascending.
pub fn symmetric_eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum> {
    if m.n() == 0 {
        return Err(Error::Domain("empty matrix".into()));
    }
    let t = tridiagonalize(m);
    Spectrum::from_values(tridiagonal_eigenvalues(&t)?)
}
