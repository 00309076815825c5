//! Dense real symmetric matrices.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Dense `n x n` real symmetric matrix stored row-major.
///
/// Symmetry is exact: every constructor mirrors the upper triangle into the
/// lower one, so `get(j, k) == get(k, j)` bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![1.0; n])
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * m.n + i] = d;
        }
        m
    }

    /// Builds a matrix from `f(j, k)` evaluated on the upper triangle (`j <= k`)
    /// in row-major order.
    pub fn from_upper_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for j in 0..n {
            for k in j..n {
                let v = f(j, k);
                m.data[j * n + k] = v;
                m.data[k * n + j] = v;
            }
        }
        m
    }

    /// Builds a matrix from rows, rejecting anything that is not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("matrix rows must all have length n".into()));
        }
        for j in 0..n {
            for k in (j + 1)..n {
                if rows[j][k].to_bits() != rows[k][j].to_bits() {
                    return Err(Error::Domain(format!(
                        "entries ({j},{k}) and ({k},{j}) differ: {} vs {}",
                        rows[j][k], rows[k][j]
                    )));
                }
            }
        }
        Ok(Self {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.data[j * self.n + k]
    }

    /// Sets both `(j, k)` and `(k, j)`.
    pub fn set(&mut self, j: usize, k: usize, value: f64) {
        self.data[j * self.n + k] = value;
        self.data[k * self.n + j] = value;
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.data[j * self.n..(j + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Applies `f` to every entry of the upper triangle, `f(j, k, value)`, and mirrors.
    pub fn map_upper(&self, mut f: impl FnMut(usize, usize, f64) -> f64) -> Self {
        Self::from_upper_fn(self.n, |j, k| f(j, k, self.get(j, k)))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        self.map_upper(|_, _, v| v * factor)
    }

    /// `self + c * I`.
    pub fn shifted(&self, c: f64) -> Self {
        self.map_upper(|j, k, v| if j == k { v + c } else { v })
    }

    pub fn sub(&self, other: &SymmetricMatrix) -> Result<Self> {
        self.check_same_size(other)?;
        Ok(self.map_upper(|j, k, v| v - other.get(j, k)))
    }

    /// `P^T M P` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_upper_fn(self.n, |j, k| self.get(perm[j], perm[k]))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|j| ((j + 1)..self.n).all(|k| self.get(j, k).to_bits() == self.get(k, j).to_bits()))
    }

    pub(crate) fn check_same_size(&self, other: &SymmetricMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "matrix size mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Full dense CSV, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.n * self.n * 12);
        for j in 0..self.n {
            for (k, v) in self.row(j).iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_rejects_asymmetry() {
        let rows = vec![vec![1.0, 2.0], vec![2.000001, 1.0]];
        assert!(matches!(SymmetricMatrix::from_rows(&rows), Err(Error::Domain(_))));
    }

    #[test]
    fn set_mirrors() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(0, 2, 5.0);
        assert_eq!(m.get(2, 0), 5.0);
        assert!(m.is_symmetric());
    }

    #[test]
    fn csv_is_full_dense() {
        let m = SymmetricMatrix::from_rows(&[vec![1.0, -0.5], vec![-0.5, 2.0]]).unwrap();
        assert_eq!(m.to_csv(), "1,-0.5\n-0.5,2\n");
    }

    #[test]
    fn permutation_preserves_trace() {
        let m = SymmetricMatrix::from_upper_fn(4, |j, k| (j * 4 + k) as f64);
        let p = m.permuted(&[2, 0, 3, 1]);
        assert_eq!(p.trace(), m.trace());
        assert_eq!(p.frobenius_sq(), m.frobenius_sq());
    }
}
