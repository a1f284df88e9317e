//! Row-major sample matrix used for embeddings and point clouds.

use crate::error::{Error, Result};

/// Dense row-major matrix of `rows` samples in `cols` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    data: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl Matrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { data: vec![0.0; rows * cols], rows, cols }
    }

    /// Build from a flat row-major buffer.
    pub fn from_flat(data: Vec<f64>, rows: usize, cols: usize) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch(format!(
                "flat buffer of {} does not fit {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Matrix { data, rows, cols })
    }

    /// Single-column matrix from a vector of samples.
    pub fn column(values: &[f64]) -> Self {
        Matrix { data: values.to_vec(), rows: values.len(), cols: 1 }
    }

    /// Horizontal concatenation; all parts must share the row count.
    pub fn hstack(parts: &[&Matrix]) -> Result<Self> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if parts.iter().any(|m| m.rows != rows) {
            return Err(Error::LengthMismatch("hstack row counts differ".into()));
        }
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for m in parts {
                data.extend_from_slice(m.row(r));
            }
        }
        Ok(Matrix { data, rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row `i` as a slice of length `cols`.
    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    /// Underlying row-major buffer.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Standardize every column to zero mean and unit variance in place.
    /// Errors on a zero-variance column unless the caller opted into jitter
    /// beforehand.
    pub fn standardize(&mut self) -> Result<()> {
        for j in 0..self.cols {
            let mut mean = 0.0;
            for i in 0..self.rows {
                mean += self.get(i, j);
            }
            mean /= self.rows as f64;
            let mut var = 0.0;
            for i in 0..self.rows {
                let d = self.get(i, j) - mean;
                var += d * d;
            }
            var /= self.rows as f64;
            if var <= 0.0 {
                return Err(Error::ZeroVariance(format!("column {j} is constant")));
            }
            let inv = 1.0 / var.sqrt();
            for i in 0..self.rows {
                let v = (self.get(i, j) - mean) * inv;
                self.set(i, j, v);
            }
        }
        Ok(())
    }

    /// Column means and the MLE (1/n) covariance matrix, returned row-major
    /// `cols x cols`. The 1/n normalisation keeps the Gaussian local/global
    /// identity exact.
    pub fn covariance(&self) -> (Vec<f64>, Vec<f64>) {
        let (n, d) = (self.rows, self.cols);
        let mut means = vec![0.0; d];
        for i in 0..n {
            let row = self.row(i);
            for j in 0..d {
                means[j] += row[j];
            }
        }
        for m in means.iter_mut() {
            *m /= n as f64;
        }
        let mut cov = vec![0.0; d * d];
        for i in 0..n {
            let row = self.row(i);
            for a in 0..d {
                let da = row[a] - means[a];
                for b in a..d {
                    cov[a * d + b] += da * (row[b] - means[b]);
                }
            }
        }
        for a in 0..d {
            for b in a..d {
                let v = cov[a * d + b] / n as f64;
                cov[a * d + b] = v;
                cov[b * d + a] = v;
            }
        }
        (means, cov)
    }
}

/// Log-determinant of a symmetric positive-definite matrix via Cholesky.
pub fn cholesky_log_det(m: &[f64], d: usize) -> Result<f64> {
    if d == 0 {
        return Ok(0.0);
    }
    let mut l = vec![0.0; d * d];
    let mut log_det = 0.0;
    for i in 0..d {
        for j in 0..=i {
            let mut sum = m[i * d + j];
            for k in 0..j {
                sum -= l[i * d + k] * l[j * d + k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::Singular(
                        "covariance not positive definite".into(),
                    ));
                }
                let root = sum.sqrt();
                l[i * d + i] = root;
                log_det += 2.0 * root.ln();
            } else {
                l[i * d + j] = sum / l[j * d + j];
            }
        }
    }
    Ok(log_det)
}

/// Solve a small dense linear system `A x = b` by Gaussian elimination with
/// partial pivoting. Used for the GARCH moment system and ADF regressions.
pub fn solve_dense(a: &[f64], b: &[f64], d: usize) -> Result<Vec<f64>> {
    let mut m = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..d {
        let mut piv = col;
        let mut best = m[col * d + col].abs();
        for r in col + 1..d {
            let v = m[r * d + col].abs();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best < 1e-14 {
            return Err(Error::Singular("pivot underflow in solve".into()));
        }
        if piv != col {
            for c in 0..d {
                m.swap(col * d + c, piv * d + c);
            }
            rhs.swap(col, piv);
        }
        let diag = m[col * d + col];
        for r in col + 1..d {
            let f = m[r * d + col] / diag;
            if f == 0.0 {
                continue;
            }
            for c in col..d {
                m[r * d + c] -= f * m[col * d + c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    let mut x = vec![0.0; d];
    for row in (0..d).rev() {
        let mut sum = rhs[row];
        for c in row + 1..d {
            sum -= m[row * d + c] * x[c];
        }
        x[row] = sum / m[row * d + row];
    }
    Ok(x)
}
