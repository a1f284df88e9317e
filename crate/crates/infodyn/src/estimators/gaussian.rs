//! Linear-Gaussian (conditional) mutual information via log-determinants of
//! covariance blocks. Exact for jointly Gaussian data in the large-n limit;
//! blind to purely nonlinear coupling, which is the point of carrying it as
//! a baseline next to KSG.

use crate::error::{Error, Result};
use crate::kernels::matrix::cholesky_log_det;
use crate::kernels::Matrix;

use super::{EstimateResult, EstimatorConfig};

fn log_det_of(parts: &[&Matrix]) -> Result<f64> {
    if parts.is_empty() {
        return Ok(0.0);
    }
    let joined = Matrix::hstack(parts)?;
    let (_, cov) = joined.covariance();
    cholesky_log_det(&cov, joined.cols())
}

/// Gaussian (conditional) mutual information over raw sample matrices.
/// Returns the per-sample local log-density ratios; their mean equals the
/// log-det value exactly because the fitted covariances use 1/n.
pub fn gaussian_cmi_samples(
    x: &Matrix,
    y: &Matrix,
    z: Option<&Matrix>,
) -> Result<(f64, Vec<f64>)> {
    let n = x.rows();
    if y.rows() != n || z.map_or(false, |z| z.rows() != n) {
        return Err(Error::LengthMismatch("sample counts differ".into()));
    }
    let dims = x.cols() + y.cols() + z.map_or(0, |z| z.cols());
    if n < dims + 2 {
        return Err(Error::InsufficientLength(format!(
            "need at least dims + 2 = {} samples, got {n}",
            dims + 2
        )));
    }
    let (value, locals) = match z {
        Some(z) => {
            let ld_xz = log_det_of(&[x, z])?;
            let ld_yz = log_det_of(&[y, z])?;
            let ld_z = log_det_of(&[z])?;
            let ld_xyz = log_det_of(&[x, y, z])?;
            let value = 0.5 * (ld_xz + ld_yz - ld_z - ld_xyz);
            // local = value + (q_xz + q_yz - q_z - q_xyz) / 2
            let locals = gaussian_locals(&[x, y, z], &[
                (vec![0, 2], -0.5),
                (vec![1, 2], -0.5),
                (vec![2], 0.5),
                (vec![0, 1, 2], 0.5),
            ])?;
            (value, locals.into_iter().map(|l| l + value).collect())
        }
        None => {
            let ld_x = log_det_of(&[x])?;
            let ld_y = log_det_of(&[y])?;
            let ld_xy = log_det_of(&[x, y])?;
            let value = 0.5 * (ld_x + ld_y - ld_xy);
            // local = value + (q_x + q_y - q_xy) / 2
            let locals = gaussian_locals(&[x, y], &[
                (vec![0], -0.5),
                (vec![1], -0.5),
                (vec![0, 1], 0.5),
            ])?;
            (value, locals.into_iter().map(|l| l + value).collect())
        }
    };
    Ok((value, locals))
}

/// Quadratic-form part of the local log-density ratio. Each term is a
/// weighted Mahalanobis form over a block selection; the weighted sum has
/// zero mean, so locals = value + term averages back to the global.
fn gaussian_locals(blocks: &[&Matrix], terms: &[(Vec<usize>, f64)]) -> Result<Vec<f64>> {
    let n = blocks[0].rows();
    let mut locals = vec![0.0; n];
    for (sel, weight) in terms {
        let parts: Vec<&Matrix> = sel.iter().map(|&i| blocks[i]).collect();
        let joined = Matrix::hstack(&parts)?;
        let d = joined.cols();
        let (means, cov) = joined.covariance();
        let inv = invert_spd(&cov, d)?;
        for i in 0..n {
            let row = joined.row(i);
            let mut q = 0.0;
            for a in 0..d {
                let da = row[a] - means[a];
                for b in 0..d {
                    q += da * inv[a * d + b] * (row[b] - means[b]);
                }
            }
            // E[q] = d under the fitted covariance; center so terms sum to 0
            locals[i] += weight * (d as f64 - q);
        }
    }
    Ok(locals)
}

fn invert_spd(m: &[f64], d: usize) -> Result<Vec<f64>> {
    // Cholesky factor then forward/back substitution per unit column.
    let mut l = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..=i {
            let mut sum = m[i * d + j];
            for k in 0..j {
                sum -= l[i * d + k] * l[j * d + k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::Singular("covariance not positive definite".into()));
                }
                l[i * d + i] = sum.sqrt();
            } else {
                l[i * d + j] = sum / l[j * d + j];
            }
        }
    }
    let mut inv = vec![0.0; d * d];
    for col in 0..d {
        let mut y = vec![0.0; d];
        for i in 0..d {
            let mut sum = if i == col { 1.0 } else { 0.0 };
            for k in 0..i {
                sum -= l[i * d + k] * y[k];
            }
            y[i] = sum / l[i * d + i];
        }
        for i in (0..d).rev() {
            let mut sum = y[i];
            for k in i + 1..d {
                sum -= l[k * d + i] * inv[k * d + col];
            }
            inv[i * d + col] = sum / l[i * d + i];
        }
    }
    Ok(inv)
}

/// Gaussian (conditional) mutual information as an [`EstimateResult`].
pub fn gaussian_cmi(
    x: &Matrix,
    y: &Matrix,
    z: Option<&Matrix>,
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    let (value, locals) = gaussian_cmi_samples(x, y, z)?;
    let measure = if z.is_some() { "gaussian_cmi" } else { "gaussian_mi" };
    let mut result = EstimateResult::new(measure, value, x.rows(), *cfg);
    if cfg.keep_locals {
        result.locals = Some(locals);
    }
    Ok(result)
}
