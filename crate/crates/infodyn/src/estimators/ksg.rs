//! KSG conditional mutual information and Kozachenko–Leonenko entropy.
//!
//! Conditional form (z present), counts strictly within the K-th-neighbour
//! radius of the joint space:
//!
//!   I(X;Y|Z) = psi(K) - < psi(n_xz+1) + psi(n_yz+1) - psi(n_z+1) >
//!
//! Plain mutual information (z absent) is KSG algorithm 1:
//!
//!   I(X;Y) = psi(K) + psi(n) - < psi(n_x+1) + psi(n_y+1) >
//!
//! Globals are computed as the mean of the per-sample local terms, so the
//! local/global identity is exact by construction.

use crate::error::{Error, Result};
use crate::kernels::{digamma, Matrix, PointCloud, RngHandle, SpatialIndex};

use super::{EstimateResult, EstimatorConfig};

/// Standardize and optionally jitter the estimator inputs.
fn prepare(parts: &[Option<&Matrix>], jitter_seed: Option<u64>) -> Result<Vec<Option<Matrix>>> {
    let mut out = Vec::with_capacity(parts.len());
    let mut col_offset = 0u64;
    for part in parts {
        match part {
            None => out.push(None),
            Some(m) => {
                let mut m = (*m).clone();
                m.standardize()?;
                if let Some(seed) = jitter_seed {
                    use rand::Rng;
                    let mut rng = RngHandle::new(seed, col_offset).rng();
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            let v = m.get(i, j) + rng.gen_range(-1e-8..1e-8);
                            m.set(i, j, v);
                        }
                    }
                }
                col_offset += m.cols() as u64;
                out.push(Some(m));
            }
        }
    }
    Ok(out)
}

/// KSG (conditional) mutual information over raw sample matrices.
/// Returns the locals vector alongside the global value.
pub fn ksg_cmi_samples(
    x: &Matrix,
    y: &Matrix,
    z: Option<&Matrix>,
    neighbours: usize,
    jitter_seed: Option<u64>,
) -> Result<(f64, Vec<f64>)> {
    let n = x.rows();
    if y.rows() != n || z.map_or(false, |z| z.rows() != n) {
        return Err(Error::LengthMismatch("sample counts differ".into()));
    }
    if n <= neighbours {
        return Err(Error::InsufficientLength(format!(
            "need more than K = {neighbours} samples, got {n}"
        )));
    }
    let prepared = prepare(&[Some(x), Some(y), z], jitter_seed)?;
    let xs = prepared[0].as_ref().unwrap();
    let ys = prepared[1].as_ref().unwrap();
    let zs = prepared[2].as_ref();

    match zs {
        Some(zs) => {
            let joint = SpatialIndex::build(PointCloud::new(Matrix::hstack(&[xs, ys, zs])?)?);
            let xz = SpatialIndex::build(PointCloud::new(Matrix::hstack(&[xs, zs])?)?);
            let yz = SpatialIndex::build(PointCloud::new(Matrix::hstack(&[ys, zs])?)?);
            let zz = SpatialIndex::build(PointCloud::new(zs.clone())?);
            cmi_from_indexes(&joint, &xz, &yz, Some(&zz), neighbours, n)
        }
        None => {
            let joint = SpatialIndex::build(PointCloud::new(Matrix::hstack(&[xs, ys])?)?);
            let xi = SpatialIndex::build(PointCloud::new(xs.clone())?);
            let yi = SpatialIndex::build(PointCloud::new(ys.clone())?);
            cmi_from_indexes(&joint, &xi, &yi, None, neighbours, n)
        }
    }
}

/// Shared count/digamma pass. With a z index this is the conditional form;
/// without it the marginal indexes are plain x and y and the psi(n) term of
/// algorithm 1 applies.
pub(crate) fn cmi_from_indexes(
    joint: &SpatialIndex,
    xz: &SpatialIndex,
    yz: &SpatialIndex,
    z: Option<&SpatialIndex>,
    neighbours: usize,
    n: usize,
) -> Result<(f64, Vec<f64>)> {
    let psi_k = digamma(neighbours as f64)?;
    let psi_n = digamma(n as f64)?;
    let mut locals = Vec::with_capacity(n);
    for i in 0..n {
        let eps = joint.kth_distance(i, neighbours)?;
        if eps <= 0.0 {
            return Err(Error::ZeroVariance(
                "duplicate joint samples give a zero K-th neighbour radius; \
                 enable jitter for discretised data"
                    .into(),
            ));
        }
        let n_xz = xz.count_within(i, eps, true);
        let n_yz = yz.count_within(i, eps, true);
        let local = match z {
            Some(zi) => {
                let n_z = zi.count_within(i, eps, true);
                psi_k - digamma((n_xz + 1) as f64)? - digamma((n_yz + 1) as f64)?
                    + digamma((n_z + 1) as f64)?
            }
            None => {
                psi_k + psi_n - digamma((n_xz + 1) as f64)? - digamma((n_yz + 1) as f64)?
            }
        };
        locals.push(local);
    }
    let value = locals.iter().sum::<f64>() / n as f64;
    Ok((value, locals))
}

/// KSG (conditional) mutual information as an [`EstimateResult`].
///
/// `z = None` gives plain MI. Estimates may be slightly negative; they are
/// reported as-is, significance testing decides interpretation.
pub fn ksg_cmi(
    x: &Matrix,
    y: &Matrix,
    z: Option<&Matrix>,
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    let (value, locals) = ksg_cmi_samples(x, y, z, cfg.neighbours, cfg.jitter_seed)?;
    let n = x.rows();
    let measure = if z.is_some() { "ksg_cmi" } else { "ksg_mi" };
    let mut result = EstimateResult::new(measure, value, n, *cfg);
    if cfg.keep_locals {
        result.locals = Some(locals);
    }
    Ok(result)
}

/// Kozachenko–Leonenko differential entropy (max-norm) with the same K as
/// the MI estimator, returning per-sample local terms.
pub fn kl_entropy(samples: &Matrix, neighbours: usize) -> Result<(f64, Vec<f64>)> {
    let n = samples.rows();
    if n <= neighbours {
        return Err(Error::InsufficientLength(format!(
            "need more than K = {neighbours} samples, got {n}"
        )));
    }
    let d = samples.cols() as f64;
    let index = SpatialIndex::build(PointCloud::new(samples.clone())?);
    let base = digamma(n as f64)? - digamma(neighbours as f64)? + d * 2f64.ln();
    let mut locals = Vec::with_capacity(n);
    for i in 0..n {
        let eps = index.kth_distance(i, neighbours)?;
        if eps <= 0.0 {
            return Err(Error::ZeroVariance(
                "duplicate samples give a zero K-th neighbour radius".into(),
            ));
        }
        locals.push(base + d * eps.ln());
    }
    let h = locals.iter().sum::<f64>() / n as f64;
    Ok((h, locals))
}
