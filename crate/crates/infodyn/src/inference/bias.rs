//! Sample-size bias diagnostic for the KSG estimator: estimate TE on equal
//! disjoint slices of the data for several neighbour counts K and report the
//! spread. A K whose slice estimates barely move with the slice count is
//! minimally biased.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimators::{transfer_entropy, EstimatorConfig};
use crate::series::TimeSeries;

/// One diagnostic row: TE over `slices` disjoint slices of length `n_slice`.
#[derive(Debug, Clone, Serialize)]
pub struct BiasRow {
    pub neighbours: usize,
    pub slices: usize,
    pub n_slice: usize,
    pub mean_te: f64,
    /// Sample std across slices; 0 with `degenerate` set when slices == 1.
    pub std_te: f64,
    pub degenerate: bool,
}

/// The full profile, row-major over (K, slice count).
#[derive(Debug, Clone, Serialize)]
pub struct BiasProfile {
    pub rows: Vec<BiasRow>,
}

impl BiasProfile {
    /// CSV rendering (`K,n_slice,mean_te,std_te`).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("K,n_slice,mean_te,std_te\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{}\n", r.neighbours, r.n_slice, r.mean_te, r.std_te));
        }
        out
    }
}

/// Estimate TE on 1..=`max_slices` equal disjoint slices for each K in
/// `k_list`, reporting mean and std across slices.
pub fn subsample_bias_profile(
    source: &TimeSeries,
    target: &TimeSeries,
    cfg: &EstimatorConfig,
    k_list: &[usize],
    max_slices: usize,
) -> Result<BiasProfile> {
    if k_list.is_empty() || max_slices < 1 {
        return Err(Error::InvalidParam("need at least one K and one slice".into()));
    }
    let q = source.len();
    let min_len = 16 * (cfg.k.max(cfg.l + cfg.delta) + 1);
    if q / max_slices < min_len {
        return Err(Error::InsufficientLength(format!(
            "{q} observations are too few for {max_slices} slices"
        )));
    }
    let mut rows = Vec::new();
    for &neighbours in k_list {
        for slices in 1..=max_slices {
            let n_slice = q / slices;
            let mut values = Vec::with_capacity(slices);
            for s in 0..slices {
                let src = source.slice(s * n_slice, n_slice)?;
                let dst = target.slice(s * n_slice, n_slice)?;
                let local_cfg = EstimatorConfig { neighbours, ..*cfg };
                values.push(transfer_entropy(&src, &dst, &local_cfg)?.value_nats);
            }
            let mean = values.iter().sum::<f64>() / slices as f64;
            let degenerate = slices == 1;
            let std = if degenerate {
                0.0
            } else {
                (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
                    / (slices - 1) as f64)
                    .sqrt()
            };
            rows.push(BiasRow { neighbours, slices, n_slice, mean_te: mean, std_te: std, degenerate });
        }
    }
    Ok(BiasProfile { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{sample_standard, RngHandle, StandardDist};

    /// Heavy-tailed coupled pair: Y driven by cubed source noise.
    fn heavy_tailed_pair(n: usize, seed: u64) -> (TimeSeries, TimeSeries) {
        let h = RngHandle::new(seed, 0);
        let e1 = sample_standard(&h.derive(&[1]), StandardDist::Normal, n);
        let e2 = sample_standard(&h.derive(&[2]), StandardDist::Normal, n);
        let xs: Vec<f64> = e1.iter().map(|v| v * v * v).collect();
        let mut ys = vec![0.0; n];
        for t in 1..n {
            ys[t] = 0.3 * ys[t - 1] + 0.8 * xs[t - 1] + e2[t];
        }
        (
            TimeSeries::new(xs, 0, 1, "x").unwrap(),
            TimeSeries::new(ys, 0, 1, "y").unwrap(),
        )
    }

    #[test]
    fn k1_is_noisier_than_k4_across_slices() {
        let (x, y) = heavy_tailed_pair(6000, 91);
        let profile =
            subsample_bias_profile(&x, &y, &EstimatorConfig::default(), &[1, 4], 5).unwrap();
        let std_at = |k: usize, slices: usize| {
            profile
                .rows
                .iter()
                .find(|r| r.neighbours == k && r.slices == slices)
                .unwrap()
                .std_te
        };
        // pooled spread over the multi-slice rows
        let spread_k1: f64 = (2..=5).map(|s| std_at(1, s)).sum();
        let spread_k4: f64 = (2..=5).map(|s| std_at(4, s)).sum();
        assert!(
            spread_k1 > spread_k4,
            "K=1 spread {spread_k1} should exceed K=4 spread {spread_k4}"
        );
    }

    #[test]
    fn single_slice_is_degenerate() {
        let (x, y) = heavy_tailed_pair(2000, 92);
        let profile =
            subsample_bias_profile(&x, &y, &EstimatorConfig::default(), &[4], 3).unwrap();
        let row = profile.rows.iter().find(|r| r.slices == 1).unwrap();
        assert!(row.degenerate);
        assert_eq!(row.std_te, 0.0);
    }

    #[test]
    fn independent_pair_stays_near_zero_for_all_k() {
        let x = TimeSeries::new(
            sample_standard(&RngHandle::new(93, 0), StandardDist::Normal, 4000),
            0,
            1,
            "x",
        )
        .unwrap();
        let y = TimeSeries::new(
            sample_standard(&RngHandle::new(93, 1), StandardDist::Normal, 4000),
            0,
            1,
            "y",
        )
        .unwrap();
        let profile =
            subsample_bias_profile(&x, &y, &EstimatorConfig::default(), &[2, 4, 8], 4).unwrap();
        for row in &profile.rows {
            assert!(row.mean_te.abs() < 0.02, "K={} slices={} mean {}", row.neighbours, row.slices, row.mean_te);
        }
    }

    #[test]
    fn too_short_series_errors() {
        let (x, y) = heavy_tailed_pair(100, 94);
        assert!(subsample_bias_profile(&x, &y, &EstimatorConfig::default(), &[4], 10).is_err());
    }

    #[test]
    fn csv_has_expected_header() {
        let (x, y) = heavy_tailed_pair(2000, 95);
        let profile =
            subsample_bias_profile(&x, &y, &EstimatorConfig::default(), &[4], 2).unwrap();
        let csv = profile.to_csv();
        assert!(csv.starts_with("K,n_slice,mean_te,std_te\n"));
        assert_eq!(csv.lines().count(), 1 + profile.rows.len());
    }
}
