//! Time-series containers, delay embeddings, rolling windows, differencing.

use crate::error::{Error, Result};
use crate::kernels::Matrix;
use serde::{Deserialize, Serialize};

/// Uniformly indexed scalar observations with timestamp metadata.
///
/// Index `i` maps to `start_time_ms + i * period_ms`; gaps must be resolved
/// before construction. All types here are immutable after construction and
/// safe to share across parallel workers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    pub values: Vec<f64>,
    pub start_time_ms: i64,
    pub period_ms: i64,
    pub label: String,
}

impl TimeSeries {
    pub fn new(
        values: Vec<f64>,
        start_time_ms: i64,
        period_ms: i64,
        label: impl Into<String>,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InsufficientLength("time series needs >= 1 value".into()));
        }
        if period_ms <= 0 {
            return Err(Error::InvalidParam("period must be positive".into()));
        }
        Ok(TimeSeries { values, start_time_ms, period_ms, label: label.into() })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Timestamp of index `i`.
    pub fn timestamp_ms(&self, i: usize) -> i64 {
        self.start_time_ms + i as i64 * self.period_ms
    }

    /// Timestamp one step past the last observation.
    pub fn end_time_ms(&self) -> i64 {
        self.timestamp_ms(self.len())
    }

    /// Two series live on the same grid when period and phase agree.
    pub fn same_grid(&self, other: &TimeSeries) -> bool {
        self.period_ms == other.period_ms
            && (self.start_time_ms - other.start_time_ms) % self.period_ms == 0
    }

    /// Copy of the index range `[start, start+len)`.
    pub fn slice(&self, start: usize, len: usize) -> Result<TimeSeries> {
        if start + len > self.len() {
            return Err(Error::InsufficientLength(format!(
                "slice [{start}, {}) beyond length {}",
                start + len,
                self.len()
            )));
        }
        TimeSeries::new(
            self.values[start..start + len].to_vec(),
            self.timestamp_ms(start),
            self.period_ms,
            self.label.clone(),
        )
    }
}

/// Rolling-window geometry in steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    pub width: usize,
    pub step: usize,
}

impl WindowSpec {
    pub fn new(width: usize, step: usize) -> Result<Self> {
        if width < 2 {
            return Err(Error::InvalidParam("window width must be >= 2".into()));
        }
        if step < 1 || step > width {
            return Err(Error::InvalidParam("window step must satisfy 1 <= step <= width".into()));
        }
        Ok(WindowSpec { width, step })
    }
}

/// Joint sample matrix for the estimators: the target's future value, the
/// target's `k`-step past, optionally the source's `l`-step past at delay
/// `delta` and the conditionals' `m`-step pasts.
///
/// Row `t` (at raw index `start_index + t`) holds, most recent first,
///
/// - `target[t]`      = x[i]
/// - `target_past[t]` = x[i-1], ..., x[i-k]
/// - `source_past[t]` = y[i-delta], ..., y[i-delta-l+1]
/// - `cond_past[t]`   = z[i-1], ..., z[i-m] for each conditional
///
/// so no row can see the target's future.
#[derive(Debug, Clone)]
pub struct EmbeddedDataset {
    pub target: Vec<f64>,
    pub target_past: Matrix,
    pub source_past: Option<Matrix>,
    pub cond_past: Option<Matrix>,
    /// Usable sample count: Q - max(k, l+delta, m).
    pub n: usize,
    /// Raw index of row 0.
    pub start_index: usize,
}

/// Build the joint embedding. `k` applies to the target's own past, `l` and
/// `delta` to the source, `m` to every conditional series.
pub fn build_embedding(
    x: &TimeSeries,
    y: Option<&TimeSeries>,
    conds: &[&TimeSeries],
    k: usize,
    l: usize,
    m: usize,
    delta: usize,
) -> Result<EmbeddedDataset> {
    if k < 1 {
        return Err(Error::InvalidParam("target history k must be >= 1".into()));
    }
    if y.is_some() && l < 1 {
        return Err(Error::InvalidParam("source history l must be >= 1".into()));
    }
    if y.is_some() && delta < 1 {
        return Err(Error::InvalidParam("source delay must be >= 1".into()));
    }
    if !conds.is_empty() && m < 1 {
        return Err(Error::InvalidParam("conditional history m must be >= 1".into()));
    }
    let q = x.len();
    for other in y.iter().copied().chain(conds.iter().copied()) {
        if other.len() != q {
            return Err(Error::LengthMismatch(format!(
                "series '{}' has {} values, target '{}' has {q}",
                other.label,
                other.len(),
                x.label
            )));
        }
        if !x.same_grid(other) {
            return Err(Error::LengthMismatch(format!(
                "series '{}' is not on the target's grid",
                other.label
            )));
        }
    }
    let mut start = k;
    if y.is_some() {
        start = start.max(l + delta);
    }
    if !conds.is_empty() {
        start = start.max(m);
    }
    if q <= start {
        return Err(Error::InsufficientLength(format!(
            "need more than {start} observations, got {q}"
        )));
    }
    let n = q - start;

    let mut target = Vec::with_capacity(n);
    let mut target_past = Matrix::zeros(n, k);
    for t in 0..n {
        let i = start + t;
        target.push(x.values[i]);
        let row = target_past.row_mut(t);
        for j in 0..k {
            row[j] = x.values[i - 1 - j];
        }
    }
    let source_past = y.map(|ys| {
        let mut mat = Matrix::zeros(n, l);
        for t in 0..n {
            let i = start + t;
            let row = mat.row_mut(t);
            for j in 0..l {
                row[j] = ys.values[i - delta - j];
            }
        }
        mat
    });
    let cond_past = if conds.is_empty() {
        None
    } else {
        let mut mat = Matrix::zeros(n, m * conds.len());
        for t in 0..n {
            let i = start + t;
            let row = mat.row_mut(t);
            for (ci, z) in conds.iter().enumerate() {
                for j in 0..m {
                    row[ci * m + j] = z.values[i - 1 - j];
                }
            }
        }
        Some(mat)
    };
    Ok(EmbeddedDataset { target, target_past, source_past, cond_past, n, start_index: start })
}

/// First difference: out[i] = x[i+1] - x[i], length Q-1.
pub fn difference(x: &TimeSeries) -> Result<TimeSeries> {
    if x.len() < 2 {
        return Err(Error::InsufficientLength("difference needs >= 2 values".into()));
    }
    let values: Vec<f64> = x.values.windows(2).map(|w| w[1] - w[0]).collect();
    TimeSeries::new(
        values,
        x.start_time_ms + x.period_ms,
        x.period_ms,
        format!("diff({})", x.label),
    )
}

/// Split into windows of `spec.width` starting every `spec.step` steps; the
/// trailing partial window is dropped rather than padded, so estimator
/// sample counts stay comparable across windows.
pub fn rolling_windows(x: &TimeSeries, spec: &WindowSpec) -> Result<Vec<TimeSeries>> {
    if spec.width > x.len() {
        return Err(Error::InsufficientLength(format!(
            "window width {} exceeds series length {}",
            spec.width,
            x.len()
        )));
    }
    let count = (x.len() - spec.width) / spec.step + 1;
    (0..count).map(|j| x.slice(j * spec.step, spec.width)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ts(values: Vec<f64>) -> TimeSeries {
        TimeSeries::new(values, 0, 60_000, "x").unwrap()
    }

    #[test]
    fn embedding_matches_direct_indexing() {
        let x = ts(vec![1.0, 2.0, 3.0, 4.0, 5.0]);
        let e = build_embedding(&x, None, &[], 2, 1, 1, 1).unwrap();
        assert_eq!(e.target, vec![3.0, 4.0, 5.0]);
        assert_eq!(e.n, 3);
        assert_eq!(e.target_past.row(0), &[2.0, 1.0]);
        assert_eq!(e.target_past.row(1), &[3.0, 2.0]);
        assert_eq!(e.target_past.row(2), &[4.0, 3.0]);
    }

    #[test]
    fn embedding_sample_count_with_delay() {
        let x = ts((0..100).map(|i| i as f64).collect());
        let y = ts((0..100).map(|i| (i * i) as f64).collect());
        let e = build_embedding(&x, Some(&y), &[], 1, 1, 1, 3).unwrap();
        // l + delta = 4 dominates k = 1
        assert_eq!(e.n, 96);
        // most recent source entry sits at delay 3
        assert_eq!(e.source_past.as_ref().unwrap().row(0), &[y.values[e.start_index - 3]]);
    }

    #[test]
    fn embedding_of_constant_series_is_constant() {
        let x = ts(vec![7.5; 20]);
        let e = build_embedding(&x, None, &[], 3, 1, 1, 1).unwrap();
        assert!(e.target.iter().all(|&v| v == 7.5));
        assert!(e.target_past.as_slice().iter().all(|&v| v == 7.5));
    }

    #[test]
    fn embedding_errors() {
        let x = ts(vec![1.0, 2.0, 3.0]);
        let y = ts(vec![1.0, 2.0]);
        assert!(matches!(
            build_embedding(&x, Some(&y), &[], 1, 1, 1, 1),
            Err(Error::LengthMismatch(_))
        ));
        assert!(matches!(
            build_embedding(&x, None, &[], 3, 1, 1, 1),
            Err(Error::InsufficientLength(_))
        ));
    }

    #[test]
    fn conditional_rows_use_t_minus_one() {
        let x = ts((0..10).map(|i| i as f64).collect());
        let z = ts((0..10).map(|i| 10.0 * i as f64).collect());
        let e = build_embedding(&x, None, &[&z], 1, 1, 2, 1).unwrap();
        // start = max(k=1, m=2) = 2; row 0 is raw index 2
        assert_eq!(e.start_index, 2);
        assert_eq!(e.cond_past.as_ref().unwrap().row(0), &[10.0, 0.0]);
    }

    #[test]
    fn difference_examples() {
        let d = difference(&ts(vec![1.0, 3.0, 6.0])).unwrap();
        assert_eq!(d.values, vec![2.0, 3.0]);
        assert_eq!(d.start_time_ms, 60_000);
        let c = difference(&ts(vec![4.0; 5])).unwrap();
        assert!(c.values.iter().all(|&v| v == 0.0));
        assert!(difference(&ts(vec![1.0])).is_err());
    }

    #[test]
    fn rolling_window_arithmetic() {
        let x = ts((0..10).map(|i| i as f64).collect());
        let w = rolling_windows(&x, &WindowSpec::new(4, 2).unwrap()).unwrap();
        assert_eq!(w.len(), 4);
        let starts: Vec<i64> = w.iter().map(|s| s.start_time_ms / 60_000).collect();
        assert_eq!(starts, vec![0, 2, 4, 6]);
        // whole-series window
        let whole = rolling_windows(&x, &WindowSpec::new(10, 3).unwrap()).unwrap();
        assert_eq!(whole.len(), 1);
        assert!(rolling_windows(&x, &WindowSpec::new(11, 1).unwrap()).is_err());
    }

    #[test]
    fn weekly_minute_windows_moved_by_three_days() {
        let minutes_per_week = 7 * 1440;
        let x = TimeSeries::new(
            vec![0.0; 4 * minutes_per_week],
            0,
            60_000,
            "minute",
        )
        .unwrap();
        let spec = WindowSpec::new(minutes_per_week, 3 * 1440).unwrap();
        let w = rolling_windows(&x, &spec).unwrap();
        assert_eq!(w.len(), (4 * minutes_per_week - minutes_per_week) / (3 * 1440) + 1);
        assert_eq!(w[1].start_time_ms, 3 * 1440 * 60_000);
        assert_eq!(w[0].len(), minutes_per_week);
    }

    proptest! {
        #[test]
        fn window_views_do_not_drift(len in 4usize..60, width in 2usize..20, step in 1usize..10) {
            prop_assume!(width <= len && step <= width);
            let vals: Vec<f64> = (0..len).map(|i| (i as f64).sin()).collect();
            let x = ts(vals.clone());
            let spec = WindowSpec::new(width, step).unwrap();
            for (j, w) in rolling_windows(&x, &spec).unwrap().iter().enumerate() {
                for (i, v) in w.values.iter().enumerate() {
                    prop_assert_eq!(*v, vals[j * step + i]);
                }
            }
        }

        #[test]
        fn embedding_round_trip(len in 6usize..50, k in 1usize..4) {
            prop_assume!(len > k + 1);
            let vals: Vec<f64> = (0..len).map(|i| (i as f64 * 0.7).cos()).collect();
            let x = ts(vals.clone());
            let e = build_embedding(&x, None, &[], k, 1, 1, 1).unwrap();
            for t in 0..e.n {
                let i = e.start_index + t;
                // reversed past row + target reproduces the contiguous slice
                let mut window: Vec<f64> = e.target_past.row(t).iter().rev().copied().collect();
                window.push(e.target[t]);
                prop_assert_eq!(&window[..], &vals[i - k..=i]);
            }
        }

        #[test]
        fn difference_then_cumsum_reconstructs(len in 2usize..80) {
            let vals: Vec<f64> = (0..len).map(|i| ((i * i) as f64 * 0.01).sin() * 5.0).collect();
            let x = ts(vals.clone());
            let d = difference(&x).unwrap();
            let mut acc = vals[0];
            for (i, dv) in d.values.iter().enumerate() {
                acc += dv;
                prop_assert!((acc - vals[i + 1]).abs() < 1e-12);
            }
        }
    }
}
