//! Benjamini–Yekutieli false-discovery-rate control (valid under arbitrary
//! dependence between the tests).

use crate::error::{Error, Result};

/// Step-up BY procedure at level `q` with the harmonic correction
/// c(m) = sum_{i=1..m} 1/i. Returns the rejection mask in input order.
pub fn benjamini_yekutieli(p_values: &[f64], q: f64) -> Result<Vec<bool>> {
    if p_values.is_empty() {
        return Err(Error::InvalidParam("empty p-value list".into()));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidParam("q must lie in (0, 1)".into()));
    }
    if p_values.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(Error::InvalidParam("p-values must lie in [0, 1]".into()));
    }
    let m = p_values.len();
    let c_m: f64 = (1..=m).map(|i| 1.0 / i as f64).sum();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p_values[a].partial_cmp(&p_values[b]).unwrap());
    let mut cutoff_rank = 0; // number of rejected hypotheses
    for (rank0, &idx) in order.iter().enumerate() {
        let threshold = (rank0 + 1) as f64 * q / (m as f64 * c_m);
        if p_values[idx] <= threshold {
            cutoff_rank = rank0 + 1;
        }
    }
    let mut mask = vec![false; m];
    for &idx in order.iter().take(cutoff_rank) {
        mask[idx] = true;
    }
    Ok(mask)
}
