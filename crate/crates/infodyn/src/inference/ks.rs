//! Two-sided two-sample Kolmogorov–Smirnov test.

use crate::error::{Error, Result};

/// Survival function of the Kolmogorov distribution,
/// Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
pub fn kolmogorov_q(lambda: f64) -> f64 {
    if lambda <= 1e-3 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for j in 1..=100 {
        let term = (-2.0 * (j as f64) * (j as f64) * lambda * lambda).exp();
        sum += sign * term;
        sign = -sign;
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// D = sup |ECDF_a - ECDF_b| and its asymptotic p-value (Stephens'
/// finite-sample correction of the Kolmogorov distribution).
pub fn ks_2sample(a: &[f64], b: &[f64]) -> Result<(f64, f64)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InsufficientLength("KS test needs non-empty samples".into()));
    }
    let mut xs = a.to_vec();
    let mut ys = b.to_vec();
    xs.sort_unstable_by(|p, q| p.partial_cmp(q).unwrap());
    ys.sort_unstable_by(|p, q| p.partial_cmp(q).unwrap());
    let (na, nb) = (xs.len(), ys.len());
    let mut d: f64 = 0.0;
    let (mut i, mut j) = (0usize, 0usize);
    while i < na && j < nb {
        let v = xs[i].min(ys[j]);
        while i < na && xs[i] <= v {
            i += 1;
        }
        while j < nb && ys[j] <= v {
            j += 1;
        }
        let gap = (i as f64 / na as f64 - j as f64 / nb as f64).abs();
        if gap > d {
            d = gap;
        }
    }
    let ne = (na as f64 * nb as f64) / (na + nb) as f64;
    let sqrt_ne = ne.sqrt();
    let lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;
    Ok((d, kolmogorov_q(lambda)))
}
