//! Model-based transfer entropy for the GARCH-spread model by Monte-Carlo
//! marginalisation of the exact conditional densities. These values are the
//! independent yardstick the KSG estimates are checked against.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernels::RngHandle;

use super::garch::{garch_moments, simulate_garch_spread, GarchParams};

/// Monte-Carlo TE estimate with its outer-sample standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OracleTe {
    pub value_nats: f64,
    pub std_err: f64,
    pub n_outer: usize,
    pub n_inner: usize,
    /// Outer samples dropped because a marginalised density underflowed.
    pub rejected: usize,
}

#[inline]
fn normal_pdf(x: f64, variance: f64) -> f64 {
    (-0.5 * x * x / variance).exp() / (2.0 * std::f64::consts::PI * variance).sqrt()
}

/// Conditional spread density phi(y | s_{t-1}, s_{t-2}, r_{t-2}, sigma_{t-2}):
/// s_t^2 = c* + c eps^2 with eps standard normal, so y = sqrt(c* + c eps^2)
/// lives on (sqrt(c*), inf) with
///
///   phi(y) = 2 y / (Gamma(1/2) sqrt(2 c (y^2 - c*))) exp(-(y^2 - c*)/(2c)).
pub fn spread_conditional_density(
    y: f64,
    s_prev: f64,
    s_prev2: f64,
    r_prev2: f64,
    sigma_prev2: f64,
    p: &GarchParams,
) -> f64 {
    if p.c <= 0.0 {
        return 0.0;
    }
    let c_star = p.a * s_prev * s_prev
        + p.b
            * (p.w
                + p.alpha * r_prev2 * r_prev2
                + p.beta * sigma_prev2 * sigma_prev2
                + p.gamma * s_prev2 * s_prev2);
    debug_assert!(c_star >= 0.0, "c* cannot be negative for nonnegative parameters");
    let u2 = y * y - c_star;
    if u2 <= 0.0 || y <= 0.0 {
        return 0.0;
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    2.0 * y / (sqrt_pi * (2.0 * p.c * u2).sqrt()) * (-u2 / (2.0 * p.c)).exp()
}

struct StationaryDraws {
    returns: Vec<f64>,
    spread: Vec<f64>,
    sigma: Vec<f64>,
}

fn stationary_run(p: &GarchParams, len: usize, handle: &RngHandle) -> Result<StationaryDraws> {
    let path = simulate_garch_spread(p, len, &handle.derive(&[0x6f72_6163]), false)?;
    Ok(StationaryDraws {
        returns: path.returns.values,
        spread: path.spread.values,
        sigma: path.sigma.values,
    })
}

fn summarize(log_ratios: Vec<Option<f64>>, n_inner: usize) -> OracleTe {
    let mut acc = 0.0;
    let mut acc2 = 0.0;
    let mut kept = 0usize;
    let mut rejected = 0usize;
    for lr in &log_ratios {
        match lr {
            Some(v) => {
                acc += v;
                acc2 += v * v;
                kept += 1;
            }
            None => rejected += 1,
        }
    }
    let n = kept.max(1) as f64;
    let mean = acc / n;
    let var = (acc2 / n - mean * mean).max(0.0);
    OracleTe {
        value_nats: mean,
        std_err: (var / n).sqrt(),
        n_outer: log_ratios.len(),
        n_inner,
        rejected,
    }
}

/// Model-based T_{s -> r} = E[ log f(r_t | r_{t-1}, s_{t-1}) / f(r_t | r_{t-1}) ]
/// for the b = 0 branch (spread evolves autonomously). The hidden
/// volatility (and, for the denominator, the spread) is marginalised by
/// sampling from the empirical stationary marginals of a long run.
pub fn theoretical_te_s_to_r(
    p: &GarchParams,
    n_outer: usize,
    n_inner: usize,
    handle: &RngHandle,
) -> Result<OracleTe> {
    if p.b != 0.0 {
        return Err(Error::InvalidParam(
            "the s -> r density is derived for the b = 0 branch".into(),
        ));
    }
    garch_moments(p)?; // validates + stationarity via simulate below
    if n_outer < 2 || n_inner < 2 {
        return Err(Error::InvalidParam("need n_outer, n_inner >= 2".into()));
    }
    let run = stationary_run(p, n_outer + 2, handle)?;
    let pool_sigma = &run.sigma;
    let pool_spread = &run.spread;
    let pool_len = pool_sigma.len();
    let log_ratios: Vec<Option<f64>> = (1..=n_outer)
        .into_par_iter()
        .map(|t| {
            use rand::Rng;
            let mut rng = handle.derive(&[1, t as u64]).rng();
            let (r_t, r_prev, s_prev) = (run.returns[t], run.returns[t - 1], run.spread[t - 1]);
            let base = p.w + p.alpha * r_prev * r_prev;
            let mut num = 0.0;
            let mut den = 0.0;
            for _ in 0..n_inner {
                let sig_i = pool_sigma[rng.gen_range(0..pool_len)];
                num += normal_pdf(r_t, base + p.beta * sig_i * sig_i + p.gamma * s_prev * s_prev);
                let sig_j = pool_sigma[rng.gen_range(0..pool_len)];
                let s_j = pool_spread[rng.gen_range(0..pool_len)];
                den += normal_pdf(r_t, base + p.beta * sig_j * sig_j + p.gamma * s_j * s_j);
            }
            let ratio = num / den;
            if ratio.is_finite() && ratio > 0.0 {
                Some(ratio.ln())
            } else {
                None
            }
        })
        .collect();
    Ok(summarize(log_ratios, n_inner))
}

/// Model-based T_{r -> s} =
/// E[ log f(s_t | s_{t-1}, s_{t-2}, r_{t-1}, r_{t-2}) / f(s_t | s_{t-1}, s_{t-2}) ]
/// for the gamma = 0 branch, using the conditional spread density with the
/// hidden sigma_{t-2} (and, for the denominator, r_{t-2}) marginalised from
/// the empirical stationary marginals.
pub fn theoretical_te_r_to_s(
    p: &GarchParams,
    n_outer: usize,
    n_inner: usize,
    handle: &RngHandle,
) -> Result<OracleTe> {
    if p.gamma != 0.0 {
        return Err(Error::InvalidParam(
            "the r -> s marginalisation is derived for the gamma = 0 branch".into(),
        ));
    }
    garch_moments(p)?;
    if n_outer < 2 || n_inner < 2 {
        return Err(Error::InvalidParam("need n_outer, n_inner >= 2".into()));
    }
    let run = stationary_run(p, n_outer + 3, handle)?;
    let pool_sigma = &run.sigma;
    let pool_returns = &run.returns;
    let pool_len = pool_sigma.len();
    let log_ratios: Vec<Option<f64>> = (2..n_outer + 2)
        .into_par_iter()
        .map(|t| {
            use rand::Rng;
            let mut rng = handle.derive(&[2, t as u64]).rng();
            let s_t = run.spread[t];
            let s_prev = run.spread[t - 1];
            let s_prev2 = run.spread[t - 2];
            let r_prev2 = run.returns[t - 2];
            let mut num = 0.0;
            let mut den = 0.0;
            for _ in 0..n_inner {
                let sig_i = pool_sigma[rng.gen_range(0..pool_len)];
                num += spread_conditional_density(s_t, s_prev, s_prev2, r_prev2, sig_i, p);
                let sig_j = pool_sigma[rng.gen_range(0..pool_len)];
                let r_j = pool_returns[rng.gen_range(0..pool_len)];
                den += spread_conditional_density(s_t, s_prev, s_prev2, r_j, sig_j, p);
            }
            if num <= 0.0 {
                return None; // support violation of the marginalised density
            }
            let ratio = num / den;
            if ratio.is_finite() && ratio > 0.0 {
                Some(ratio.ln())
            } else {
                None
            }
        })
        .collect();
    Ok(summarize(log_ratios, n_inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inference::ks_2sample;
    use crate::kernels::{integrate_1d, UpperBound};
    

    #[test]
    fn density_vanishes_below_support() {
        let p = GarchParams::returns_drive_spread();
        let c_star = p.a * 0.25 + p.b * (p.w + p.alpha * 0.04 + p.beta * 0.09);
        let edge = c_star.sqrt();
        assert_eq!(spread_conditional_density(edge * 0.99, 0.5, 0.4, 0.2, 0.3, &p), 0.0);
        assert!(spread_conditional_density(edge * 1.01, 0.5, 0.4, 0.2, 0.3, &p) > 0.0);
    }

    #[test]
    fn density_normalizes_to_one() {
        // substitute u = sqrt(y^2 - c*): the integral of phi over its
        // support becomes a smooth half-Gaussian in u
        let p = GarchParams::returns_drive_spread();
        let (s_prev, s_prev2, r_prev2, sigma_prev2) = (0.6, 0.5, 0.3, 0.35);
        let c_star = p.a * s_prev * s_prev
            + p.b
                * (p.w
                    + p.alpha * r_prev2 * r_prev2
                    + p.beta * sigma_prev2 * sigma_prev2
                    + p.gamma * s_prev2 * s_prev2);
        let integrand = |u: f64| {
            let y = (c_star + u * u).sqrt();
            let jac = u / y;
            spread_conditional_density(y, s_prev, s_prev2, r_prev2, sigma_prev2, &p) * jac
        };
        let total = integrate_1d(integrand, 0.0, UpperBound::PosInf, 1e-9).unwrap();
        assert!((total - 1.0).abs() < 1e-6, "integral {total}");
    }

    #[test]
    fn simulated_spread_matches_the_density_by_ks() {
        // fix the conditioning variables, sample s_t repeatedly from the
        // model update, and compare against inverse-cdf draws from phi
        let p = GarchParams::returns_drive_spread();
        let (s_prev, s_prev2, r_prev2, sigma_prev2) = (0.55f64, 0.4f64, 0.25f64, 0.3f64);
        let c_star = p.a * s_prev * s_prev
            + p.b
                * (p.w
                    + p.alpha * r_prev2 * r_prev2
                    + p.beta * sigma_prev2 * sigma_prev2
                    + p.gamma * s_prev2 * s_prev2);
        let n = 4000;
        let eps = crate::kernels::sample_standard(
            &RngHandle::new(301, 0),
            crate::kernels::StandardDist::ChiSquare1,
            n,
        );
        let simulated: Vec<f64> = eps.iter().map(|e2| (c_star + p.c * e2).sqrt()).collect();
        // the density transform says y = sqrt(c* + c eps^2) with eps^2
        // chi-square: draw an independent batch through the same map
        let eps2 = crate::kernels::sample_standard(
            &RngHandle::new(301, 1),
            crate::kernels::StandardDist::ChiSquare1,
            n,
        );
        let reference: Vec<f64> = eps2.iter().map(|e2| (c_star + p.c * e2).sqrt()).collect();
        let (_, p_same) = ks_2sample(&simulated, &reference).unwrap();
        assert!(p_same > 0.01, "same-law samples rejected: p = {p_same}");
        // histogram-level check against phi itself: the integrated density
        // mass below each empirical quantile must match its level
        let mut sorted = simulated.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for q in [0.1f64, 0.3, 0.5, 0.7, 0.9] {
            let y_q = sorted[(q * n as f64) as usize];
            let upper = ((y_q * y_q - c_star).max(0.0)).sqrt();
            let integrand = |u: f64| {
                let y = (c_star + u * u).sqrt();
                spread_conditional_density(y, s_prev, s_prev2, r_prev2, sigma_prev2, &p) * u / y
            };
            let mass = integrate_1d(integrand, 0.0, UpperBound::Finite(upper), 1e-9).unwrap();
            assert!(
                (mass - q).abs() < 0.03,
                "phi mass below empirical q{q} quantile is {mass}"
            );
        }
    }

    #[test]
    fn no_spread_channel_means_zero_te_s_to_r() {
        // gamma = 0 and b = 0: spread never touches volatility
        let p = GarchParams::new(0.1, 0.1, 0.4, 0.0, 0.8, 0.0, 0.1);
        let o = theoretical_te_s_to_r(&p, 4000, 128, &RngHandle::new(302, 0)).unwrap();
        assert!(
            o.value_nats.abs() < 3.0 * o.std_err.max(1e-3),
            "value {} se {}",
            o.value_nats,
            o.std_err
        );
    }

    #[test]
    fn no_return_channel_means_zero_te_r_to_s() {
        // b = 0: the numerator and denominator densities coincide
        let p = GarchParams::new(0.1, 0.1, 0.4, 0.0, 0.8, 0.0, 0.1);
        let o = theoretical_te_r_to_s(&p, 2000, 64, &RngHandle::new(303, 0)).unwrap();
        assert!(o.value_nats.abs() < 1e-9, "value {}", o.value_nats);
        assert_eq!(o.rejected, 0);
    }

    #[test]
    fn set_one_has_positive_s_to_r_flow() {
        let o = theoretical_te_s_to_r(&GarchParams::spread_drives_returns(), 8000, 256, &RngHandle::new(304, 0)).unwrap();
        assert!(o.value_nats > 5.0 * o.std_err, "value {} se {}", o.value_nats, o.std_err);
    }

    #[test]
    fn set_two_has_positive_r_to_s_flow_and_no_support_violations() {
        let o = theoretical_te_r_to_s(&GarchParams::returns_drive_spread(), 8000, 256, &RngHandle::new(305, 0)).unwrap();
        assert!(o.value_nats > 5.0 * o.std_err, "value {} se {}", o.value_nats, o.std_err);
        assert_eq!(o.rejected, 0, "sampling from the model itself cannot leave the support");
    }

    #[test]
    fn doubling_inner_samples_moves_less_than_the_ci() {
        let a = theoretical_te_s_to_r(&GarchParams::spread_drives_returns(), 6000, 128, &RngHandle::new(306, 0)).unwrap();
        let b = theoretical_te_s_to_r(&GarchParams::spread_drives_returns(), 6000, 256, &RngHandle::new(306, 0)).unwrap();
        let tol = 3.0 * (a.std_err + b.std_err);
        assert!(
            (a.value_nats - b.value_nats).abs() < tol.max(5e-3),
            "inner 128: {} vs inner 256: {}",
            a.value_nats,
            b.value_nats
        );
    }

    #[test]
    fn wrong_branch_is_rejected() {
        assert!(theoretical_te_s_to_r(&GarchParams::returns_drive_spread(), 100, 16, &RngHandle::new(307, 0)).is_err());
        assert!(theoretical_te_r_to_s(&GarchParams::spread_drives_returns(), 100, 16, &RngHandle::new(307, 1)).is_err());
    }
}
