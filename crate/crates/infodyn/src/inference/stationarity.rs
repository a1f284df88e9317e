//! Augmented Dickey–Fuller unit-root test (regression with constant).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::matrix::solve_dense;
use crate::series::TimeSeries;

/// ADF outcome. The null hypothesis is a unit root; rejection at 5% means
/// the window behaves stationary.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AdfResult {
    pub statistic: f64,
    pub crit_1pct: f64,
    pub crit_5pct: f64,
    pub crit_10pct: f64,
    pub reject_at_5pct: bool,
    pub lags: usize,
    pub nobs: usize,
}

// MacKinnon (2010) response-surface coefficients, constant-only case.
const CRIT_1: [f64; 4] = [-3.43035, -6.5393, -16.786, -79.433];
const CRIT_5: [f64; 4] = [-2.86154, -2.8903, -4.234, -40.040];
const CRIT_10: [f64; 4] = [-2.56677, -1.5384, -2.809, 0.0];

fn response_surface(c: &[f64; 4], n: f64) -> f64 {
    c[0] + c[1] / n + c[2] / (n * n) + c[3] / (n * n * n)
}

/// Default lag order floor((n-1)^(1/3)).
pub fn default_max_lag(n: usize) -> usize {
    (((n - 1) as f64).powf(1.0 / 3.0)).floor() as usize
}

/// ADF regression
/// `dy_t = c + rho * y_{t-1} + sum_j phi_j dy_{t-j} + e_t`
/// with `max_lag` lagged differences; the statistic is the t-ratio of rho.
pub fn adf_test(x: &TimeSeries, max_lag: usize) -> Result<AdfResult> {
    let q = x.len();
    if q <= max_lag + 10 {
        return Err(Error::InsufficientLength(format!(
            "ADF with {max_lag} lags needs more than {} observations, got {q}",
            max_lag + 10
        )));
    }
    let y = &x.values;
    let dy: Vec<f64> = y.windows(2).map(|w| w[1] - w[0]).collect();
    let nobs = dy.len() - max_lag;
    let k_params = max_lag + 2; // rho, lagged diffs, constant
    // design matrix rows: [y_{t-1}, dy_{t-1}, ..., dy_{t-max_lag}, 1]
    let mut xtx = vec![0.0; k_params * k_params];
    let mut xty = vec![0.0; k_params];
    let mut row = vec![0.0; k_params];
    let mut yty = 0.0;
    for t in 0..nobs {
        let i = max_lag + t; // index into dy
        row[0] = y[i]; // level lagged once relative to dy[i]
        for j in 0..max_lag {
            row[1 + j] = dy[i - 1 - j];
        }
        row[k_params - 1] = 1.0;
        let target = dy[i];
        yty += target * target;
        for a in 0..k_params {
            xty[a] += row[a] * target;
            for b in a..k_params {
                xtx[a * k_params + b] += row[a] * row[b];
            }
        }
    }
    for a in 0..k_params {
        for b in 0..a {
            xtx[a * k_params + b] = xtx[b * k_params + a];
        }
    }
    let beta = solve_dense(&xtx, &xty, k_params)
        .map_err(|_| Error::Singular("degenerate ADF regression (constant series?)".into()))?;
    // residual variance
    let explained: f64 = beta.iter().zip(&xty).map(|(b, v)| b * v).sum();
    let rss = (yty - explained).max(0.0);
    let dof = nobs - k_params;
    if dof == 0 {
        return Err(Error::InsufficientLength("no residual degrees of freedom".into()));
    }
    let sigma2 = rss / dof as f64;
    // var(beta_0) = sigma2 * (X'X)^-1 [0,0]: solve X'X v = e_0
    let mut e0 = vec![0.0; k_params];
    e0[0] = 1.0;
    let col = solve_dense(&xtx, &e0, k_params)
        .map_err(|_| Error::Singular("degenerate ADF regression".into()))?;
    let se = (sigma2 * col[0]).sqrt();
    if !(se > 0.0) {
        return Err(Error::Singular("zero standard error in ADF regression".into()));
    }
    let statistic = beta[0] / se;
    let n = nobs as f64;
    let crit_1pct = response_surface(&CRIT_1, n);
    let crit_5pct = response_surface(&CRIT_5, n);
    let crit_10pct = response_surface(&CRIT_10, n);
    Ok(AdfResult {
        statistic,
        crit_1pct,
        crit_5pct,
        crit_10pct,
        reject_at_5pct: statistic < crit_5pct,
        lags: max_lag,
        nobs,
    })
}
