//! GARCH-spread model: price returns whose volatility is coupled to the
//! bid-ask spread, and back.
//!
//!   r_t     = sigma_t eps1_t,              eps1 ~ N(0,1)
//!   sigma^2 = w + alpha r^2_{t-1} + beta sigma^2_{t-1} + gamma s^2_{t-1}
//!   s^2_t   = a s^2_{t-1} + b sigma^2_{t-1} + c eps2^2_t, eps2 ~ N(0,1)
//!
//! gamma carries spread -> volatility -> returns; b carries volatility ->
//! spread (so returns reach the spread at a two-step delay).

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::matrix::solve_dense;
use crate::kernels::RngHandle;
use crate::series::TimeSeries;

use super::BURN_IN;

/// Model coefficients, all nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GarchParams {
    pub w: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GarchParams {
    pub fn new(w: f64, alpha: f64, beta: f64, gamma: f64, a: f64, b: f64, c: f64) -> Self {
        GarchParams { w, alpha, beta, gamma, a, b, c }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("w", self.w),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
        ] {
            if !(v >= 0.0) {
                return Err(Error::InvalidParam(format!("{name} must be nonnegative, got {v}")));
            }
        }
        if self.a >= 1.0 {
            return Err(Error::InvalidParam("spread persistence a must be < 1".into()));
        }
        Ok(())
    }

    /// Stationarity condition for finite unconditional second moments:
    /// (1 - alpha - beta)(1 - a) - gamma b > 0.
    pub fn stationary(&self) -> bool {
        (1.0 - self.alpha - self.beta) * (1.0 - self.a) - self.gamma * self.b > 0.0
    }
}

/// Closed-form unconditional moments.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GarchMoments {
    /// E[sigma^2]
    pub sigma2: f64,
    /// E[s^2]
    pub s2: f64,
    /// E[sigma^4]
    pub sigma4: f64,
    /// E[s^4]
    pub s4: f64,
    /// E[sigma^2 s^2]
    pub sigma2_s2: f64,
    pub stationary: bool,
    /// Fourth moments exist where the 3x3 system's solution is positive
    /// (and exceeds the squared second moments).
    pub moments_finite: bool,
}

/// Second moments in closed form and fourth moments by solving the linear
/// three-equation system in (E[sigma^4], E[s^4], E[sigma^2 s^2]).
pub fn garch_moments(p: &GarchParams) -> Result<GarchMoments> {
    p.validate()?;
    let stationary = p.stationary();
    let denom = (1.0 - p.alpha - p.beta) * (1.0 - p.a) - p.gamma * p.b;
    if denom.abs() < 1e-12 {
        return Err(Error::Singular("second-moment denominator vanishes".into()));
    }
    let sigma2 = (p.w * (1.0 - p.a) + p.gamma * p.c) / denom;
    let s2 = (p.b * sigma2 + p.c) / (1.0 - p.a);

    // unknowns u = E[sigma^4], v = E[s^4], z = E[sigma^2 s^2]; E[eps^4] = 3
    let (al, be, ga, a, b, c, w) = (p.alpha, p.beta, p.gamma, p.a, p.b, p.c, p.w);
    let mat = [
        1.0 - 3.0 * al * al - be * be - 2.0 * al * be,
        -ga * ga,
        -2.0 * ga * (al + be),
        -b * b,
        1.0 - a * a,
        -2.0 * a * b,
        -b * (al + be),
        -ga * a,
        1.0 - a * (al + be) - ga * b,
    ];
    let rhs = [
        w * w + 2.0 * w * (al + be) * sigma2 + 2.0 * w * ga * s2,
        3.0 * c * c + 2.0 * a * c * s2 + 2.0 * b * c * sigma2,
        w * (a * s2 + b * sigma2 + c) + c * (al + be) * sigma2 + ga * c * s2,
    ];
    let sol = solve_dense(&mat, &rhs, 3)
        .map_err(|_| Error::Singular("fourth-moment system is singular".into()))?;
    let (sigma4, s4, sigma2_s2) = (sol[0], sol[1], sol[2]);
    let moments_finite = stationary
        && sigma4 > sigma2 * sigma2
        && s4 > s2 * s2
        && sigma2_s2 > 0.0;
    Ok(GarchMoments { sigma2, s2, sigma4, s4, sigma2_s2, stationary, moments_finite })
}

/// A simulated trajectory: returns, spread and the hidden volatility.
#[derive(Debug, Clone)]
pub struct GarchSpreadPath {
    pub returns: TimeSeries,
    pub spread: TimeSeries,
    pub sigma: TimeSeries,
}

/// Simulate `steps` post-burn-in observations. sigma^2 and s^2 start at
/// their unconditional means; the stationarity condition is enforced unless
/// `allow_nonstationary` (divergence is then the caller's problem).
pub fn simulate_garch_spread(
    p: &GarchParams,
    steps: usize,
    handle: &RngHandle,
    allow_nonstationary: bool,
) -> Result<GarchSpreadPath> {
    p.validate()?;
    if steps < 2 {
        return Err(Error::InvalidParam("need at least 2 steps".into()));
    }
    if !p.stationary() && !allow_nonstationary {
        return Err(Error::NonStationary(format!(
            "(1-alpha-beta)(1-a) - gamma b = {} <= 0",
            (1.0 - p.alpha - p.beta) * (1.0 - p.a) - p.gamma * p.b
        )));
    }
    let (sigma2_0, s2_0) = if p.stationary() {
        let m = garch_moments(p)?;
        (m.sigma2, m.s2)
    } else {
        (p.w / (1.0 - (p.alpha + p.beta).min(0.99)), p.c.max(1e-6))
    };
    let mut rng = handle.rng();
    let mut sigma2 = sigma2_0;
    let mut s2 = s2_0;
    let mut r: f64 = sigma2.sqrt() * rng.sample::<f64, _>(StandardNormal);
    let mut rs = Vec::with_capacity(steps);
    let mut ss = Vec::with_capacity(steps);
    let mut sigmas = Vec::with_capacity(steps);
    for i in 0..BURN_IN + steps {
        let sigma2_next = p.w + p.alpha * r * r + p.beta * sigma2 + p.gamma * s2;
        let eps2: f64 = rng.sample(StandardNormal);
        let s2_next = p.a * s2 + p.b * sigma2 + p.c * eps2 * eps2;
        let eps1: f64 = rng.sample(StandardNormal);
        sigma2 = sigma2_next;
        s2 = s2_next;
        r = sigma2.sqrt() * eps1;
        if i >= BURN_IN {
            rs.push(r);
            ss.push(s2.sqrt());
            sigmas.push(sigma2.sqrt());
        }
    }
    Ok(GarchSpreadPath {
        returns: TimeSeries::new(rs, 0, 1, "returns")?,
        spread: TimeSeries::new(ss, 0, 1, "spread")?,
        sigma: TimeSeries::new(sigmas, 0, 1, "sigma")?,
    })
}

impl GarchParams {
    /// Spread drives volatility (and so returns); no feedback the other
    /// way: gamma = 0.9, b = 0.
    pub fn spread_drives_returns() -> Self {
        GarchParams::new(0.1, 0.1, 0.4, 0.9, 0.8, 0.0, 0.1)
    }

    /// Volatility (so returns) drives the spread; no feedback: b = 0.9,
    /// gamma = 0.
    pub fn returns_drive_spread() -> Self {
        GarchParams::new(0.1, 0.1, 0.1, 0.0, 0.1, 0.9, 0.1)
    }

    /// Both channels open: gamma = b = 0.5.
    pub fn bidirectional() -> Self {
        GarchParams::new(0.1, 0.1, 0.5, 0.5, 0.1, 0.5, 0.1)
    }
}
