//! Coupled auto-regressive pair with time-varying drivers:
//!
//!   X_t = a1 X_{t-1} + b1(t) e1_t + K(t) e_t
//!   Y_t = a2 Y_{t-1} + b2(t) e2_t + K(t) e_t + C(t) |X_{t-1}|^d
//!
//! The shared noise e_t is the hidden common driver (no delay); C(t) is the
//! causal coupling X -> Y at lag one; d tunes the linearity of the link.
//! Any of b1, b2, K, C may follow a logistic regime shift in time.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::RngHandle;
use crate::series::TimeSeries;

use super::BURN_IN;

/// Logistic transition `f(t) = s / (1 + exp(-b (t - t_c))) + c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SigmoidSpec {
    /// Amplitude of the shift.
    pub s: f64,
    /// Steepness; 0 freezes the function at its midpoint value.
    pub b: f64,
    /// Transition step.
    pub t_c: f64,
    /// Baseline offset.
    pub c: f64,
}

/// Evaluate the logistic transition at step `t`.
pub fn sigmoid(t: f64, spec: &SigmoidSpec) -> f64 {
    spec.s / (1.0 + (-spec.b * (t - spec.t_c)).exp()) + spec.c
}

/// A model coefficient that is either fixed or follows a regime shift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Drive {
    Const(f64),
    Sigmoid(SigmoidSpec),
}

impl Drive {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Drive::Const(v) => *v,
            Drive::Sigmoid(spec) => sigmoid(t, spec),
        }
    }
}

/// How the causal term uses the lagged source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingForm {
    /// |X_{t-1}|^d (default; required for fractional d).
    AbsPow,
    /// sign-preserving X_{t-1}^d (integer d; the linear case d = 1).
    SignedPow,
}

impl Default for CouplingForm {
    fn default() -> Self {
        CouplingForm::AbsPow
    }
}

/// Parameters of the coupled auto-regressive pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VarParams {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: Drive,
    pub beta2: Drive,
    /// Hidden common driver strength K(t).
    pub k_drive: Drive,
    /// Causal coupling strength C(t).
    pub c_drive: Drive,
    /// Coupling exponent.
    pub d: f64,
    #[serde(default)]
    pub coupling: CouplingForm,
}

impl VarParams {
    pub fn validate(&self) -> Result<()> {
        if self.alpha1.abs() >= 1.0 || self.alpha2.abs() >= 1.0 {
            return Err(Error::InvalidParam("|alpha| must be < 1 for stationarity".into()));
        }
        Ok(())
    }
}

/// Simulate `steps` post-burn-in observations of (X, Y). Driver functions
/// are evaluated in logical time, negative during burn-in, so a regime
/// shift at t_c >= 0 sees a stationary pre-regime warm-up.
pub fn simulate_var(
    params: &VarParams,
    steps: usize,
    handle: &RngHandle,
) -> Result<(TimeSeries, TimeSeries)> {
    params.validate()?;
    if steps < 2 {
        return Err(Error::InvalidParam("need at least 2 steps".into()));
    }
    let mut rng = handle.rng();
    let mut x = 0.0f64;
    let mut y = 0.0f64;
    let mut xs = Vec::with_capacity(steps);
    let mut ys = Vec::with_capacity(steps);
    for i in 0..BURN_IN + steps {
        let t = i as f64 - BURN_IN as f64;
        let e1: f64 = rng.sample(StandardNormal);
        let e2: f64 = rng.sample(StandardNormal);
        let shared: f64 = rng.sample(StandardNormal);
        let k = params.k_drive.eval(t);
        let c = params.c_drive.eval(t);
        let coupling = match params.coupling {
            CouplingForm::AbsPow => x.abs().powf(params.d),
            CouplingForm::SignedPow => {
                if params.d == 1.0 {
                    x
                } else {
                    x.signum() * x.abs().powf(params.d)
                }
            }
        };
        let x_next = params.alpha1 * x + params.beta1.eval(t) * e1 + k * shared;
        let y_next = params.alpha2 * y + params.beta2.eval(t) * e2 + k * shared + c * coupling;
        x = x_next;
        y = y_next;
        if i >= BURN_IN {
            xs.push(x);
            ys.push(y);
        }
    }
    Ok((
        TimeSeries::new(xs, 0, 1, "var_x")?,
        TimeSeries::new(ys, 0, 1, "var_y")?,
    ))
}
