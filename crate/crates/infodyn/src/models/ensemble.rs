//! Regime-shift ensembles: simulate many seeded runs of the coupled AR
//! model around a logistic transition and contrast windowed information
//! measures on the two sides with a paired test.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimators::{
    active_information_storage, multi_information, transfer_entropy, EstimatorConfig,
};
use crate::inference::paired_t_test;
use crate::kernels::RngHandle;
use crate::series::{rolling_windows, WindowSpec};

use super::var::{CouplingForm, Drive, SigmoidSpec, VarParams};

/// Which coefficient undergoes the regime shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScenarioKind {
    /// C(t) steps up: the causal coupling X -> Y strengthens.
    CausalDriverShift,
    /// K(t) steps up: the hidden common driver strengthens.
    HiddenDriverShift,
    /// beta1 = beta2 step: the intrinsic noise level changes.
    UncertaintyShift,
}

/// A regime-shift experiment: which driver moves, how far and how fast.
#[derive(Debug, Clone, Copy)]
pub struct RegimeScenario {
    pub kind: ScenarioKind,
    pub steps: usize,
    pub t_c: f64,
    /// Sigmoid amplitude of the shifting driver.
    pub amplitude: f64,
    /// Sigmoid steepness.
    pub steepness: f64,
    /// Baseline value of the shifting driver.
    pub baseline: f64,
}

impl RegimeScenario {
    /// Model parameters: alpha = 0.2, d = 0.5; the non-shifting drivers
    /// take the reference constants (K = 0.01, C = 0.5, beta = 1).
    pub fn params(&self) -> VarParams {
        let shift = Drive::Sigmoid(SigmoidSpec {
            s: self.amplitude,
            b: self.steepness,
            t_c: self.t_c,
            c: self.baseline,
        });
        let (beta1, beta2, k_drive, c_drive) = match self.kind {
            ScenarioKind::CausalDriverShift => {
                (Drive::Const(1.0), Drive::Const(1.0), Drive::Const(0.01), shift)
            }
            ScenarioKind::HiddenDriverShift => {
                (Drive::Const(1.0), Drive::Const(1.0), shift, Drive::Const(0.5))
            }
            ScenarioKind::UncertaintyShift => (shift, shift, Drive::Const(0.01), Drive::Const(0.5)),
        };
        VarParams {
            alpha1: 0.2,
            alpha2: 0.2,
            beta1,
            beta2,
            k_drive,
            c_drive,
            d: 0.5,
            coupling: CouplingForm::AbsPow,
        }
    }
}

/// Before/after contrast of one measure across the ensemble.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RegimeStat {
    pub mean_before: f64,
    pub mean_after: f64,
    pub mean_diff: f64,
    pub t_statistic: f64,
    /// One-sided p for "after > before".
    pub p_greater: f64,
    pub p_two_sided: f64,
}

/// Ensemble outcome for TE (X -> Y), AIS of the target and pairwise
/// multi-information.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EnsembleSummary {
    pub te: RegimeStat,
    pub ais: RegimeStat,
    pub mi: RegimeStat,
    pub runs: usize,
    pub windows_before: usize,
    pub windows_after: usize,
}

fn stat_from(diffs: &[(f64, f64)]) -> Result<RegimeStat> {
    let before: Vec<f64> = diffs.iter().map(|d| d.0).collect();
    let after: Vec<f64> = diffs.iter().map(|d| d.1).collect();
    let deltas: Vec<f64> = diffs.iter().map(|d| d.1 - d.0).collect();
    let t = paired_t_test(&deltas)?;
    Ok(RegimeStat {
        mean_before: before.iter().sum::<f64>() / before.len() as f64,
        mean_after: after.iter().sum::<f64>() / after.len() as f64,
        mean_diff: t.mean_diff,
        t_statistic: t.t_statistic,
        p_greater: t.p_greater,
        p_two_sided: t.p_two_sided,
    })
}

/// Run `n_runs` seeded simulations, estimate TE / AIS / MI on rolling
/// windows, average windows cleanly before and after the transition
/// (windows inside the sigmoid's settling band of width 5/steepness are
/// excluded) and pair the per-run means.
pub fn run_regime_ensemble(
    scenario: &RegimeScenario,
    n_runs: usize,
    window: &WindowSpec,
    cfg: &EstimatorConfig,
    handle: &RngHandle,
) -> Result<EnsembleSummary> {
    if n_runs < 3 {
        return Err(Error::InvalidParam("need at least 3 runs".into()));
    }
    let params = scenario.params();
    let guard = (5.0 / scenario.steepness.max(1e-6)).ceil();
    let lo_cut = scenario.t_c - guard;
    let hi_cut = scenario.t_c + guard;
    let mut counts = (0usize, 0usize);
    {
        // window classification is seed-independent
        let count_for = |start: f64, width: f64| -> i32 {
            if start + width <= lo_cut {
                -1
            } else if start >= hi_cut {
                1
            } else {
                0
            }
        };
        let n_windows = (scenario.steps - window.width) / window.step + 1;
        for j in 0..n_windows {
            match count_for((j * window.step) as f64, window.width as f64) {
                -1 => counts.0 += 1,
                1 => counts.1 += 1,
                _ => {}
            }
        }
        if counts.0 == 0 || counts.1 == 0 {
            return Err(Error::InvalidParam(
                "window spec leaves no clean window on one side of t_c".into(),
            ));
        }
    }
    let per_run: Vec<Result<[(f64, f64); 3]>> = (0..n_runs)
        .into_par_iter()
        .map(|run| {
            let (x, y) = super::var::simulate_var(&params, scenario.steps, &handle.derive(&[run as u64]))?;
            let xw = rolling_windows(&x, window)?;
            let yw = rolling_windows(&y, window)?;
            let mut acc = [[0.0f64; 2]; 3]; // [measure][side]
            let mut cnt = [[0usize; 2]; 3];
            for (wx, wy) in xw.iter().zip(&yw) {
                let start = wx.start_time_ms as f64;
                let end = start + window.width as f64;
                let side = if end <= lo_cut {
                    0
                } else if start >= hi_cut {
                    1
                } else {
                    continue;
                };
                let te = transfer_entropy(wx, wy, cfg)?.value_nats;
                let ais = active_information_storage(wy, cfg)?.value_nats;
                let mi = multi_information(&[wx, wy], cfg)?.value_nats;
                for (m, v) in [te, ais, mi].into_iter().enumerate() {
                    acc[m][side] += v;
                    cnt[m][side] += 1;
                }
            }
            let mut out = [(0.0, 0.0); 3];
            for m in 0..3 {
                out[m] = (acc[m][0] / cnt[m][0] as f64, acc[m][1] / cnt[m][1] as f64);
            }
            Ok(out)
        })
        .collect();
    let mut te_pairs = Vec::with_capacity(n_runs);
    let mut ais_pairs = Vec::with_capacity(n_runs);
    let mut mi_pairs = Vec::with_capacity(n_runs);
    for r in per_run {
        let [te, ais, mi] = r?;
        te_pairs.push(te);
        ais_pairs.push(ais);
        mi_pairs.push(mi);
    }
    Ok(EnsembleSummary {
        te: stat_from(&te_pairs)?,
        ais: stat_from(&ais_pairs)?,
        mi: stat_from(&mi_pairs)?,
        runs: n_runs,
        windows_before: counts.0,
        windows_after: counts.1,
    })
}
