//! Information-dynamics measures: entropy-based estimation via KSG
//! k-nearest-neighbour statistics and a linear-Gaussian baseline, with
//! global and local variants plus history/delay selection.

mod gaussian;
mod ksg;
mod measures;
mod select;

pub use gaussian::{gaussian_cmi, gaussian_cmi_samples};
pub use ksg::{kl_entropy, ksg_cmi, ksg_cmi_samples};
pub use measures::{
    active_information_storage, collective_te, conditional_te, local_values, multi_information,
    transfer_entropy, LocalMeasure,
};
pub use select::{select_delay, select_history};

use serde::{Deserialize, Serialize};

/// Which estimator backs a measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EstimatorKind {
    Ksg,
    Gaussian,
}

/// Estimator configuration shared by every measure.
///
/// `neighbours` is the KSG K; `k`, `l`, `m` are history lengths for the
/// target, source and conditionals; `delta` is the source delay.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimatorConfig {
    pub kind: EstimatorKind,
    #[serde(rename = "K")]
    pub neighbours: usize,
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub delta: usize,
    /// Keep the per-sample local values on the result.
    #[serde(default, skip_serializing_if = "is_false")]
    pub keep_locals: bool,
    /// Optional tie-breaking jitter for heavily discretised inputs: uniform
    /// noise of amplitude 1e-8 of the (unit, post-standardisation) scale,
    /// seeded for reproducibility. Off by default since it shifts estimates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jitter_seed: Option<u64>,
}

fn is_false(b: &bool) -> bool {
    !b
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        EstimatorConfig {
            kind: EstimatorKind::Ksg,
            neighbours: 4,
            k: 1,
            l: 1,
            m: 1,
            delta: 1,
            keep_locals: false,
            jitter_seed: None,
        }
    }
}

impl EstimatorConfig {
    pub fn ksg(neighbours: usize) -> Self {
        EstimatorConfig { neighbours, ..Default::default() }
    }

    pub fn gaussian() -> Self {
        EstimatorConfig { kind: EstimatorKind::Gaussian, ..Default::default() }
    }

    pub fn with_histories(mut self, k: usize, l: usize, delta: usize) -> Self {
        self.k = k;
        self.l = l;
        self.delta = delta;
        self
    }

    pub fn with_locals(mut self) -> Self {
        self.keep_locals = true;
        self
    }
}

/// Surrogate-test outcome attached to an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Significance {
    pub p_value: f64,
    pub n_surrogates: usize,
    pub significant: bool,
}

/// A measure estimate in nats plus everything needed to reproduce it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimateResult {
    pub measure: String,
    pub value_nats: f64,
    pub n: usize,
    pub config: EstimatorConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locals: Option<Vec<f64>>,
    /// Incremental per-source terms (collective transfer entropy only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub significance: Option<Significance>,
}

impl EstimateResult {
    pub(crate) fn new(measure: &str, value: f64, n: usize, config: EstimatorConfig) -> Self {
        EstimateResult {
            measure: measure.to_string(),
            value_nats: value,
            n,
            config,
            locals: None,
            terms: None,
            significance: None,
        }
    }

    pub fn p_value(&self) -> Option<f64> {
        self.significance.map(|s| s.p_value)
    }

    pub fn is_significant(&self) -> bool {
        self.significance.map_or(false, |s| s.significant)
    }
}
