//! History-length and source-delay selection.

use crate::error::{Error, Result};
use crate::inference::{surrogate_ais_test, SignificanceSpec};
use crate::kernels::RngHandle;
use crate::series::TimeSeries;

use super::{active_information_storage, transfer_entropy, EstimateResult, EstimatorConfig};

/// Choose the target history length k as the AIS-maximising kappa, ties
/// towards smaller kappa.
///
/// When a significance gate is supplied, only kappas whose AIS passes the
/// surrogate test compete, and the smallest kappa in the range is returned
/// if none does. Without the gate this is a plain argmax: on memoryless
/// data the winner is then estimator noise, so the gated form is what the
/// analysis pipeline uses to avoid over-estimating information transfer.
pub fn select_history(
    x: &TimeSeries,
    kappa_range: (usize, usize),
    cfg: &EstimatorConfig,
    gate: Option<(&SignificanceSpec, &RngHandle)>,
) -> Result<usize> {
    let (lo, hi) = kappa_range;
    if lo < 1 || hi < lo {
        return Err(Error::InvalidParam(format!("bad kappa range [{lo}, {hi}]")));
    }
    let mut best_k = lo;
    let mut best_value = f64::NEG_INFINITY;
    let mut any_candidate = false;
    for kappa in lo..=hi {
        let mut local_cfg = *cfg;
        local_cfg.k = kappa;
        let ais = active_information_storage(x, &local_cfg)?;
        if let Some((spec, rng)) = gate {
            let handle = rng.derive(&[0x6169_7360, kappa as u64]);
            let (_, significant) = surrogate_ais_test(x, &local_cfg, spec, &handle)?;
            if !significant {
                continue;
            }
        }
        if !any_candidate || ais.value_nats > best_value {
            any_candidate = true;
            best_value = ais.value_nats;
            best_k = kappa;
        }
    }
    Ok(best_k)
}

/// Scan source delays and return the TE-maximising one with its estimate,
/// ties towards the smaller delay.
pub fn select_delay(
    source: &TimeSeries,
    target: &TimeSeries,
    delta_range: (usize, usize),
    cfg: &EstimatorConfig,
) -> Result<(usize, EstimateResult)> {
    let (lo, hi) = delta_range;
    if lo < 1 || hi < lo {
        return Err(Error::InvalidParam(format!("bad delta range [{lo}, {hi}]")));
    }
    let mut best: Option<(usize, EstimateResult)> = None;
    for delta in lo..=hi {
        let mut local_cfg = *cfg;
        local_cfg.delta = delta;
        let estimate = transfer_entropy(source, target, &local_cfg)?;
        let better = match &best {
            None => true,
            Some((_, b)) => estimate.value_nats > b.value_nats,
        };
        if better {
            best = Some((delta, estimate));
        }
    }
    Ok(best.expect("range is non-empty"))
}
