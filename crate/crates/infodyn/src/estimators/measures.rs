//! The information-dynamics measures, built on the embedding machinery and
//! the KSG / Gaussian conditional-MI estimators.

use crate::error::{Error, Result};
use crate::kernels::Matrix;
use crate::series::{build_embedding, TimeSeries};

use super::{gaussian_cmi_samples, kl_entropy, ksg_cmi_samples, EstimateResult, EstimatorConfig, EstimatorKind};

fn cmi_dispatch(
    x: &Matrix,
    y: &Matrix,
    z: Option<&Matrix>,
    cfg: &EstimatorConfig,
) -> Result<(f64, Vec<f64>)> {
    match cfg.kind {
        EstimatorKind::Ksg => ksg_cmi_samples(x, y, z, cfg.neighbours, cfg.jitter_seed),
        EstimatorKind::Gaussian => gaussian_cmi_samples(x, y, z),
    }
}

fn finish(
    measure: &str,
    value: f64,
    locals: Vec<f64>,
    n: usize,
    cfg: &EstimatorConfig,
) -> EstimateResult {
    let mut r = EstimateResult::new(measure, value, n, *cfg);
    if cfg.keep_locals {
        r.locals = Some(locals);
    }
    r
}

/// Transfer entropy T_{source -> target}: the information the source's
/// `l`-step past at delay `delta` carries about the target's next value
/// beyond the target's own `k`-step past.
pub fn transfer_entropy(
    source: &TimeSeries,
    target: &TimeSeries,
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    conditional_te(source, target, &[], cfg)
}

/// Conditional transfer entropy: as [`transfer_entropy`] but discounting the
/// `m`-step pasts of the conditioning series. An empty conditional list is
/// exactly transfer entropy.
pub fn conditional_te(
    source: &TimeSeries,
    target: &TimeSeries,
    conditionals: &[&TimeSeries],
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    let emb = build_embedding(target, Some(source), conditionals, cfg.k, cfg.l, cfg.m, cfg.delta)?;
    let x = Matrix::column(&emb.target);
    let y = emb.source_past.as_ref().expect("source embedding present");
    let z = match &emb.cond_past {
        Some(cond) => Matrix::hstack(&[&emb.target_past, cond])?,
        None => emb.target_past.clone(),
    };
    let (value, locals) = cmi_dispatch(&x, y, Some(&z), cfg)?;
    let measure = if conditionals.is_empty() { "transfer_entropy" } else { "conditional_te" };
    Ok(finish(measure, value, locals, emb.n, cfg))
}

/// Collective transfer entropy: incremental sum of conditional TE terms over
/// the caller-supplied source order. The per-term breakdown is attached
/// because the split (not the sum's meaning) depends on the order at finite
/// sample sizes.
pub fn collective_te(
    target: &TimeSeries,
    sources: &[&TimeSeries],
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    if sources.is_empty() {
        return Err(Error::InvalidParam("collective TE needs at least one source".into()));
    }
    let mut terms = Vec::with_capacity(sources.len());
    let mut total = 0.0;
    let mut n = 0;
    for (i, source) in sources.iter().enumerate() {
        let conditioned: Vec<&TimeSeries> = sources[..i].to_vec();
        let term = conditional_te(source, target, &conditioned, cfg)?;
        n = term.n;
        total += term.value_nats;
        terms.push(term.value_nats);
    }
    let mut result = EstimateResult::new("collective_te", total, n, *cfg);
    result.terms = Some(terms);
    Ok(result)
}

/// Active information storage A_X = I(X^(k)_{t-1}; X_t).
pub fn active_information_storage(
    x: &TimeSeries,
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    let emb = build_embedding(x, None, &[], cfg.k, 1, 1, 1)?;
    let target = Matrix::column(&emb.target);
    let (value, locals) = cmi_dispatch(&target, &emb.target_past, None, cfg)?;
    Ok(finish("active_information_storage", value, locals, emb.n, cfg))
}

/// Multi-information of N aligned series: the sum of marginal entropies
/// minus the joint entropy, all via Kozachenko–Leonenko with the shared K
/// (Gaussian kind: log-determinant route).
pub fn multi_information(
    series: &[&TimeSeries],
    cfg: &EstimatorConfig,
) -> Result<EstimateResult> {
    if series.len() < 2 {
        return Err(Error::InvalidParam("multi-information needs >= 2 series".into()));
    }
    let n = series[0].len();
    for s in series {
        if s.len() != n {
            return Err(Error::LengthMismatch(format!(
                "series '{}' length {} != {n}",
                s.label,
                s.len()
            )));
        }
        if !series[0].same_grid(s) {
            return Err(Error::LengthMismatch(format!("series '{}' off the grid", s.label)));
        }
    }
    let mut columns = Vec::with_capacity(series.len());
    for s in series {
        let mut col = Matrix::column(&s.values);
        col.standardize()?;
        columns.push(col);
    }
    let refs: Vec<&Matrix> = columns.iter().collect();
    let joint = Matrix::hstack(&refs)?;
    let (value, locals) = match cfg.kind {
        EstimatorKind::Ksg => {
            let mut value = 0.0;
            let mut locals = vec![0.0; n];
            for col in &columns {
                let (h, hl) = kl_entropy(col, cfg.neighbours)?;
                value += h;
                for (acc, l) in locals.iter_mut().zip(&hl) {
                    *acc += l;
                }
            }
            let (hj, hjl) = kl_entropy(&joint, cfg.neighbours)?;
            value -= hj;
            for (acc, l) in locals.iter_mut().zip(&hjl) {
                *acc -= l;
            }
            (value, locals)
        }
        EstimatorKind::Gaussian => {
            // marginals are standardized, so the value reduces to
            // -1/2 log det of the correlation matrix
            let (_, cov) = joint.covariance();
            let ld = crate::kernels::matrix::cholesky_log_det(&cov, joint.cols())?;
            let value = -0.5 * ld;
            (value, vec![value; n])
        }
    };
    Ok(finish("multi_information", value, locals, n, cfg))
}

/// Which measure a local-values request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalMeasure {
    TransferEntropy,
    ActiveInformationStorage,
    MultiInformation,
}

/// Per-sample local values of a measure; their mean is the global estimate
/// by the estimator's decomposition.
pub fn local_values(
    measure: LocalMeasure,
    inputs: &[&TimeSeries],
    cfg: &EstimatorConfig,
) -> Result<Vec<f64>> {
    let cfg = EstimatorConfig { keep_locals: true, ..*cfg };
    let result = match measure {
        LocalMeasure::TransferEntropy => {
            if inputs.len() < 2 {
                return Err(Error::InvalidParam("local TE needs (source, target)".into()));
            }
            transfer_entropy(inputs[0], inputs[1], &cfg)?
        }
        LocalMeasure::ActiveInformationStorage => {
            if inputs.is_empty() {
                return Err(Error::InvalidParam("local AIS needs a series".into()));
            }
            active_information_storage(inputs[0], &cfg)?
        }
        LocalMeasure::MultiInformation => multi_information(inputs, &cfg)?,
    };
    Ok(result.locals.expect("locals requested"))
}
