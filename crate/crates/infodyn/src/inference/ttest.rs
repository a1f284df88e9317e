//! Paired t-test over per-run differences (used by the regime-shift
//! ensemble orderings).

use crate::error::{Error, Result};
use crate::kernels::student_t_cdf;

/// Paired t-test summary.
#[derive(Debug, Clone, Copy)]
pub struct PairedTTest {
    pub mean_diff: f64,
    pub t_statistic: f64,
    /// P(got this or larger in magnitude | no difference).
    pub p_two_sided: f64,
    /// One-sided p for the alternative "difference > 0".
    pub p_greater: f64,
    pub n: usize,
}

/// T-test on a sample of paired differences.
pub fn paired_t_test(diffs: &[f64]) -> Result<PairedTTest> {
    let n = diffs.len();
    if n < 2 {
        return Err(Error::InsufficientLength("paired t-test needs >= 2 pairs".into()));
    }
    let nf = n as f64;
    let mean = diffs.iter().sum::<f64>() / nf;
    let var = diffs.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / (nf - 1.0);
    if var <= 0.0 {
        return Err(Error::Singular("zero variance in paired differences".into()));
    }
    let t = mean / (var / nf).sqrt();
    let nu = nf - 1.0;
    let cdf = student_t_cdf(t, nu)?;
    let p_greater = 1.0 - cdf;
    let p_two_sided = 2.0 * cdf.min(1.0 - cdf);
    Ok(PairedTTest { mean_diff: mean, t_statistic: t, p_two_sided, p_greater, n })
}
