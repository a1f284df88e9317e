//! Statistical machinery: surrogate significance testing, FDR control, KSG
//! bias diagnostics, stationarity and distribution tests.

mod bias;
mod fdr;
mod ks;
mod significance;
mod stationarity;
mod ttest;

pub use bias::{subsample_bias_profile, BiasProfile, BiasRow};
pub use fdr::benjamini_yekutieli;
pub use ks::{ks_2sample, kolmogorov_q};
pub use significance::{
    make_surrogate, surrogate_ais_test, surrogate_te_test, surrogate_test, SignificanceSpec,
    SurrogateKind,
};
pub use stationarity::{adf_test, default_max_lag, AdfResult};
pub use ttest::{paired_t_test, PairedTTest};
