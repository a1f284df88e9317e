//! Information dynamics of coupled stochastic processes.
//!
//! The crate provides:
//!
//! - time-series containers, delay embeddings and rolling windows
//!   ([`series`]);
//! - the numeric kernels behind everything else: digamma, Chebyshev-metric
//!   k-NN search, seeded random streams and 1-d quadrature ([`kernels`]);
//! - KSG (Kraskov–Stögbauer–Grassberger) and linear-Gaussian estimators of
//!   transfer entropy, active information storage, multi-information and
//!   their conditional / collective / local variants ([`estimators`]);
//! - surrogate significance testing, Benjamini–Yekutieli FDR control, KSG
//!   bias diagnostics and stationarity / distribution tests ([`inference`]);
//! - generative models: a coupled auto-regressive regime-shift model and a
//!   GARCH-spread model, with closed-form moment analysis and
//!   numerically-integrated transfer-entropy oracles ([`models`]);
//! - ingestion and alignment of trades / order-book snapshots into
//!   microstructure observables ([`micro`]);
//! - system-level aggregation of windowed results into totals, regime
//!   tables and an observable multigraph ([`aggregate`]);
//! - the end-to-end windowed analysis pipeline driven from a JSON config
//!   ([`pipeline`]).

pub mod aggregate;
pub mod error;
pub mod estimators;
pub mod inference;
pub mod io;
pub mod kernels;
pub mod micro;
pub mod models;
pub mod pipeline;
pub mod series;

pub use error::{Error, Result};
