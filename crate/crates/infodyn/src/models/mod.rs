//! Generative models: the coupled auto-regressive regime-shift model and
//! the GARCH-spread model, with closed-form moment analysis and
//! Monte-Carlo-integrated transfer-entropy oracles.

mod ensemble;
mod garch;
mod oracle;
mod var;

pub use ensemble::{run_regime_ensemble, EnsembleSummary, RegimeScenario, ScenarioKind};
pub use garch::{garch_moments, simulate_garch_spread, GarchMoments, GarchParams, GarchSpreadPath};
pub use oracle::{
    spread_conditional_density, theoretical_te_r_to_s, theoretical_te_s_to_r, OracleTe,
};
pub use var::{sigmoid, simulate_var, CouplingForm, Drive, SigmoidSpec, VarParams};

/// Steps discarded before a simulated trajectory is returned, so returned
/// samples come from the (locally) stationary regime.
pub const BURN_IN: usize = 1000;
