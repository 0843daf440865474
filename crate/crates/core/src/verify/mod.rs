//! Numerical checks of the functional equations.
//!
//! Exact identities (Radchenko-Zagier, the complement sum) report the raw
//! residual. Congruences mod `zeta(2)` report the nearest integer multiple
//! `k` and the excess `|residual - k zeta(2)|`; `k` is an output, never assumed.

mod checks;
mod grid;
mod report;

pub use checks::{Verifier, ARG_EXCLUSION};
pub use grid::{five_term_samples, GridRun, GridSpec};
pub use report::{
    nearest_zeta2_multiple, CheckReport, Identity, Params, ReportFile, SkippedPoint, Tolerances,
    SCHEMA_VERSION,
};
