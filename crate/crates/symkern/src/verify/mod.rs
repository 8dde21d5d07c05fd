//! Independent numerical oracles: quadrature, Laplace inversion, the forward
//! Whittaker transform, Monte Carlo simulation and the identity checks built on them.

mod checks;
mod laplace;
mod mc;
mod quad;
mod report;
mod whittaker;

pub use checks::*;
pub use laplace::{
    gaver_stehfest, laplace_invert, order_spread, stehfest_weights, Inversion, CHECK_ORDERS, CHECK_TOL, DEFAULT_ORDER,
};
pub use mc::{mc_expectation, pairwise_sum, McEstimate, McSpec, Scheme, MAX_FAILURE_RATE, MIN_PATHS, X_FLOOR};
pub use quad::{integrate, integrate_semi_infinite, integrate_semi_infinite_hinted, Hints, QuadratureSpec};
pub use report::{fmt15, write_csv, ReportRow, VerificationReport};
pub use whittaker::whittaker_forward;
