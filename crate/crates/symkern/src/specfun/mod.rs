//! Special functions on the real line: modified Bessel functions, confluent
//! hypergeometric and Whittaker functions, log-gamma and erf.

mod bessel;
mod gamma;
mod hyper;

use serde::{Deserialize, Serialize};

pub use bessel::{bessel_i, bessel_i_scaled, bessel_k, bessel_k_scaled, ln_bessel_i, ln_bessel_k};
pub use gamma::{erf, erfc, gamma, gamma_ln, gamma_ln_signed, rgamma};
pub use hyper::{hypergeom_1f1, tricomi_u, whittaker_m, whittaker_w};

/// Accuracy and truncation controls shared by the series evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalPolicy {
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Catalog formulas combine logarithms of Bessel factors instead of raw values.
    pub log_domain: bool,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        EvalPolicy { rel_tol: 1e-13, max_terms: 500, log_domain: true }
    }
}

impl EvalPolicy {
    pub fn validate(&self) -> crate::Result<()> {
        if !(self.rel_tol > 0.0) || self.max_terms < 1 {
            return crate::error::domain(format!("invalid policy {self:?}"));
        }
        Ok(())
    }
}
