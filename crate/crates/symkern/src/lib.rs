//! Closed-form fundamental solutions and Feynman-Kac expectations for
//! one-dimensional diffusions `u_t = sigma x^gamma u_xx + f(x) u_x - g(x) u`,
//! with an independent numerical harness to check them.

pub mod catalog;
pub mod error;
pub mod riccati;
pub mod specfun;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
