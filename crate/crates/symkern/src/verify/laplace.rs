use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub const DEFAULT_ORDER: usize = 14;
/// Orders compared by the stability diagnostic.
pub const CHECK_ORDERS: (usize, usize) = (12, 16);
pub const CHECK_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Inversion {
    pub value: f64,
    /// Relative spread between the two diagnostic orders.
    pub spread: f64,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Stehfest weights V_1..V_n for even n.
pub fn stehfest_weights(n: usize) -> Vec<f64> {
    let h = n / 2;
    (1..=n)
        .map(|k| {
            let mut s = 0.0;
            for j in k.div_ceil(2)..=k.min(h) {
                s += (j as f64).powi(h as i32) * factorial(2 * j)
                    / (factorial(h - j) * factorial(j) * factorial(j - 1) * factorial(k - j) * factorial(2 * j - k));
            }
            if (k + h).is_multiple_of(2) {
                s
            } else {
                -s
            }
        })
        .collect()
}

fn gs_sum<F: Fn(f64) -> f64>(phi: &F, y: f64, n: usize) -> f64 {
    let a = LN_2 / y;
    stehfest_weights(n).iter().enumerate().map(|(i, v)| v * phi((i + 1) as f64 * a)).sum::<f64>() * a
}

/// Unchecked Gaver-Stehfest estimate at one order.
pub fn gaver_stehfest<F: Fn(f64) -> f64>(phi: F, y: f64, order: usize) -> Result<f64> {
    if !(y > 0.0) {
        return domain(format!("inversion point must be positive, got {y}"));
    }
    if order < 2 || order % 2 == 1 || order > 30 {
        return domain(format!("Stehfest order must be even in 2..=30, got {order}"));
    }
    Ok(gs_sum(&phi, y, order))
}

/// Relative spread between the two diagnostic orders.
pub fn order_spread<F: Fn(f64) -> f64>(phi: F, y: f64) -> f64 {
    let lo = gs_sum(&phi, y, CHECK_ORDERS.0);
    let hi = gs_sum(&phi, y, CHECK_ORDERS.1);
    (lo - hi).abs() / lo.abs().max(hi.abs()).max(1e-300)
}

/// Gaver-Stehfest inversion of phi at y, with the order-12/16 stability check.
pub fn laplace_invert<F: Fn(f64) -> f64>(phi: F, y: f64, order: usize) -> Result<Inversion> {
    if !(y > 0.0) {
        return domain(format!("inversion point must be positive, got {y}"));
    }
    if order < 2 || order % 2 == 1 || order > 30 {
        return domain(format!("Stehfest order must be even in 2..=30, got {order}"));
    }
    let value = gs_sum(&phi, y, order);
    let spread = order_spread(&phi, y);
    if !value.is_finite() || spread > CHECK_TOL {
        return Err(Error::Instability(format!(
            "orders {} and {} differ by {spread:e} at y = {y}",
            CHECK_ORDERS.0, CHECK_ORDERS.1
        )));
    }
    Ok(Inversion { value, spread })
}
