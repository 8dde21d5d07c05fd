use std::sync::Arc;

use super::util::{get, ln_i, need};
use super::{check_tx, check_txy, Atom, Model, Params};
use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};

/// Drift 3 - 4b/(b + a x^2), sigma = 1. The continuous kernel r carries only part of the
/// mass; the rest sits in a delta and a delta' at 0, which are structural and are never
/// read as probabilities.
#[derive(Debug, Clone, Copy)]
pub struct Showcase {
    pub a: f64,
    pub b: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(Showcase::new(get(p, "a"), get(p, "b"))?))
}

impl Showcase {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        need(a > 0.0, "a > 0")?;
        need(b > 0.0, "b > 0")?;
        Ok(Showcase { a, b })
    }

    /// 1 - e^{-x/t} b (t + x)/(t (b + a x^2)), the mass of the continuous part.
    pub fn continuous_mass(&self, t: f64, x: f64) -> f64 {
        1.0 - (-x / t).exp() * self.b * (t + x) / (t * (self.b + self.a * x * x))
    }
}

impl Model for Showcase {
    fn diffusion(&self) -> DiffusionSpec {
        let (a, b) = (self.a, self.b);
        DiffusionSpec::new(
            "showcase",
            1.0,
            1.0,
            move |x| 3.0 - 4.0 * b / (b + a * x * x),
            move |x: f64| -x.ln() + 2.0 * (b + a * x * x).ln(),
        )
        .with_derivative(move |x| 8.0 * a * b * x / (b + a * x * x).powi(2))
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::zero()
    }

    fn riccati(&self) -> RiccatiParams {
        RiccatiParams::linear(0.0, 1.5)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let (a, b) = (self.a, self.b);
        Ok((x / (y * t)).ln() + ((b + a * y * y) / (b + a * x * x)).ln() - (x + y) / t
            + ln_i(2.0, 2.0 * (x * y).sqrt() / t)?)
    }

    fn atoms(&self, t: f64, x: f64) -> Result<Vec<Atom>> {
        check_tx(t, x)?;
        let (a, b) = (self.a, self.b);
        let w = (-x / t).exp() / (b + a * x * x);
        Ok(vec![Atom::mass(b * (x + t) / t * w), Atom::dipole(b * t * w)])
    }

    fn conserves_mass(&self) -> bool {
        true
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        let q = 1.0 + lambda * t;
        if !(q > 0.0) {
            return domain(format!("1 + lambda t = {q} <= 0"));
        }
        let (a, b) = (self.a, self.b);
        Ok((a * x * x + b * q.powi(4)) / ((b + a * x * x) * q.powi(3)) * (-lambda * x / q).exp())
    }

    fn power_at_zero(&self) -> Option<f64> {
        None
    }
}
