use std::sync::Arc;

use super::util::{coth, get, ln_i, ln_sinh, need};
use super::{check_tx, check_txy, Model, Params};
use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};
use crate::verify::Hints;

/// Radial Ornstein-Uhlenbeck, generator u'' + (a/x + bx) u', killed at rate mu x^2.
#[derive(Debug, Clone, Copy)]
pub struct RadialOu {
    pub a: f64,
    pub b: f64,
    pub mu: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(RadialOu::new(get(p, "a"), get(p, "b"), get(p, "mu"))?))
}

impl RadialOu {
    pub fn new(a: f64, b: f64, mu: f64) -> Result<Self> {
        need(a > -1.0, "a > -1")?;
        need(b * b + 4.0 * mu > 0.0, "b^2 + 4 mu > 0")?;
        Ok(RadialOu { a, b, mu })
    }

    pub fn alpha(&self) -> f64 {
        (self.b * self.b + 4.0 * self.mu).sqrt()
    }

    pub fn nu(&self) -> f64 {
        (self.a + 1.0) / 2.0
    }
}

impl Model for RadialOu {
    fn diffusion(&self) -> DiffusionSpec {
        let (a, b) = (self.a, self.b);
        DiffusionSpec::new("radial-ou", 0.0, 1.0, move |x| a / x + b * x, move |x: f64| a * x.ln() + b * x * x / 2.0)
            .with_derivative(move |x| -a / (x * x) + b)
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::power(self.mu, 2.0)
    }

    fn riccati(&self) -> RiccatiParams {
        let (a, b) = (self.a, self.b);
        RiccatiParams::quadratic(b * b + 4.0 * self.mu, b * (1.0 + a), a * a / 2.0 - a)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let (al, nu, b) = (self.alpha(), self.nu(), self.b);
        let at = al * t;
        Ok(y.ln() + (nu - 1.0) * (y / x).ln() + (al / 2.0).ln()
            - ln_sinh(at)
            - nu * b * t
            - al * (x * x + y * y) * coth(at) / 4.0
            - b / 4.0 * (x * x - y * y)
            + ln_i(nu - 1.0, al * x * y / (2.0 * at.sinh()))?)
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0
    }

    fn test_power(&self) -> f64 {
        2.0
    }

    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        Some((|| {
            check_tx(t, x)?;
            let (al, nu, b) = (self.alpha(), self.nu(), self.b);
            let at = al * t;
            let c = coth(at);
            let m = b - 4.0 * lambda;
            let den = at.cosh() - m * at.sinh() / al;
            if !(den > 0.0) {
                return domain(format!("cosh(alpha t) - (b - 4 lambda) sinh(alpha t)/alpha = {den} <= 0"));
            }
            Ok((-b * x * x / 4.0 + al * (al - m * c) * x * x / (4.0 * (m - al * c)) - nu * b * t - nu * den.ln()).exp())
        })())
    }

    fn power_at_zero(&self) -> Option<f64> {
        Some(self.a)
    }

    fn hints(&self, t: f64, x: f64) -> Hints {
        let w = (2.0 * t).sqrt();
        let mut pts = vec![0.5 * x, x, 2.0 * x, x + 3.0 * w, x + 6.0 * w, x + 10.0 * w];
        pts.retain(|p| *p > 0.0);
        let h = Hints::at(&pts);
        if self.a != self.a.round() {
            h.singular(self.a)
        } else {
            h
        }
    }
}
