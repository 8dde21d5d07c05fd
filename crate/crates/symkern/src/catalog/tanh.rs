use std::sync::Arc;

use super::util::{coth, get, ln_cosh, ln_i, ln_sinh, need};
use super::{check_tx, check_txy, Atom, Model, Params};
use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};

/// Drift 2x tanh x with sigma = 1, killed at rate mu x; point mass at 0.
#[derive(Debug, Clone, Copy)]
pub struct TanhDrift {
    pub mu: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(TanhDrift::new(get(p, "mu"))?))
}

impl TanhDrift {
    pub fn new(mu: f64) -> Result<Self> {
        need(mu > -1.0, "mu > -1")?;
        Ok(TanhDrift { mu })
    }

    pub fn k(&self) -> f64 {
        (1.0 + self.mu).sqrt()
    }

    /// sech(x) e^{-k x coth(kt)}
    pub fn atom_weight(&self, t: f64, x: f64) -> f64 {
        let k = self.k();
        (-ln_cosh(x) - k * x * coth(k * t)).exp()
    }
}

impl Model for TanhDrift {
    fn diffusion(&self) -> DiffusionSpec {
        DiffusionSpec::new("tanh-drift", 1.0, 1.0, |x: f64| 2.0 * x * x.tanh(), |x: f64| 2.0 * ln_cosh(x))
            .with_derivative(|x: f64| 2.0 * x.tanh() + 2.0 * x / x.cosh().powi(2))
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::power(self.mu, 1.0)
    }

    fn riccati(&self) -> RiccatiParams {
        RiccatiParams::quadratic(4.0 * (1.0 + self.mu), 0.0, 0.0)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let k = self.k();
        let kt = k * t;
        Ok(k.ln() - ln_sinh(kt) + 0.5 * (x / y).ln() + ln_cosh(y) - ln_cosh(x) - k * (x + y) * coth(kt)
            + ln_i(1.0, 2.0 * k * (x * y).sqrt() / kt.sinh())?)
    }

    fn atoms(&self, t: f64, x: f64) -> Result<Vec<Atom>> {
        check_tx(t, x)?;
        Ok(vec![Atom::mass(self.atom_weight(t, x))])
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0
    }

    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        Some((|| {
            check_tx(t, x)?;
            let k = self.k();
            let kt = k * t;
            let (c, s) = (kt.cosh(), kt.sinh());
            let (d1, d2) = (k * c + (lambda - 1.0) * s, k * c + (lambda + 1.0) * s);
            if !(d1 > 0.0 && d2 > 0.0) {
                return domain(format!("k cosh(kt) + (lambda - 1) sinh(kt) = {d1} <= 0"));
            }
            let base = -ln_cosh(x) - k * x * coth(kt);
            let e1 = k * k * x / (s * d1);
            let e2 = k * k * x / (s * d2);
            // U1 + (U1/2)(e^{e1} + e^{e2} - 2) = (U1/2)(e^{e1} + e^{e2})
            Ok(0.5 * ((base + e1).exp() + (base + e2).exp()))
        })())
    }

    fn power_at_zero(&self) -> Option<f64> {
        None
    }
}
