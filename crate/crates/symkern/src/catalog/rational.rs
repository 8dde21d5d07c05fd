use std::sync::Arc;

use super::util::{get, ln_i, need, pol, sinhc};
use super::{check_tx, check_txy, Atom, Model, Params};
use crate::error::{domain, Error, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};
use crate::specfun::bessel_i_scaled;

/// Drift 2ax/(2 + ax) with sigma = 1, killed at rate mu x (with a point mass at 0) or
/// nu/x (finite-part kernel, no probabilistic reading).
#[derive(Debug, Clone, Copy)]
pub struct RationalDrift {
    pub a: f64,
    pub mu: f64,
    pub nu: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(RationalDrift::new(get(p, "a"), get(p, "mu"), get(p, "nu"))?))
}

impl RationalDrift {
    pub fn new(a: f64, mu: f64, nu: f64) -> Result<Self> {
        need(a > 0.0, "a > 0")?;
        need(mu >= 0.0, "mu >= 0")?;
        need(nu >= 0.0, "nu >= 0")?;
        need(mu == 0.0 || nu == 0.0, "mu = 0 or nu = 0")?;
        if nu > 0.0 {
            let s = (1.0 + 4.0 * nu).sqrt();
            if s == s.round() {
                return Err(Error::Capability(format!(
                    "sqrt(1 + 4 nu) = {s} is an integer; the finite-part kernel is not implemented there"
                )));
            }
        }
        Ok(RationalDrift { a, mu, nu })
    }

    fn r(&self) -> f64 {
        self.mu.sqrt()
    }

    /// Weight of the point mass at 0: 2 e^{-sqrt(mu) x coth(sqrt(mu) t)}/(2 + ax).
    pub fn atom_weight(&self, t: f64, x: f64) -> f64 {
        let r = self.r();
        2.0 * (-x * (r * t).cosh() / sinhc(r, t)).exp() / (2.0 + self.a * x)
    }

    fn finite_part_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        let s = (1.0 + 4.0 * self.nu).sqrt();
        let z = 2.0 * (x * y).sqrt() / t;
        let p = pol();
        let ip = bessel_i_scaled(s, z, &p)?;
        let im = bessel_i_scaled(-s, z, &p)?;
        let ys = y.powf(s);
        let bracket = (self.a * ys * ip + 2.0 * im) / (2.0 + self.a * ys);
        Ok((2.0 + self.a * y) / (2.0 + self.a * x) / t * (x / y).sqrt() * (z - (x + y) / t).exp() * bracket)
    }
}

impl Model for RationalDrift {
    fn diffusion(&self) -> DiffusionSpec {
        let a = self.a;
        DiffusionSpec::new(
            "rational-drift",
            1.0,
            1.0,
            move |x| 2.0 * a * x / (2.0 + a * x),
            move |x: f64| 2.0 * (2.0 + a * x).ln(),
        )
        .with_derivative(move |x| 4.0 * a / (2.0 + a * x).powi(2))
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::inverse_plus_linear(self.nu, self.mu)
    }

    fn riccati(&self) -> RiccatiParams {
        if self.mu > 0.0 {
            RiccatiParams::quadratic(4.0 * self.mu, 0.0, 2.0 * self.nu)
        } else {
            RiccatiParams::linear(0.0, 2.0 * self.nu)
        }
    }

    fn density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        if self.nu > 0.0 {
            return self.finite_part_density(t, x, y);
        }
        Ok(self.log_density(t, x, y)?.exp())
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        if self.nu > 0.0 {
            let v = self.finite_part_density(t, x, y)?;
            if !(v > 0.0) {
                return domain(format!("finite-part kernel is {v} at y = {y}; no logarithm"));
            }
            return Ok(v.ln());
        }
        let r = self.r();
        let sh = sinhc(r, t);
        let a = self.a;
        Ok(((2.0 + a * y) / (2.0 + a * x)).ln() - (x + y) * (r * t).cosh() / sh + 0.5 * (x / y).ln() - sh.ln()
            + ln_i(1.0, 2.0 * (x * y).sqrt() / sh)?)
    }

    fn atoms(&self, t: f64, x: f64) -> Result<Vec<Atom>> {
        check_tx(t, x)?;
        if self.nu > 0.0 {
            return Ok(Vec::new());
        }
        Ok(vec![Atom::mass(self.atom_weight(t, x))])
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0 && self.nu == 0.0
    }

    fn stationary(&self, y: f64) -> f64 {
        (-self.r() * y).exp() / (2.0 + self.a * y)
    }

    fn stationary_at_zero(&self) -> (f64, f64) {
        (0.5, -self.r() / 2.0 - self.a / 4.0)
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        if self.nu > 0.0 {
            return Err(Error::Capability("the finite-part kernel has no transform identity".into()));
        }
        let r = self.r();
        let e = (2.0 * r * t).exp();
        // (E - 1)/(2r) -> t as r -> 0
        let q = if r == 0.0 { t } else { (2.0 * r * t).exp_m1() / (2.0 * r) };
        let den = lambda * q + e;
        if !(den > 0.0) {
            return domain(format!("lambda (E-1)/(2r) + E = {den} <= 0"));
        }
        Ok((-r * x - lambda * x / den).exp() / (2.0 + self.a * x))
    }

    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        if self.nu > 0.0 {
            return Some(Err(Error::Capability("the 1/x-killed kernel is not integrable at 0; no expectation".into())));
        }
        Some((|| {
            check_tx(t, x)?;
            let r = self.r();
            let sh = sinhc(r, t);
            let al = lambda + (r * t).cosh() / sh;
            if !(al > 0.0) {
                return domain(format!("lambda + sqrt(mu) coth(sqrt(mu) t) = {al} <= 0"));
            }
            let a = self.a;
            Ok((-x * (r * t).cosh() / sh + x / (sh * sh * al)).exp() * (2.0 + a * x / (sh * al).powi(2))
                / (2.0 + a * x))
        })())
    }

    fn power_at_zero(&self) -> Option<f64> {
        None
    }
}
