use std::sync::Arc;

use super::generic::ln_quadratic_kernel;
use super::util::{coth, get, ln_bessel_laplace, need};
use super::{check_tx, check_txy, Model, Params};
use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};
use crate::specfun::{gamma_ln, whittaker_m};

/// CIR process dX = (a - bX) dt + sqrt(2 sigma X) dW killed at rate mu/x + kappa x.
#[derive(Debug, Clone, Copy)]
pub struct Cir {
    pub a: f64,
    pub b: f64,
    pub sigma: f64,
    pub mu: f64,
    pub kappa: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(Cir::new(get(p, "a"), get(p, "b"), get(p, "sigma"), get(p, "mu"), get(p, "kappa"))?))
}

impl Cir {
    pub fn new(a: f64, b: f64, sigma: f64, mu: f64, kappa: f64) -> Result<Self> {
        need(a > 0.0, "a > 0")?;
        need(b > 0.0, "b > 0")?;
        need(sigma > 0.0, "sigma > 0")?;
        need(mu >= 0.0, "mu >= 0")?;
        need(kappa >= 0.0, "kappa >= 0")?;
        Ok(Cir { a, b, sigma, mu, kappa })
    }

    pub fn big_a(&self) -> f64 {
        self.b * self.b + 4.0 * self.kappa * self.sigma
    }

    /// Bessel index sqrt((a - sigma)^2 + 4 mu sigma)/sigma.
    pub fn nu(&self) -> f64 {
        ((self.a - self.sigma).powi(2) + 4.0 * self.mu * self.sigma).sqrt() / self.sigma
    }

    fn f(&self, x: f64) -> f64 {
        self.a * x.ln() - self.b * x
    }

    /// The Whittaker-M closed form with the sqrt(A) generalisation of the coth terms.
    pub fn whittaker_expectation(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        let s = self.sigma;
        let ra = self.big_a().sqrt();
        let h = ra * t / 2.0;
        let k = self.a / (2.0 * s);
        let nu = self.nu();
        let al = lambda + (self.b + ra * coth(h)) / (2.0 * s);
        if !(al > 0.0) {
            return domain(format!("lambda + (b + sqrt(A) coth)/(2 sigma) = {al} <= 0"));
        }
        let be = ra * x.sqrt() / (2.0 * s * h.sinh());
        let z = be * be / al;
        let m = whittaker_m(-k, nu / 2.0, z, &super::util::pol())?;
        let pre = -k * x.ln()
            + (self.b * x + self.a * self.b * t - ra * x * coth(h)) / (2.0 * s)
            + gamma_ln(k + nu / 2.0 + 0.5)?
            - gamma_ln(nu + 1.0)?
            + z / 2.0
            - k * al.ln();
        Ok(pre.exp() * m)
    }

    /// The same integral through the 1F1 form, safe when the Whittaker factor overflows.
    pub fn log_expectation(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        let s = self.sigma;
        let ra = self.big_a().sqrt();
        let h = ra * t / 2.0;
        let k = self.a / (2.0 * s);
        let al = lambda + (self.b + ra * coth(h)) / (2.0 * s);
        if !(al > 0.0) {
            return domain(format!("lambda + (b + sqrt(A) coth)/(2 sigma) = {al} <= 0"));
        }
        let c = ra * (x).sqrt() / (s * h.sinh());
        // kernel = pre(x) y^{k - 1/2} e^{-al y} I_nu(c sqrt y)
        let pre = (ra / (2.0 * s)).ln() - super::util::ln_sinh(h)
            + (0.5 - k) * x.ln()
            + (self.b * x + self.a * self.b * t - ra * x * coth(h)) / (2.0 * s);
        Ok(pre + ln_bessel_laplace(k, self.nu() / 2.0, al, c / 2.0)?)
    }
}

impl Model for Cir {
    fn diffusion(&self) -> DiffusionSpec {
        let (a, b) = (self.a, self.b);
        DiffusionSpec::new("cir", 1.0, self.sigma, move |x| a - b * x, move |x: f64| a * x.ln() - b * x)
            .with_derivative(move |_| -b)
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::inverse_plus_linear(self.mu, self.kappa)
    }

    fn riccati(&self) -> RiccatiParams {
        let (a, s) = (self.a, self.sigma);
        RiccatiParams::quadratic(self.big_a(), -a * self.b, a * a / 2.0 - a * s + 2.0 * s * self.mu)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let ra = self.big_a().sqrt();
        ln_quadratic_kernel(ra, -self.a * self.b, self.nu(), self.sigma, self.f(y) - self.f(x), t, x, y)
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0 && self.kappa == 0.0
    }

    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        Some(match self.whittaker_expectation(lambda, t, x) {
            Err(crate::Error::Overflow(_)) => self.log_expectation(lambda, t, x).map(f64::exp),
            Ok(v) if !v.is_finite() => self.log_expectation(lambda, t, x).map(f64::exp),
            other => other,
        })
    }

    fn power_at_zero(&self) -> Option<f64> {
        Some(-0.5 + self.a / (2.0 * self.sigma) + self.nu() / 2.0)
    }
}

/// E_x[exp(-lambda X_t - kappa int X)] for CIR without the 1/x killing, from the affine
/// (bond-price) Riccati solution.
pub fn affine_expectation(a: f64, b: f64, sigma: f64, kappa: f64, lambda: f64, t: f64, x: f64) -> Result<f64> {
    check_tx(t, x)?;
    let r = (b * b + 4.0 * kappa * sigma).sqrt();
    let h = r * t / 2.0;
    let den = r * h.cosh() + (b + 2.0 * sigma * lambda) * h.sinh();
    if !(den > 0.0) {
        return domain(format!("affine denominator {den} <= 0"));
    }
    let psi = (2.0 * kappa * h.sinh() + lambda * (r * h.cosh() - b * h.sinh())) / den;
    let phi = -(a / sigma) * (r.ln() + b * t / 2.0 - den.ln());
    Ok((-psi * x - phi).exp())
}
