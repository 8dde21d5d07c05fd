use std::sync::Arc;

use super::util::{coth, get, ln_i, ln_sinh, need, pol};
use super::{check_tx, check_txy, Model, Params};
use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};
use crate::specfun::{erf, gamma_ln, hypergeom_1f1};

/// BESQ(n) killed at rate mu/x + b^2 x/2.
#[derive(Debug, Clone, Copy)]
pub struct Besq {
    pub n: f64,
    pub mu: f64,
    pub b: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(Besq::new(get(p, "n"), get(p, "mu"), get(p, "b"))?))
}

impl Besq {
    pub fn new(n: f64, mu: f64, b: f64) -> Result<Self> {
        need(n >= 2.0, "n >= 2")?;
        need(mu >= 0.0, "mu >= 0")?;
        need(b >= 0.0, "b >= 0")?;
        Ok(Besq { n, mu, b })
    }

    /// Bessel index sqrt((n-2)^2 + 8 mu)/2.
    pub fn index(&self) -> f64 {
        ((self.n - 2.0).powi(2) + 8.0 * self.mu).sqrt() / 2.0
    }

    /// Exponent of the stationary solution x^d.
    pub fn d(&self) -> f64 {
        (2.0 - self.n + ((self.n - 2.0).powi(2) + 8.0 * self.mu).sqrt()) / 4.0
    }
}

impl Model for Besq {
    fn diffusion(&self) -> DiffusionSpec {
        let n = self.n;
        DiffusionSpec::new("besq", 1.0, 2.0, move |_| n, move |x: f64| n * x.ln()).with_derivative(|_| 0.0)
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::inverse_plus_linear(self.mu, 0.5 * self.b * self.b)
    }

    fn riccati(&self) -> RiccatiParams {
        let c = self.n * self.n / 2.0 - 2.0 * self.n + 4.0 * self.mu;
        if self.b == 0.0 {
            RiccatiParams::linear(0.0, c)
        } else {
            RiccatiParams::quadratic(4.0 * self.b * self.b, 0.0, c)
        }
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let nu = self.index();
        let lr = (self.n - 2.0) / 4.0 * (y / x).ln();
        if self.b == 0.0 {
            Ok(-(2.0 * t).ln() + lr - (x + y) / (2.0 * t) + ln_i(nu, (x * y).sqrt() / t)?)
        } else {
            let b = self.b;
            let bt = b * t;
            Ok((b / 2.0).ln() - ln_sinh(bt) + lr - b * (x + y) * coth(bt) / 2.0
                + ln_i(nu, b * (x * y).sqrt() / bt.sinh())?)
        }
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0 && self.b == 0.0
    }

    fn stationary(&self, y: f64) -> f64 {
        y.powf(self.d())
    }

    fn stationary_at_zero(&self) -> (f64, f64) {
        (if self.d() == 0.0 { 1.0 } else { 0.0 }, 0.0)
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        if self.b != 0.0 {
            return Err(crate::Error::Capability("transform identity needs b = 0".into()));
        }
        let q = 1.0 + 2.0 * lambda * t;
        if !(q > 0.0) {
            return domain(format!("1 + 2 lambda t = {q} <= 0"));
        }
        let d = self.d();
        Ok((d * x.ln() - (2.0 * d + self.n / 2.0) * q.ln() - lambda * x / q).exp())
    }

    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        Some(self.closed(lambda, t, x))
    }

    fn power_at_zero(&self) -> Option<f64> {
        Some((self.n - 2.0) / 4.0 + self.index() / 2.0)
    }
}

impl Besq {
    fn closed(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        if self.b == 0.0 {
            let q = 1.0 + 2.0 * lambda * t;
            if !(q > 0.0) {
                return domain(format!("1 + 2 lambda t = {q} <= 0"));
            }
            let d = self.d();
            let al = d + self.n / 2.0;
            let be = 2.0 * d + self.n / 2.0;
            let z = x / (2.0 * t * q);
            let f = hypergeom_1f1(al, be, z, &pol())?;
            return Ok((-x / (2.0 * t) + d * (x / (2.0 * t)).ln() + gamma_ln(al)? - gamma_ln(be)? - al * q.ln()
                + f.ln())
            .exp());
        }
        if self.mu == 0.0 {
            return killed_linear_expectation(self.n, self.b, lambda, t, x);
        }
        // both killing terms
        let (n, b) = (self.n, self.b);
        let a = 2.0 * self.index();
        let de = (2.0 + a + n) / 4.0;
        let ga = (2.0 + a - n) / 4.0;
        let be = (a + 2.0) / 2.0;
        let bt = b * t;
        let den = bt.cosh() + 2.0 * lambda / b * bt.sinh();
        if !(den > 0.0) {
            return domain(format!("cosh(bt) + 2 lambda sinh(bt)/b = {den} <= 0"));
        }
        let z = b * b * x / (bt.sinh() * (2.0 * b * bt.cosh() + 4.0 * lambda * bt.sinh()));
        let f = hypergeom_1f1(de, be, z, &pol())?;
        // (e^{2bt} - 1) = 2 e^{bt} sinh(bt)
        let ln_e2 = std::f64::consts::LN_2 + bt + ln_sinh(bt);
        Ok((-b * x * coth(bt) / 2.0 + gamma_ln(de)? - gamma_ln(be)? + ga * b.ln() + ga * (x.ln() + bt)
            - ga * ln_e2
            - de * den.ln()
            + f.ln())
        .exp())
    }
}

/// E_x[exp(-lambda X_t - (b^2/2) int X)] for BESQ(n).
pub fn killed_linear_expectation(n: f64, b: f64, lambda: f64, t: f64, x: f64) -> Result<f64> {
    check_tx(t, x)?;
    if !(b > 0.0) {
        let q = 1.0 + 2.0 * lambda * t;
        if !(q > 0.0) {
            return domain(format!("1 + 2 lambda t = {q} <= 0"));
        }
        return Ok((-n / 2.0 * q.ln() - lambda * x / q).exp());
    }
    let bt = b * t;
    let c = coth(bt);
    let r = 2.0 * lambda / b;
    let den = bt.cosh() + r * bt.sinh();
    if !(den > 0.0) {
        return domain(format!("cosh(bt) + 2 lambda sinh(bt)/b = {den} <= 0"));
    }
    Ok((-(x * b / 2.0) * (1.0 + r * c) / (c + r) - n / 2.0 * den.ln()).exp())
}

/// The second fundamental solution of BESQ(3), with a cosh kernel; not a transition density.
pub fn cosh_solution(t: f64, x: f64, y: f64) -> Result<f64> {
    check_txy(t, x, y)?;
    let z = (x * y).sqrt() / t;
    // cosh(z) e^{-(x+y)/2t} = (e^{z - (x+y)/2t} + e^{-z - (x+y)/2t})/2, both exponents <= 0
    let e = -(x + y) / (2.0 * t);
    Ok(((z + e).exp() + (-z + e).exp()) / 2.0 / (2.0 * std::f64::consts::PI * t * x).sqrt())
}

/// Mass of the cosh kernel: sqrt(2t/(pi x)) e^{-x/2t} + erf(sqrt(x/2t)).
pub fn cosh_solution_mass(t: f64, x: f64) -> Result<f64> {
    check_tx(t, x)?;
    Ok((2.0 * t / (std::f64::consts::PI * x)).sqrt() * (-x / (2.0 * t)).exp() + erf((x / (2.0 * t)).sqrt()))
}

/// Integral of y^{-1/2} e^{-lambda y} against the cosh kernel.
pub fn cosh_transform_rhs(lambda: f64, t: f64, x: f64) -> Result<f64> {
    check_tx(t, x)?;
    let q = 1.0 + 2.0 * lambda * t;
    if !(q > 0.0) {
        return domain(format!("1 + 2 lambda t = {q} <= 0"));
    }
    Ok((x * q).powf(-0.5) * (-lambda * x / q).exp())
}
