use std::sync::Arc;

use super::util::{get, ln_i, need, pol};
use super::{check_tx, check_txy, Model, Params};
use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};
use crate::specfun::{bessel_i_scaled, gamma_ln};
use crate::verify::{integrate_semi_infinite_hinted, Hints, QuadratureSpec};

/// Bessel process with drift a/x (generator u''/2 + (a/x) u'), killed at rate mu/(4x^2).
#[derive(Debug, Clone, Copy)]
pub struct Bessel {
    pub a: f64,
    pub mu: f64,
}

pub(super) fn build_bessel(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(Bessel::new(get(p, "a"), get(p, "mu"))?))
}

impl Bessel {
    pub fn new(a: f64, mu: f64) -> Result<Self> {
        need(a > 0.5, "a > 1/2")?;
        need(mu >= 0.0, "mu >= 0")?;
        Ok(Bessel { a, mu })
    }

    /// Stationary exponent d, u0 = x^d.
    pub fn d(&self) -> f64 {
        0.5 - self.a + (self.mu / 2.0 + (self.a - 0.5).powi(2)).sqrt()
    }

    /// nu = d + a + 1/2; the kernel uses I_{nu - 1}.
    pub fn nu(&self) -> f64 {
        self.d() + self.a + 0.5
    }
}

impl Model for Bessel {
    fn diffusion(&self) -> DiffusionSpec {
        let a = self.a;
        DiffusionSpec::new("bessel", 0.0, 0.5, move |x| a / x, move |x: f64| a * x.ln())
            .with_derivative(move |x| -a / (x * x))
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::power(self.mu / 4.0, -2.0)
    }

    fn riccati(&self) -> RiccatiParams {
        let a = self.a;
        RiccatiParams::linear(0.0, a * a / 2.0 - a / 2.0 + self.mu / 4.0)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        Ok((y / t).ln() + (self.a - 0.5) * (y / x).ln() - (x * x + y * y) / (2.0 * t)
            + ln_i(self.nu() - 1.0, x * y / t)?)
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0
    }

    fn test_power(&self) -> f64 {
        2.0
    }

    fn stationary(&self, y: f64) -> f64 {
        y.powf(self.d())
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        let q = 1.0 + 2.0 * lambda * t;
        if !(q > 0.0) {
            return domain(format!("1 + 2 lambda t = {q} <= 0"));
        }
        Ok((self.d() * x.ln() - self.nu() * q.ln() - lambda * x * x / q).exp())
    }

    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        Some((|| {
            check_tx(t, x)?;
            let q = 1.0 + 2.0 * lambda * t;
            if !(q > 0.0) {
                return domain(format!("1 + 2 lambda t = {q} <= 0"));
            }
            let (a, nu) = (self.a, self.nu());
            let al = (1.0 + 2.0 * a + 2.0 * nu) / 4.0;
            let z = x * x / (2.0 * t * q);
            let f = crate::specfun::hypergeom_1f1(al, nu, z, &pol())?;
            Ok((-x * x / (2.0 * t) + (2.0 * nu - 2.0 * a - 1.0) / 4.0 * (x * x / (2.0 * t)).ln() + gamma_ln(al)?
                - gamma_ln(nu)?
                - al * q.ln()
                + f.ln())
            .exp())
        })())
    }

    fn power_at_zero(&self) -> Option<f64> {
        Some(self.a - 0.5 + self.nu())
    }

    fn hints(&self, t: f64, x: f64) -> Hints {
        bessel_hints(t, x, self.power_at_zero())
    }
}

fn bessel_hints(t: f64, x: f64, s: Option<f64>) -> Hints {
    let w = t.sqrt();
    let mut pts = vec![0.5 * x, x, 2.0 * x, x + 3.0 * w, x + 6.0 * w, x + 10.0 * w];
    pts.retain(|p| *p > 0.0);
    let h = Hints::at(&pts);
    match s {
        Some(s) if s != s.round() => h.singular(s),
        _ => h,
    }
}

/// The integral representation of E[exp(-lambda X_t^2 - (mu^2/2) int X^{-2})] for the
/// Bessel process of index xi (drift (xi + 1/2)/x), evaluated by quadrature in v.
pub fn alt_representation(xi: f64, mu: f64, lambda: f64, t: f64, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_tx(t, x)?;
    let g = (xi * xi + mu * mu).sqrt();
    let p = (g - xi) / 2.0;
    let kern = |v: f64| {
        let q = 1.0 + 2.0 * (v + lambda) * t;
        (-x * x * (v + lambda) / q).exp() * q.powf(-(1.0 + g))
    };
    if p == 0.0 {
        return Ok(kern(0.0));
    }
    if !(1.0 + 2.0 * lambda * t > 0.0) {
        return domain("1 + 2 lambda t <= 0");
    }
    let hints = Hints::at(&[0.5, 1.0, 4.0]).singular(p - 1.0);
    let int = integrate_semi_infinite_hinted(|v| if v > 0.0 { v.powf(p - 1.0) * kern(v) } else { 0.0 }, &hints, spec)?;
    Ok(x.powf(g - xi) * int * (-gamma_ln(p)?).exp())
}

/// Bessel process of index a with drift b I_a'(bx)/I_a(bx) (a Doob transform), killed at rate mu/x^2.
#[derive(Debug, Clone, Copy)]
pub struct PitmanYor {
    pub a: f64,
    pub b: f64,
    pub mu: f64,
}

pub(super) fn build_pitman_yor(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(PitmanYor::new(get(p, "a"), get(p, "b"), get(p, "mu"))?))
}

// ln I_a(z) and I_{a+1}(z)/I_a(z)
fn ln_i_and_ratio(a: f64, z: f64) -> (f64, f64) {
    let p = pol();
    let i0 = bessel_i_scaled(a, z, &p).unwrap_or(f64::NAN);
    let i1 = bessel_i_scaled(a + 1.0, z, &p).unwrap_or(f64::NAN);
    (i0.ln() + z, i1 / i0)
}

impl PitmanYor {
    pub fn new(a: f64, b: f64, mu: f64) -> Result<Self> {
        need(a > -1.0, "a > -1")?;
        need(b > 0.0, "b > 0")?;
        need(mu >= 0.0, "mu >= 0")?;
        Ok(PitmanYor { a, b, mu })
    }

    pub fn nu(&self) -> f64 {
        (self.a * self.a + 2.0 * self.mu).sqrt()
    }
}

impl Model for PitmanYor {
    fn diffusion(&self) -> DiffusionSpec {
        let (a, b) = (self.a, self.b);
        // f = 1/(2x) + b I_a'(bx)/I_a(bx) = (a + 1/2)/x + b I_{a+1}(bx)/I_a(bx)
        DiffusionSpec::new(
            "pitman-yor",
            0.0,
            0.5,
            move |x| (a + 0.5) / x + b * ln_i_and_ratio(a, b * x).1,
            move |x: f64| 0.5 * x.ln() + ln_i_and_ratio(a, b * x).0,
        )
        // r = I_{a+1}/I_a has r'(z) = 1 - (2a + 1) r/z - r^2
        .with_derivative(move |x| {
            let z = b * x;
            let r = ln_i_and_ratio(a, z).1;
            -(a + 0.5) / (x * x) + b * b * (1.0 - (2.0 * a + 1.0) * r / z - r * r)
        })
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::power(self.mu, -2.0)
    }

    fn riccati(&self) -> RiccatiParams {
        RiccatiParams::linear(self.b * self.b / 2.0, (self.a * self.a + 2.0 * self.mu - 0.25) / 2.0)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let (a, b) = (self.a, self.b);
        Ok(y.ln() - t.ln() + ln_i(a, b * y)? - ln_i(a, b * x)? - (x * x + y * y) / (2.0 * t) - b * b * t / 2.0
            + ln_i(self.nu(), x * y / t)?)
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0
    }

    fn test_power(&self) -> f64 {
        2.0
    }

    fn stationary(&self, y: f64) -> f64 {
        let (a, b) = (self.a, self.b);
        (ln_i(self.nu(), b * y).unwrap_or(f64::NAN) - ln_i(a, b * y).unwrap_or(f64::NAN)).exp()
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        let q = 1.0 + 2.0 * lambda * t;
        if !(q > 0.0) {
            return domain(format!("1 + 2 lambda t = {q} <= 0"));
        }
        let b = self.b;
        Ok((-lambda * (b * b * t * t + x * x) / q + ln_i(self.nu(), b * x / q)? - q.ln() - ln_i(self.a, b * x)?).exp())
    }

    fn power_at_zero(&self) -> Option<f64> {
        Some(1.0 + self.a + self.nu())
    }

    fn hints(&self, t: f64, x: f64) -> Hints {
        let mut h = bessel_hints(t, x, self.power_at_zero());
        // the drift pushes mass out by about b t
        h.breakpoints.push(x + self.b * t);
        h.breakpoints.push(x + self.b * t + 6.0 * t.sqrt());
        h
    }
}
