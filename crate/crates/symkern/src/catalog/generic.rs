use std::sync::Arc;

use super::util::{coth, get, ln_i, ln_sinh, need};
use super::{check_tx, check_txy, Model, Params};
use crate::error::{domain, Error, Result};
use crate::riccati::{build_drift, DiffusionSpec, Family, PotentialSpec, RiccatiParams};
use crate::specfun::{bessel_i_scaled, EvalPolicy};

/// ln of the A > 0 kernel (gamma = 1)
/// sqrt(A)/(2 sigma sinh h) sqrt(x/y) e^{dF/(2 sigma) - Bt/(2 sigma) - sqrt(A)(x+y) coth h/(2 sigma)} I_nu(sqrt(Axy)/(sigma sinh h)),
/// h = sqrt(A) t/2, dF = F(y) - F(x).
#[allow(clippy::too_many_arguments)]
pub(crate) fn ln_quadratic_kernel(
    ra: f64,
    b: f64,
    nu: f64,
    sigma: f64,
    df: f64,
    t: f64,
    x: f64,
    y: f64,
) -> Result<f64> {
    let h = ra * t / 2.0;
    Ok((ra / (2.0 * sigma)).ln() - ln_sinh(h) + 0.5 * (x / y).ln() + df / (2.0 * sigma)
        - b * t / (2.0 * sigma)
        - ra * (x + y) * coth(h) / (2.0 * sigma)
        + ln_i(nu, ra * (x * y).sqrt() / (sigma * h.sinh()))?)
}

/// Fundamental solution for a gamma in {0, 1} pair in the quadratic family with A > 0.
/// gamma = 0 is handled through z = x^2, which maps it onto gamma = 1 with sigma' = 4 sigma.
#[derive(Clone)]
pub struct GenericQuadratic {
    diff: DiffusionSpec,
    pot: PotentialSpec,
    params: RiccatiParams,
}

impl std::fmt::Debug for GenericQuadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenericQuadratic").field("diff", &self.diff).field("params", &self.params).finish()
    }
}

pub(super) fn build_quadratic(p: &Params) -> Result<Arc<dyn Model>> {
    let (a, b, s, mu, kappa) = (get(p, "a"), get(p, "b"), get(p, "sigma"), get(p, "mu"), get(p, "kappa"));
    need(s > 0.0, "sigma > 0")?;
    let diff = DiffusionSpec::new("generic-apos", 1.0, s, move |x| a - b * x, move |x: f64| a * x.ln() - b * x)
        .with_derivative(move |_| -b);
    let pot = PotentialSpec::inverse_plus_linear(mu, kappa);
    let params = RiccatiParams::quadratic(b * b + 4.0 * kappa * s, -a * b, a * a / 2.0 - a * s + 2.0 * s * mu);
    Ok(Arc::new(GenericQuadratic::new(diff, pot, params)?))
}

impl GenericQuadratic {
    /// `params` are the constants of `sigma x h' - sigma h + h^2/2 + 2 sigma x^{2-gamma} g = A/2 x^{4-2gamma} + B x^{2-gamma} + C`.
    pub fn new(diff: DiffusionSpec, pot: PotentialSpec, params: RiccatiParams) -> Result<Self> {
        if params.family != Family::Quadratic {
            return Err(Error::Capability(format!("expected the quadratic family, got {:?}", params.family)));
        }
        if diff.gamma != 0.0 && diff.gamma != 1.0 {
            return Err(Error::Capability(format!(
                "A > 0 kernels are implemented for gamma 0 and 1, got {}",
                diff.gamma
            )));
        }
        need(params.a > 0.0, "A > 0")?;
        need(diff.sigma > 0.0, "sigma > 0")?;
        let s1 = if diff.gamma == 0.0 { 4.0 * diff.sigma } else { diff.sigma };
        need(s1 * s1 + 2.0 * mapped_c(&diff, &params) >= 0.0, "sigma^2 + 2C >= 0")?;
        Ok(GenericQuadratic { diff, pot, params })
    }

    /// Classify the pair with the least-squares fit, then build.
    pub fn classify(diff: DiffusionSpec, pot: PotentialSpec) -> Result<Self> {
        let grid: Vec<f64> = (0..40).map(|i| 1e-2 * 1e4f64.powf(i as f64 / 39.0)).collect();
        let params = crate::riccati::fit_riccati(&diff, &pot, &grid)?
            .ok_or_else(|| Error::Construction("pair satisfies none of the drift equations".into()))?;
        Self::new(diff, pot, params)
    }

    /// gamma = 1 constants (sqrt(A), B, nu, sigma) after the change of variable.
    fn mapped(&self) -> (f64, f64, f64, f64) {
        let p = &self.params;
        let (ra, b, s) = if self.diff.gamma == 0.0 {
            (2.0 * p.a.sqrt(), 4.0 * p.b, 4.0 * self.diff.sigma)
        } else {
            (p.a.sqrt(), p.b, self.diff.sigma)
        };
        let c = mapped_c(&self.diff, p);
        (ra, b, (s * s + 2.0 * c).sqrt() / s, s)
    }

    fn antiderivative_mapped(&self, z: f64) -> f64 {
        if self.diff.gamma == 0.0 {
            2.0 * self.diff.sigma * z.ln() + 4.0 * self.diff.antiderivative(z.sqrt())
        } else {
            self.diff.antiderivative(z)
        }
    }
}

// With z = x^2, sigma' = 4 sigma and h_z = 2 sigma + 2 x f(x), the h-form becomes
// Q_z = 4 Q_x - 6 sigma^2, so (A, B, C) map to (4A, 4B, 4C - 6 sigma^2).
fn mapped_c(diff: &DiffusionSpec, p: &RiccatiParams) -> f64 {
    if diff.gamma == 1.0 {
        p.c
    } else {
        4.0 * p.c - 6.0 * diff.sigma * diff.sigma
    }
}

impl Model for GenericQuadratic {
    fn diffusion(&self) -> DiffusionSpec {
        self.diff.clone()
    }

    fn potential(&self) -> PotentialSpec {
        self.pot.clone()
    }

    fn riccati(&self) -> RiccatiParams {
        self.params
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let (ra, b, nu, s) = self.mapped();
        if self.diff.gamma == 0.0 {
            let (zx, zy) = (x * x, y * y);
            let df = self.antiderivative_mapped(zy) - self.antiderivative_mapped(zx);
            return Ok((2.0 * y).ln() + ln_quadratic_kernel(ra, b, nu, s, df, t, zx, zy)?);
        }
        let df = self.diff.antiderivative(y) - self.diff.antiderivative(x);
        ln_quadratic_kernel(ra, b, nu, s, df, t, x, y)
    }

    fn conserves_mass(&self) -> bool {
        self.pot.is_zero()
    }

    fn test_power(&self) -> f64 {
        if self.diff.gamma == 0.0 {
            2.0
        } else {
            1.0
        }
    }
}

/// Fundamental solution for gamma = 1 drifts solving `sigma x f' - sigma f + f^2/2 = A x + B`,
/// killed at rate mu/x, in terms of the drift's antiderivative F.
#[derive(Clone)]
pub struct GenericLinear {
    diff: DiffusionSpec,
    a: f64,
    b: f64,
    mu: f64,
}

impl std::fmt::Debug for GenericLinear {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenericLinear").field("a", &self.a).field("b", &self.b).field("mu", &self.mu).finish()
    }
}

pub(super) fn build_linear(p: &Params) -> Result<Arc<dyn Model>> {
    let s = get(p, "sigma");
    need(s > 0.0, "sigma > 0")?;
    need(get(p, "A") >= 0.0, "A >= 0")?;
    let diff = build_drift(get(p, "A"), get(p, "B"), s, get(p, "c1"), get(p, "c2"))?;
    Ok(Arc::new(GenericLinear::new(diff, get(p, "A"), get(p, "B"), get(p, "mu"))?))
}

impl GenericLinear {
    pub fn new(diff: DiffusionSpec, a: f64, b: f64, mu: f64) -> Result<Self> {
        if diff.gamma != 1.0 {
            return Err(Error::Capability("the A = 0 kernel is implemented for gamma = 1".into()));
        }
        let s = diff.sigma;
        need(a >= 0.0, "A >= 0")?;
        need(2.0 * b + s * s + 4.0 * mu * s > 0.0, "2B + sigma^2 + 4 mu sigma > 0")?;
        let g = GenericLinear { diff, a, b, mu };
        need(g.nu().abs() < 1.0, "|nu| < 1")?;
        Ok(g)
    }

    pub fn nu(&self) -> f64 {
        let s = self.diff.sigma;
        (2.0 * self.b + s * s + 4.0 * self.mu * s).sqrt() / s
    }

    fn ln_bessel_factor(&self, x: f64) -> f64 {
        let s = self.diff.sigma;
        let z = (2.0 * self.a * x).sqrt() / s;
        if self.a == 0.0 {
            // I_nu(z) ~ (z/2)^nu / Gamma(nu + 1); the z-independent constant is irrelevant
            return self.nu() / 2.0 * x.ln();
        }
        bessel_i_scaled(self.nu(), z, &EvalPolicy::default()).unwrap_or(f64::NAN).ln() + z
    }
}

impl Model for GenericLinear {
    fn diffusion(&self) -> DiffusionSpec {
        self.diff.clone()
    }

    fn potential(&self) -> PotentialSpec {
        PotentialSpec::power(self.mu, -1.0)
    }

    fn riccati(&self) -> RiccatiParams {
        RiccatiParams::linear(self.a, self.b + 2.0 * self.diff.sigma * self.mu)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        let s = self.diff.sigma;
        let df = self.diff.antiderivative(y) - self.diff.antiderivative(x);
        Ok(-(s * t).ln() + 0.5 * (x / y).ln() + df / (2.0 * s) - (x + y) / (s * t) - self.a * t / (2.0 * s)
            + ln_i(self.nu(), 2.0 * (x * y).sqrt() / (s * t))?)
    }

    fn conserves_mass(&self) -> bool {
        self.mu == 0.0
    }

    /// e^{-F/(2 sigma)} sqrt(y) I_nu(sqrt(2Ay)/sigma)
    fn stationary(&self, y: f64) -> f64 {
        let s = self.diff.sigma;
        (-self.diff.antiderivative(y) / (2.0 * s) + 0.5 * y.ln() + self.ln_bessel_factor(y)).exp()
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        let s = self.diff.sigma;
        let q = 1.0 + lambda * s * t;
        if !(q > 0.0) {
            return domain(format!("1 + lambda sigma t = {q} <= 0"));
        }
        if self.a == 0.0 {
            return Ok((-self.diff.antiderivative(x) / (2.0 * s) + 0.5 * x.ln() - lambda * x / q
                + self.nu() / 2.0 * x.ln()
                - (1.0 + self.nu()) * q.ln())
            .exp());
        }
        let z = (2.0 * self.a * x).sqrt() / (s * q);
        let li = bessel_i_scaled(self.nu(), z, &EvalPolicy::default())?.ln() + z;
        Ok((-self.diff.antiderivative(x) / (2.0 * s) + 0.5 * x.ln() - lambda * (x + self.a * t * t / 2.0) / q - q.ln()
            + li)
            .exp())
    }

    fn power_at_zero(&self) -> Option<f64> {
        None
    }
}
