//! Drift equations: residuals of the Riccati forms, least-squares
//! classification of a (drift, potential) pair, and drift construction from
//! Bessel-type solutions of the linearised equation.

mod build;
mod fit;
mod spec;

pub use build::build_drift;
pub use fit::fit_riccati;
pub use spec::{DiffusionSpec, Func, PotentialForm, PotentialSpec};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Right-hand sides of the drift equation in h-form,
/// `sigma x h' - sigma h + h^2/2 + 2 sigma x^{2-gamma} g = Q(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Q = A x^{2-g} + B
    Linear,
    /// Q = A/2 x^{4-2g} + B x^{2-g} + C
    Quadratic,
    /// Q = sigma A x^{4-2g} + (4 sigma/3) B x^{3-3g/2} - 3 sigma^3 x^{2-g} / (4(2-g)) + C
    Fractional,
    /// gamma = 2, xi = ln x: Q = (2 sigma A + sigma^2/2) xi^2 + B
    LogConstant,
    /// gamma = 2: Q = (4 sigma A/3) xi^3 + (2 sigma B + sigma^2/2) xi^2 + C
    LogLinear,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Linear, Family::Quadratic, Family::Fractional, Family::LogConstant, Family::LogLinear];

    pub fn for_gamma(gamma: f64) -> &'static [Family] {
        if gamma == 2.0 {
            &Self::ALL[3..]
        } else {
            &Self::ALL[..3]
        }
    }

    pub fn free_parameters(self) -> usize {
        match self {
            Family::Linear | Family::LogConstant => 2,
            _ => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiccatiParams {
    pub family: Family,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl RiccatiParams {
    pub fn new(family: Family, a: f64, b: f64, c: f64) -> Self {
        RiccatiParams { family, a, b, c }
    }

    pub fn linear(a: f64, b: f64) -> Self {
        Self::new(Family::Linear, a, b, 0.0)
    }

    pub fn quadratic(a: f64, b: f64, c: f64) -> Self {
        Self::new(Family::Quadratic, a, b, c)
    }

    /// Q(x) for this family.
    pub fn rhs(&self, gamma: f64, sigma: f64, x: f64) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        let p = x.powf(2.0 - gamma);
        match self.family {
            Family::Linear => a * p + b,
            Family::Quadratic => 0.5 * a * p * p + b * p + c,
            Family::Fractional => {
                sigma * a * p * p + 4.0 * sigma / 3.0 * b * x.powf(3.0 - 1.5 * gamma)
                    - 3.0 * sigma.powi(3) * p / (4.0 * (2.0 - gamma))
                    + c
            }
            Family::LogConstant => {
                let xi = x.ln();
                (2.0 * sigma * a + 0.5 * sigma * sigma) * xi * xi + b
            }
            Family::LogLinear => {
                let xi = x.ln();
                4.0 * sigma * a / 3.0 * xi.powi(3) + (2.0 * sigma * b + 0.5 * sigma * sigma) * xi * xi + c
            }
        }
    }

    /// Derivative of Q in x.
    fn rhs_derivative(&self, gamma: f64, sigma: f64, x: f64) -> f64 {
        let (a, b) = (self.a, self.b);
        let e = 2.0 - gamma;
        match self.family {
            Family::Linear => a * e * x.powf(e - 1.0),
            Family::Quadratic => a * e * x.powf(2.0 * e - 1.0) + b * e * x.powf(e - 1.0),
            Family::Fractional => {
                2.0 * sigma * a * e * x.powf(2.0 * e - 1.0)
                    + 4.0 * sigma / 3.0 * b * (3.0 - 1.5 * gamma) * x.powf(2.0 - 1.5 * gamma)
                    - 0.75 * sigma.powi(3) * x.powf(e - 1.0)
            }
            _ => f64::NAN,
        }
    }

    /// Convert to the convention `Q = 2 sigma A x^{2-gamma} + B` used by the Laplace-type symmetry.
    pub fn symmetry_a(&self, sigma: f64) -> Result<f64> {
        match self.family {
            Family::Linear => Ok(self.a / (2.0 * sigma)),
            _ => Err(Error::Capability(format!("{:?} family has no Laplace-type symmetry", self.family))),
        }
    }
}

/// The pieces of the h-form: (sigma x h' - sigma h + h^2/2 + 2 sigma x^{2-g} g, size of its largest term).
pub fn riccati_lhs(diff: &DiffusionSpec, pot: &PotentialSpec, x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) {
        return domain(format!("riccati residual needs x > 0, got {x}"));
    }
    let s = diff.sigma;
    let g = pot.eval(x);
    if diff.gamma == 2.0 {
        // H(xi) = f ln x / x - sigma ln x, dH/dxi = x H'(x)
        let xi = x.ln();
        let f = diff.drift(x);
        let df = diff.drift_derivative(x);
        let hh = f * xi / x - s * xi;
        let dh = x * ((df * xi + f / x) / x - f * xi / (x * x) - s / x);
        let terms = [s * xi * dh, s * hh, 0.5 * hh * hh, 2.0 * s * xi * xi * g];
        let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        return Ok((terms[0] - terms[1] + terms[2] + terms[3], scale));
    }
    let h = diff.h(x);
    let dh = diff.h_derivative(x);
    let terms = [s * x * dh, s * h, 0.5 * h * h, 2.0 * s * x.powf(2.0 - diff.gamma) * g];
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    Ok((terms[0] - terms[1] + terms[2] + terms[3], scale))
}

/// h-form residual LHS - Q(x); zero iff the pair satisfies the family at x.
pub fn riccati_residual(diff: &DiffusionSpec, pot: &PotentialSpec, params: &RiccatiParams, x: f64) -> Result<f64> {
    check_family(diff, params)?;
    let (lhs, _) = riccati_lhs(diff, pot, x)?;
    Ok(lhs - params.rhs(diff.gamma, diff.sigma, x))
}

/// Residual divided by max(1, largest term), the meaningful size in floating point.
pub fn riccati_residual_scaled(
    diff: &DiffusionSpec,
    pot: &PotentialSpec,
    params: &RiccatiParams,
    x: f64,
) -> Result<f64> {
    check_family(diff, params)?;
    let (lhs, scale) = riccati_lhs(diff, pot, x)?;
    let q = params.rhs(diff.gamma, diff.sigma, x);
    Ok((lhs - q) / scale.max(q.abs()).max(1.0))
}

fn check_family(diff: &DiffusionSpec, params: &RiccatiParams) -> Result<()> {
    let log = matches!(params.family, Family::LogConstant | Family::LogLinear);
    if log != (diff.gamma == 2.0) {
        return domain(format!("{:?} family does not apply for gamma = {}", params.family, diff.gamma));
    }
    Ok(())
}

/// The drift operator L f for gamma != 2; uses g'.
pub fn drift_operator(diff: &DiffusionSpec, pot: &PotentialSpec, x: f64) -> Result<f64> {
    if diff.gamma == 2.0 {
        return domain("the L operator is defined for gamma != 2");
    }
    if !(x > 0.0) {
        return domain(format!("L f needs x > 0, got {x}"));
    }
    let gp = pot.derivative(x)?;
    let s = diff.sigma;
    let e = 2.0 - diff.gamma;
    let k = 1.0 / (2.0 * s * e);
    // w = h / (2 sigma (2-gamma)); w' and w'' by differencing h'
    let step = (1e-4 * x.max(1.0)).min(x / 4.0);
    let d2h = (diff.h_derivative(x + step) - diff.h_derivative(x - step)) / (2.0 * step);
    Ok(s * x.powf(diff.gamma) * k * d2h + diff.drift(x) * k * diff.h_derivative(x) + pot.eval(x) + x * gp / e)
}

/// L f minus the family right-hand side, via Q' = 2 sigma (2-gamma) x^{1-gamma} L f.
pub fn drift_operator_residual(
    diff: &DiffusionSpec,
    pot: &PotentialSpec,
    params: &RiccatiParams,
    x: f64,
) -> Result<f64> {
    check_family(diff, params)?;
    let lf = drift_operator(diff, pot, x)?;
    let e = 2.0 - diff.gamma;
    let target = params.rhs_derivative(diff.gamma, diff.sigma, x) / (2.0 * diff.sigma * e * x.powf(1.0 - diff.gamma));
    Ok(lf - target)
}
