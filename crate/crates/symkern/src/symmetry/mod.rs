//! Stationary solutions and the closed-form symmetry solutions built from them,
//! plus a finite-difference residual for the backward PDE.

mod pde;
mod stationary;

pub use pde::{convergence_order, pde_residual, RICHARDSON_STEPS};
pub use stationary::{stationary_solution, Branch, MuZeroLimit, StationarySolution};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::riccati::{DiffusionSpec, Family, RiccatiParams};
use crate::specfun::{tricomi_u, EvalPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryFamily {
    /// Laplace-type symmetry for the linear family, gamma != 2
    Laplace,
    /// gamma = 2 log-Gaussian symmetry
    LogGaussian,
    /// one-parameter symmetry of the quadratic family, gamma = 1
    Exponential,
    /// the exponential symmetry applied to the Tricomi stationary solution
    Tricomi,
}

type Eval = Arc<dyn Fn(f64, f64, f64) -> Result<f64> + Send + Sync>;

/// A solution family (parameter, x, t) -> U.
#[derive(Clone)]
pub struct SymmetrySolution {
    eval: Eval,
    pub family: SymmetryFamily,
    pub params: RiccatiParams,
    /// Set when the symmetry maps the seed stationary solution to itself.
    pub invariant: bool,
}

impl std::fmt::Debug for SymmetrySolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SymmetrySolution")
            .field("family", &self.family)
            .field("params", &self.params)
            .field("invariant", &self.invariant)
            .finish_non_exhaustive()
    }
}

impl SymmetrySolution {
    pub fn eval(&self, param: f64, x: f64, t: f64) -> Result<f64> {
        (self.eval)(param, x, t)
    }

    /// Fix the group parameter, leaving a function of (x, t).
    pub fn at(&self, param: f64) -> impl Fn(f64, f64) -> f64 + Send + Sync + '_ {
        move |x, t| self.eval(param, x, t).unwrap_or(f64::NAN)
    }
}

/// Laplace-type symmetry applied to an arbitrary solution u(x, t); `a` is the
/// constant in `Q = 2 sigma a x^{2-gamma} + B`.
pub fn laplace_transform_of(
    diff: &DiffusionSpec,
    a: f64,
    eps: f64,
    x: f64,
    t: f64,
    u: &dyn Fn(f64, f64) -> f64,
) -> Result<f64> {
    let g = diff.gamma;
    let s = diff.sigma;
    let d = 1.0 + 4.0 * eps * t;
    if !(d > 0.0) {
        return domain(format!("symmetry is local: 1 + 4 eps t = {d} <= 0"));
    }
    let e = 2.0 - g;
    let xs = x * d.powf(-2.0 / e);
    let expo = -4.0 * eps * (x.powf(e) + a * s * e * e * t * t) / (s * e * e * d)
        + (diff.antiderivative(xs) - diff.antiderivative(x)) / (2.0 * s);
    Ok(d.powf(-(1.0 - g) / e) * expo.exp() * u(xs, t / d))
}

/// U_lambda with U_lambda(x, 0) = e^{-lambda x^{2-gamma}} u0(x).
pub fn laplace_symmetry(diff: &DiffusionSpec, u0: &StationarySolution, a: f64) -> Result<SymmetrySolution> {
    if diff.gamma == 2.0 {
        return domain("the Laplace-type symmetry needs gamma != 2");
    }
    let d = diff.clone();
    let u = u0.clone();
    let scale = 0.25 * diff.sigma * (2.0 - diff.gamma).powi(2);
    Ok(SymmetrySolution {
        eval: Arc::new(move |lambda, x, t| laplace_transform_of(&d, a, scale * lambda, x, t, &|y, _| u.eval(y))),
        family: SymmetryFamily::Laplace,
        params: RiccatiParams::linear(2.0 * diff.sigma * a, 0.0),
        invariant: false,
    })
}

/// gamma = 2: U_eps(x, 0) = e^{-(eps/sigma)(ln x)^2} u0(x); `a` is the constant of U f = a.
pub fn log_gaussian_symmetry(diff: &DiffusionSpec, u0: &StationarySolution, a: f64) -> Result<SymmetrySolution> {
    if diff.gamma != 2.0 {
        return domain("the log-Gaussian symmetry needs gamma = 2");
    }
    let d = diff.clone();
    let u = u0.clone();
    let s = diff.sigma;
    Ok(SymmetrySolution {
        eval: Arc::new(move |eps, x, t| {
            if !(x > 0.0) {
                return domain(format!("x must be positive, got {x}"));
            }
            let q = 1.0 + 4.0 * eps * t;
            if !(q > 0.0) {
                return domain(format!("symmetry is local: 1 + 4 eps t = {q} <= 0"));
            }
            let l = x.ln();
            let xs = x.powf(1.0 / q);
            let expo = -eps * (l * l - 2.0 * s * t * l + (4.0 * a + s) * s * t * t) / (s * q)
                + (d.antiderivative(xs) - d.antiderivative(x)) / (2.0 * s);
            Ok(q.powf(-0.5) * expo.exp() * u.eval(xs))
        }),
        family: SymmetryFamily::LogGaussian,
        params: RiccatiParams::new(Family::LogConstant, a, 0.0, 0.0),
        invariant: false,
    })
}

fn quadratic_ab(diff: &DiffusionSpec, params: &RiccatiParams) -> Result<(f64, f64)> {
    if params.family != Family::Quadratic || diff.gamma != 1.0 {
        return domain("the exponential symmetry needs the quadratic family with gamma = 1");
    }
    if !(params.a > 0.0) {
        return domain(format!("the exponential symmetry needs A > 0, got {}", params.a));
    }
    Ok((params.a.sqrt(), params.b))
}

fn exponential_value(
    d: &DiffusionSpec,
    ra: f64,
    b: f64,
    eps: f64,
    x: f64,
    t: f64,
    u0: &dyn Fn(f64) -> f64,
) -> Result<f64> {
    let s = d.sigma;
    let e = (ra * t).exp();
    if !(e - eps > 0.0) {
        return domain(format!("symmetry is local: e^(sqrt(A) t) - eps = {} <= 0", e - eps));
    }
    let xs = x * e / (e - eps);
    let expo = -b * t / (2.0 * s) - ra * x * eps / (2.0 * s * (e - eps))
        + (d.antiderivative(xs) - d.antiderivative(x)) / (2.0 * s)
        + b / (2.0 * s * ra) * (e - eps).ln();
    Ok(expo.exp() * u0(xs))
}

/// One-parameter symmetry of the quadratic family applied to u0.
pub fn exponential_symmetry(
    diff: &DiffusionSpec,
    u0: &StationarySolution,
    params: &RiccatiParams,
) -> Result<SymmetrySolution> {
    let (ra, b) = quadratic_ab(diff, params)?;
    let d = diff.clone();
    let u = u0.clone();
    let eval: Eval = Arc::new(move |eps, x, t| exponential_value(&d, ra, b, eps, x, t, &|y| u.eval(y)));
    let mut invariant = true;
    'probe: for &(x, t) in &[(0.5, 0.3), (2.0, 1.0), (1.3, 0.7)] {
        let v = eval(0.3, x, t)?;
        let w = u0.eval(x);
        if (v - w).abs() > 1e-10 * w.abs().max(1e-300) {
            invariant = false;
            break 'probe;
        }
    }
    Ok(SymmetrySolution { eval, family: SymmetryFamily::Exponential, params: *params, invariant })
}

/// The exponential symmetry applied to the Tricomi stationary solution, in closed form.
pub fn tricomi_symmetry(diff: &DiffusionSpec, params: &RiccatiParams) -> Result<SymmetrySolution> {
    let (ra, b) = quadratic_ab(diff, params)?;
    let s = diff.sigma;
    let disc = 1.0 + 2.0 * params.c / (s * s);
    if disc < 0.0 {
        return domain(format!("1 + 2C/sigma^2 = {disc} < 0"));
    }
    let beta = 1.0 + disc.sqrt();
    let alpha = (b / ra + s * beta) / (2.0 * s);
    let eta = b / (2.0 * s * ra) - 0.5 * beta;
    let d = diff.clone();
    let policy = EvalPolicy::default();
    Ok(SymmetrySolution {
        eval: Arc::new(move |eps, x, t| {
            if !(x > 0.0) {
                return domain(format!("x must be positive, got {x}"));
            }
            let e = (ra * t).exp();
            if !(e - eps > 0.0) {
                return domain(format!("symmetry is local: e^(sqrt(A) t) - eps = {} <= 0", e - eps));
            }
            let z = ra * x * e / (s * (e - eps));
            let psi = tricomi_u(alpha, beta, z, &policy)?;
            let expo = (s * beta * ra - b) * t / (2.0 * s) + eta * (e - eps).ln() + 0.5 * beta * x.ln()
                - d.antiderivative(x) / (2.0 * s)
                - ra * x * (e + eps) / (2.0 * s * (e - eps));
            Ok(expo.exp() * psi)
        }),
        family: SymmetryFamily::Tricomi,
        params: *params,
        invariant: false,
    })
}

/// Boundary atom weight U_1(x, t): the exponential symmetry at eps = 1 applied to u0 / u0(0+).
pub fn atom_weight(
    diff: &DiffusionSpec,
    u0: &StationarySolution,
    params: &RiccatiParams,
) -> Result<impl Fn(f64, f64) -> Result<f64> + Send + Sync> {
    let sym = exponential_symmetry(diff, u0, params)?;
    if sym.invariant {
        return Err(Error::Capability("stationary solution is invariant; no atom is generated".into()));
    }
    let at_zero = match u0.value_at_zero {
        Some(v) if v.is_finite() && v != 0.0 => v,
        _ => return Err(Error::Capability("stationary solution has no finite nonzero limit at 0".into())),
    };
    let (ra, b) = quadratic_ab(diff, params)?;
    let d = diff.clone();
    let u = u0.clone();
    Ok(move |x: f64, t: f64| {
        if !(t > 0.0) {
            return domain(format!("atom weight needs t > 0, got {t}"));
        }
        Ok(exponential_value(&d, ra, b, 1.0, x, t, &|y| u.eval(y))? / at_zero)
    })
}
