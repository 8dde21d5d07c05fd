//! Worked diffusions with closed-form fundamental solutions, boundary atoms,
//! transform right-hand sides and Feynman-Kac expectations.

mod besq;
mod bessel;
mod cir;
mod generic;
mod radial_ou;
mod rational;
mod showcase;
mod sqrt_drift;
mod tanh;
mod util;

pub use besq::{cosh_solution, cosh_solution_mass, cosh_transform_rhs, killed_linear_expectation, Besq};
pub use bessel::{alt_representation, Bessel, PitmanYor};
pub use cir::{affine_expectation, Cir};
pub use generic::{GenericLinear, GenericQuadratic};
pub use radial_ou::RadialOu;
pub use rational::RationalDrift;
pub use showcase::Showcase;
pub use sqrt_drift::SqrtDrift;
pub use tanh::TanhDrift;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};
use crate::verify::{integrate_semi_infinite_hinted, Hints, QuadratureSpec};

/// A boundary atom at y = 0 evaluated at fixed (t, x): `weight * delta^(order)(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Atom {
    pub location: f64,
    /// 0 for a point mass, 1 for a dipole (delta')
    pub order: u8,
    pub weight: f64,
}

impl Atom {
    pub fn mass(weight: f64) -> Self {
        Atom { location: 0.0, order: 0, weight }
    }

    pub fn dipole(weight: f64) -> Self {
        Atom { location: 0.0, order: 1, weight }
    }

    /// Pairing with a test function given its value and slope at 0+.
    pub fn pair(&self, value: f64, slope: f64) -> f64 {
        match self.order {
            0 => self.weight * value,
            _ => -self.weight * slope,
        }
    }
}

/// One instantiated catalog entry. Densities are in the forward variable y and
/// solve the backward equation in (t, x).
pub trait Model: Send + Sync {
    fn diffusion(&self) -> DiffusionSpec;
    fn potential(&self) -> PotentialSpec;
    /// The drift-equation constants the pair satisfies.
    fn riccati(&self) -> RiccatiParams;

    /// Continuous part of the fundamental solution.
    fn density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        Ok(self.log_density(t, x, y)?.exp())
    }
    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64>;

    fn atoms(&self, _t: f64, _x: f64) -> Result<Vec<Atom>> {
        Ok(Vec::new())
    }

    /// True when continuous mass plus point masses is 1.
    fn conserves_mass(&self) -> bool;

    /// Exponent p of the test function e^{-lambda y^p} (1, or 2 for gamma = 0 entries).
    fn test_power(&self) -> f64 {
        1.0
    }

    /// Stationary solution weighting the transform identity.
    fn stationary(&self, _y: f64) -> f64 {
        1.0
    }
    /// (u0(0+), u0'(0+)), needed when atoms enter the transform identity.
    fn stationary_at_zero(&self) -> (f64, f64) {
        (1.0, 0.0)
    }

    /// Closed form of the integral of e^{-lambda y^p} u0(y) against the kernel.
    fn transform_rhs(&self, _lambda: f64, _t: f64, _x: f64) -> Result<f64> {
        Err(Error::Capability("entry has no closed-form transform".into()))
    }

    /// Closed form of E_x[exp(-lambda X_t^p - int g)], if the entry has one.
    fn expectation_closed(&self, _lambda: f64, _t: f64, _x: f64) -> Option<Result<f64>> {
        None
    }

    /// Behaviour y^s of the density at 0, when known and not a plain power series.
    fn power_at_zero(&self) -> Option<f64> {
        None
    }

    /// Breakpoints for quadrature in y.
    fn hints(&self, t: f64, x: f64) -> Hints {
        let d = self.diffusion();
        let xs = if self.test_power() == 2.0 { x } else { x.max(1e-3) };
        let w = (2.0 * d.sigma * xs.powf(d.gamma) * t).sqrt();
        let mut pts = vec![0.25 * xs, 0.5 * xs, xs, 2.0 * xs, 4.0 * xs, xs + 3.0 * w, xs + 8.0 * w];
        pts.retain(|p| *p > 0.0 && p.is_finite());
        let mut h = Hints::at(&pts);
        if let Some(s) = self.power_at_zero() {
            if s > -1.0 && s != s.round() {
                h = h.singular(s);
            }
        }
        h
    }
}

/// Declared parameter of an entry.
#[derive(Debug, Clone, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: f64,
    pub description: &'static str,
}

pub type Params = BTreeMap<String, f64>;

type Builder = fn(&Params) -> Result<Arc<dyn Model>>;

/// A named family in the catalog; `instantiate` checks names and validity.
#[derive(Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub title: &'static str,
    pub gamma: f64,
    pub parameters: Vec<ParamSpec>,
    pub validity: Vec<&'static str>,
    pub density: &'static str,
    pub expectation: &'static str,
    /// Test function exponent p in e^{-lambda y^p}.
    pub test_power: f64,
    #[serde(skip)]
    build: Builder,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("name", &self.name).finish_non_exhaustive()
    }
}

impl CatalogEntry {
    pub fn defaults(&self) -> Params {
        self.parameters.iter().map(|p| (p.name.to_string(), p.default)).collect()
    }

    pub fn has_parameter(&self, name: &str) -> bool {
        self.parameters.iter().any(|p| p.name == name)
    }

    /// Defaults overridden by `overrides`; unknown names are rejected.
    pub fn params(&self, overrides: &[(&str, f64)]) -> Result<Params> {
        let mut p = self.defaults();
        for (k, v) in overrides {
            if !self.has_parameter(k) {
                return Err(Error::Domain(format!("entry '{}' has no parameter '{k}'", self.name)));
            }
            p.insert(k.to_string(), *v);
        }
        Ok(p)
    }

    pub fn instantiate(&self, params: &Params) -> Result<Arc<dyn Model>> {
        for (k, v) in params {
            if !self.has_parameter(k) {
                return Err(Error::Domain(format!("entry '{}' has no parameter '{k}'", self.name)));
            }
            if !v.is_finite() {
                return Err(Error::Domain(format!("parameter '{k}' must be finite, got {v}")));
            }
        }
        let mut full = self.defaults();
        full.extend(params.iter().map(|(k, v)| (k.clone(), *v)));
        (self.build)(&full)
    }

    pub fn with(&self, overrides: &[(&str, f64)]) -> Result<Arc<dyn Model>> {
        self.instantiate(&self.params(overrides)?)
    }
}

macro_rules! param {
    ($n:expr, $d:expr, $desc:expr) => {
        ParamSpec { name: $n, default: $d, description: $desc }
    };
}

/// Every entry, in manifest order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "besq",
            title: "squared Bessel process, dX = n dt + 2 sqrt(X) dW, killed at rate mu/x + b^2 x/2",
            gamma: 1.0,
            parameters: vec![
                param!("n", 3.0, "dimension"),
                param!("mu", 0.0, "coefficient of the 1/x killing rate"),
                param!("b", 0.0, "killing rate b^2 x / 2"),
            ],
            validity: vec!["n >= 2", "mu >= 0", "b >= 0"],
            density: "Bessel-I kernel; sinh/coth form when b > 0",
            expectation: "closed form (1F1) in all cases; e^{-lambda y}",
            test_power: 1.0,
            build: besq::build,
        },
        CatalogEntry {
            name: "bessel",
            title: "Bessel process, dX = (a/X) dt + dW, killed at rate mu/(4x^2)",
            gamma: 0.0,
            parameters: vec![param!("a", 1.0, "drift coefficient"), param!("mu", 0.0, "killing coefficient")],
            validity: vec!["a > 1/2", "mu >= 0"],
            density: "Bessel-I kernel of index d + a - 1/2",
            expectation: "closed form (1F1); test function e^{-lambda y^2}",
            test_power: 2.0,
            build: bessel::build_bessel,
        },
        CatalogEntry {
            name: "pitman-yor",
            title: "Bessel process with drift, f = 1/(2x) + b I_a'(bx)/I_a(bx), killed at rate mu/x^2",
            gamma: 0.0,
            parameters: vec![
                param!("a", 0.5, "Bessel index"),
                param!("b", 1.0, "drift strength"),
                param!("mu", 0.0, "killing coefficient"),
            ],
            validity: vec!["a > -1", "b > 0", "mu >= 0"],
            density: "ratio of Bessel-I functions times the Bessel kernel",
            expectation: "quadrature; test function e^{-lambda y^2}",
            test_power: 2.0,
            build: bessel::build_pitman_yor,
        },
        CatalogEntry {
            name: "cir",
            title: "CIR process, dX = (a - bX) dt + sqrt(2 sigma X) dW, killed at rate mu/x + kappa x",
            gamma: 1.0,
            parameters: vec![
                param!("a", 2.0, "mean-reversion level times speed"),
                param!("b", 1.0, "mean-reversion speed"),
                param!("sigma", 1.0, "diffusion scale"),
                param!("mu", 0.0, "coefficient of the 1/x killing rate"),
                param!("kappa", 0.0, "coefficient of the linear killing rate"),
            ],
            validity: vec!["a > 0", "b > 0", "sigma > 0", "mu >= 0", "kappa >= 0"],
            density: "Bessel-I kernel with A = b^2 + 4 kappa sigma",
            expectation: "closed form (Whittaker M); e^{-lambda y}",
            test_power: 1.0,
            build: cir::build,
        },
        CatalogEntry {
            name: "rational-drift",
            title: "drift a x/(1 + a x/2), sigma = 1, killed at rate mu x or nu/x, point mass at 0",
            gamma: 1.0,
            parameters: vec![
                param!("a", 2.0, "drift coefficient"),
                param!("mu", 0.0, "linear killing coefficient"),
                param!("nu", 0.0, "1/x killing coefficient"),
            ],
            validity: vec![
                "a > 0",
                "mu >= 0",
                "nu >= 0",
                "mu = 0 or nu = 0",
                "sqrt(1 + 4 nu) not an integer when nu > 0",
            ],
            density: "I_1 kernel plus delta atom; finite-part kernel for nu > 0",
            expectation: "closed form for nu = 0; e^{-lambda y}",
            test_power: 1.0,
            build: rational::build,
        },
        CatalogEntry {
            name: "tanh-drift",
            title: "drift 2x tanh x, sigma = 1, killed at rate mu x, point mass at 0",
            gamma: 1.0,
            parameters: vec![param!("mu", 0.0, "linear killing coefficient")],
            validity: vec!["mu > -1"],
            density: "I_1 kernel with k = sqrt(1 + mu) plus delta atom",
            expectation: "closed form; e^{-lambda y}",
            test_power: 1.0,
            build: tanh::build,
        },
        CatalogEntry {
            name: "radial-ou",
            title: "radial Ornstein-Uhlenbeck, dX = (a/X + bX) dt + sqrt(2) dW, killed at rate mu x^2",
            gamma: 0.0,
            parameters: vec![
                param!("a", 1.0, "radial drift coefficient"),
                param!("b", 0.5, "linear drift coefficient"),
                param!("mu", 0.0, "killing coefficient"),
            ],
            validity: vec!["a > -1", "b^2 + 4 mu > 0"],
            density: "Bessel-I kernel with alpha = sqrt(b^2 + 4 mu)",
            expectation: "closed form; test function e^{-lambda y^2}",
            test_power: 2.0,
            build: radial_ou::build,
        },
        CatalogEntry {
            name: "showcase",
            title: "drift 3 - 4b/(b + a x^2), sigma = 1; kernel with delta and delta' atoms",
            gamma: 1.0,
            parameters: vec![param!("a", 1.0, "drift coefficient"), param!("b", 2.0, "drift coefficient")],
            validity: vec!["a > 0", "b > 0"],
            density: "I_2 kernel with a mass defect carried by delta and delta' atoms",
            expectation: "quadrature plus atoms (delta' pairs with -phi'(0))",
            test_power: 1.0,
            build: showcase::build,
        },
        CatalogEntry {
            name: "sqrt-drift",
            title: "drift a - b sqrt(x), sigma = 1, with the killing rate g that makes A, B the drift constants",
            gamma: 1.0,
            parameters: vec![
                param!("a", 1.5, "drift constant"),
                param!("b", 0.6, "coefficient of sqrt(x)"),
                param!("A", 0.8, "drift-equation constant A"),
                param!("B", 0.4, "drift-equation constant B"),
            ],
            validity: vec!["A >= 0", "1 + 2B > 0", "a + sqrt(1 + 2B) + 1 > 0"],
            density: "I_m kernel, m = sqrt(1 + 2B)",
            expectation: "closed form as a convergent 1F1 series; e^{-lambda y}",
            test_power: 1.0,
            build: sqrt_drift::build,
        },
        CatalogEntry {
            name: "generic-a0",
            title: "any drift with sigma x f' - sigma f + f^2/2 = A x + B (built from Bessel solutions), killed at rate mu/x",
            gamma: 1.0,
            parameters: vec![
                param!("sigma", 0.8, "diffusion scale"),
                param!("A", 1.2, "drift-equation constant A"),
                param!("B", -0.2, "drift-equation constant B"),
                param!("c1", 1.0, "weight of the I_alpha solution"),
                param!("c2", 0.0, "weight of the second solution"),
                param!("mu", 0.05, "1/x killing coefficient"),
            ],
            validity: vec!["sigma > 0", "A >= 0", "2B + sigma^2 + 4 mu sigma > 0", "|nu| < 1"],
            density: "I_nu kernel in 2 sqrt(xy)/(sigma t) with the drift's antiderivative",
            expectation: "quadrature; e^{-lambda y}",
            test_power: 1.0,
            build: generic::build_linear,
        },
        CatalogEntry {
            name: "generic-apos",
            title: "quadratic drift-equation family with A > 0 (instance: affine drift a - b x), killed at rate mu/x + kappa x",
            gamma: 1.0,
            parameters: vec![
                param!("a", 2.0, "drift constant"),
                param!("b", 1.0, "drift slope"),
                param!("sigma", 1.0, "diffusion scale"),
                param!("mu", 0.0, "1/x killing coefficient"),
                param!("kappa", 0.3, "linear killing coefficient"),
            ],
            validity: vec!["A > 0", "sigma > 0", "sigma^2 + 2C >= 0"],
            density: "sqrt(A) sinh/coth kernel with I_nu, nu = sqrt(sigma^2 + 2C)/sigma",
            expectation: "quadrature; e^{-lambda y}",
            test_power: 1.0,
            build: generic::build_quadratic,
        },
    ]
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Domain(format!("unknown catalog entry '{name}'")))
}

/// Machine-readable listing of the catalog.
pub fn manifest() -> serde_json::Value {
    serde_json::json!({
        "schema": "symkern-catalog/1",
        "entries": catalog(),
    })
}

/// Integral of the continuous part plus point masses.
pub fn total_mass(model: &dyn Model, t: f64, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    let cont = continuous_mass(model, t, x, spec)?;
    let atoms: f64 = model.atoms(t, x)?.iter().filter(|a| a.order == 0).map(|a| a.weight).sum();
    Ok(cont + atoms)
}

pub fn continuous_mass(model: &dyn Model, t: f64, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    integrate_semi_infinite_hinted(|y| model.density(t, x, y).unwrap_or(f64::NAN), &model.hints(t, x), spec)
}

/// Integral of phi against the full kernel, with phi(0+) and phi'(0+) for the atoms.
pub fn pair_with(
    model: &dyn Model,
    t: f64,
    x: f64,
    phi: &dyn Fn(f64) -> f64,
    at_zero: (f64, f64),
    spec: &QuadratureSpec,
) -> Result<f64> {
    let cont = integrate_semi_infinite_hinted(
        |y| {
            let v = phi(y);
            if v == 0.0 {
                0.0
            } else {
                v * model.density(t, x, y).unwrap_or(f64::NAN)
            }
        },
        &model.hints(t, x),
        spec,
    )?;
    let atoms: f64 = model.atoms(t, x)?.iter().map(|a| a.pair(at_zero.0, at_zero.1)).sum();
    Ok(cont + atoms)
}

/// Left side of the transform identity by quadrature.
pub fn transform_lhs(model: &dyn Model, lambda: f64, t: f64, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    let p = model.test_power();
    let (u00, du00) = model.stationary_at_zero();
    // d/dy [e^{-lambda y^p} u0] at 0
    let slope = if p == 1.0 { du00 - lambda * u00 } else { du00 };
    pair_with(model, t, x, &|y| (-lambda * y.powf(p)).exp() * model.stationary(y), (u00, slope), spec)
}

/// E_x[exp(-lambda X_t^p - int g)] by quadrature of the kernel.
pub fn expectation_quadrature(model: &dyn Model, lambda: f64, t: f64, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    let p = model.test_power();
    let slope = if p == 1.0 { -lambda } else { 0.0 };
    pair_with(model, t, x, &|y| (-lambda * y.powf(p)).exp(), (1.0, slope), spec)
}

/// Closed form when the entry has one, else quadrature.
pub fn expectation(model: &dyn Model, lambda: f64, t: f64, x: f64) -> Result<f64> {
    check_tx(t, x)?;
    match model.expectation_closed(lambda, t, x) {
        Some(v) => v,
        None => expectation_quadrature(model, lambda, t, x, &QuadratureSpec::default()),
    }
}

/// Expectations along a grid of the killing coefficient `mu`, for inversion in mu.
pub fn joint_laplace_in_mu(
    entry: &CatalogEntry,
    params: &Params,
    lambda: f64,
    t: f64,
    x: f64,
    mu_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if !entry.has_parameter("mu") {
        return Err(Error::Capability(format!("entry '{}' has no killing parameter mu", entry.name)));
    }
    if mu_grid.iter().any(|m| !(*m >= 0.0)) || mu_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("mu grid must be non-negative and increasing".into()));
    }
    mu_grid
        .iter()
        .map(|&mu| {
            let mut p = params.clone();
            p.insert("mu".into(), mu);
            let m = entry.instantiate(&p)?;
            Ok((mu, expectation(m.as_ref(), lambda, t, x)?))
        })
        .collect()
}

pub(crate) fn check_tx(t: f64, x: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    Ok(())
}

pub(crate) fn check_txy(t: f64, x: f64, y: f64) -> Result<()> {
    check_tx(t, x)?;
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("y must be non-negative, got {y}")));
    }
    Ok(())
}
