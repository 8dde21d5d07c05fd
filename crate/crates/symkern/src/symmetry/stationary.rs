use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::riccati::{fit_riccati, DiffusionSpec, Family, PotentialSpec, RiccatiParams};
use crate::specfun::{bessel_i_scaled, bessel_k_scaled, hypergeom_1f1, tricomi_u, EvalPolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MuZeroLimit {
    ConstantOne,
    Nonconstant,
    Unknown,
}

/// Which stationary solution to build.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Branch {
    /// The combination that becomes the constant 1 when the potential is switched off.
    Default,
    /// x^{d+}, I_nu, or Kummer M
    First,
    /// x^{d-}, I_{-nu} (K_nu for integer nu), or Tricomi U
    Second,
    Combination {
        c1: f64,
        c2: f64,
    },
}

#[derive(Clone)]
pub struct StationarySolution {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub description: String,
    pub limit_at_mu_zero: MuZeroLimit,
    /// u0(0+), when finite.
    pub value_at_zero: Option<f64>,
    pub params: Option<RiccatiParams>,
}

impl std::fmt::Debug for StationarySolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StationarySolution")
            .field("description", &self.description)
            .field("limit_at_mu_zero", &self.limit_at_mu_zero)
            .field("value_at_zero", &self.value_at_zero)
            .finish_non_exhaustive()
    }
}

impl StationarySolution {
    pub fn new(
        description: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        limit_at_mu_zero: MuZeroLimit,
    ) -> Self {
        StationarySolution {
            eval: Arc::new(eval),
            description: description.into(),
            limit_at_mu_zero,
            value_at_zero: None,
            params: None,
        }
    }

    pub fn with_value_at_zero(mut self, v: f64) -> Self {
        self.value_at_zero = Some(v);
        self
    }

    pub fn constant_one() -> Self {
        Self::new("u0 = 1", |_| 1.0, MuZeroLimit::ConstantOne).with_value_at_zero(1.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    /// sigma x^gamma u'' + f u' - g u relative to the size of its terms, by 4th-order differences.
    pub fn relative_residual(&self, diff: &DiffusionSpec, pot: &PotentialSpec, x: f64) -> f64 {
        let h = 1e-3 * x;
        let u = |y: f64| self.eval(y);
        let (m2, m1, c, p1, p2) = (u(x - 2.0 * h), u(x - h), u(x), u(x + h), u(x + 2.0 * h));
        let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
        let d2 = (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
        let terms = [diff.sigma * x.powf(diff.gamma) * d2, diff.drift(x) * d1, pot.eval(x) * c];
        let scale = terms.iter().fold(c.abs(), |m, t| m.max(t.abs()));
        (terms[0] + terms[1] - terms[2]).abs() / scale
    }
}

const CHECK_POINTS: [f64; 5] = [0.2, 0.7, 1.5, 4.0, 9.0];

// The two independent solutions, as closures with their limits at 0.
struct Basis {
    first: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    second: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    at_zero: (Option<f64>, Option<f64>),
    description: String,
}

fn fit_grid() -> Vec<f64> {
    (0..40).map(|i| 1e-2 * 1e4f64.powf(i as f64 / 39.0)).collect()
}

fn basis(diff: &DiffusionSpec, params: &RiccatiParams) -> Result<Basis> {
    let s = diff.sigma;
    let g = diff.gamma;
    let policy = EvalPolicy::default();
    match params.family {
        Family::Linear => {
            let disc = s * s + 2.0 * params.b;
            if disc < 0.0 {
                return Err(Error::Construction(format!("sigma^2 + 2B = {disc} < 0: oscillatory solutions")));
            }
            let (d1, d2) = (diff.clone(), diff.clone());
            if params.a == 0.0 {
                // e^{-F/2 sigma} x^{1/2 +- r}
                let r = disc.sqrt() / (2.0 * s);
                if r == 0.0 {
                    return Ok(Basis {
                        first: Arc::new(move |x| (-d1.antiderivative(x) / (2.0 * s) + 0.5 * x.ln()).exp()),
                        second: Arc::new(move |x| (-d2.antiderivative(x) / (2.0 * s) + 0.5 * x.ln()).exp() * x.ln()),
                        at_zero: (None, None),
                        description: "e^{-F/2s} sqrt(x) (1, ln x)".into(),
                    });
                }
                return Ok(Basis {
                    first: Arc::new(move |x| (-d1.antiderivative(x) / (2.0 * s) + (0.5 + r) * x.ln()).exp()),
                    second: Arc::new(move |x| (-d2.antiderivative(x) / (2.0 * s) + (0.5 - r) * x.ln()).exp()),
                    at_zero: (None, None),
                    description: format!("e^{{-F/2s}} x^(1/2 +- {r})"),
                });
            }
            if params.a < 0.0 {
                return Err(Error::Capability("negative A gives oscillatory Bessel solutions".into()));
            }
            let p = (2.0 - g) / 2.0;
            let k = (0.5 * params.a).sqrt() / (s * p);
            let nu = disc.sqrt() / (s * (2.0 - g));
            let integer = nu == nu.round();
            let first = move |x: f64| {
                let z = k * x.powf(p);
                let i = bessel_i_scaled(nu, z, &policy).unwrap_or(f64::NAN);
                (-d1.antiderivative(x) / (2.0 * s) + 0.5 * x.ln() + z).exp() * i
            };
            let second = move |x: f64| {
                let z = k * x.powf(p);
                if integer {
                    let kv = bessel_k_scaled(nu, z, &policy).unwrap_or(f64::NAN);
                    (-d2.antiderivative(x) / (2.0 * s) + 0.5 * x.ln() - z).exp() * kv
                } else {
                    let i = bessel_i_scaled(-nu, z, &policy).unwrap_or(f64::NAN);
                    (-d2.antiderivative(x) / (2.0 * s) + 0.5 * x.ln() + z).exp() * i
                }
            };
            Ok(Basis {
                first: Arc::new(first),
                second: Arc::new(second),
                at_zero: (None, None),
                description: format!(
                    "e^{{-F/2s}} sqrt(x) Z_{nu}({k} x^{p}), Z = I_nu / {}",
                    if integer { "K_nu" } else { "I_-nu" }
                ),
            })
        }
        Family::Quadratic if g == 1.0 && params.a > 0.0 => {
            let disc = 1.0 + 2.0 * params.c / (s * s);
            if disc < 0.0 {
                return Err(Error::Construction(format!("1 + 2C/sigma^2 = {disc} < 0")));
            }
            let ra = params.a.sqrt();
            let beta = 1.0 + disc.sqrt();
            let alpha = (params.b / ra + s * beta) / (2.0 * s);
            let (d1, d2) = (diff.clone(), diff.clone());
            let pref = move |d: &DiffusionSpec, x: f64| {
                (0.5 * beta * x.ln() - (d.antiderivative(x) + ra * x) / (2.0 * s)).exp()
            };
            let first =
                move |x: f64| pref(&d1, x) * hypergeom_1f1(alpha, beta, ra * x / s, &policy).unwrap_or(f64::NAN);
            let second = move |x: f64| pref(&d2, x) * tricomi_u(alpha, beta, ra * x / s, &policy).unwrap_or(f64::NAN);
            Ok(Basis {
                first: Arc::new(first),
                second: Arc::new(second),
                at_zero: (None, None),
                description: format!("x^(b/2) e^(-(F + sqrt(A) x)/2s) [M, U]({alpha}, {beta}, sqrt(A) x/s)"),
            })
        }
        other => Err(Error::Capability(format!(
            "no stationary-solution construction for the {other:?} family at gamma = {g}"
        ))),
    }
}

// Coefficients (c1, c2) with c1 u1 + c2 u2 == 1, if such exist.
fn unit_combination(b: &Basis) -> Option<(f64, f64)> {
    let (x1, x2) = (0.5, 2.0);
    let (a11, a12, a21, a22) = ((b.first)(x1), (b.second)(x1), (b.first)(x2), (b.second)(x2));
    let det = a11 * a22 - a12 * a21;
    if !det.is_finite() || det.abs() < 1e-14 * (a11 * a22).abs().max((a12 * a21).abs()) {
        return None;
    }
    let c1 = (a22 - a12) / det;
    let c2 = (a11 - a21) / det;
    let ok = CHECK_POINTS.iter().all(|&x| (c1 * (b.first)(x) + c2 * (b.second)(x) - 1.0).abs() < 1e-8);
    ok.then_some((c1, c2))
}

/// Stationary solution of sigma x^gamma u'' + f u' - g u = 0 for a classified pair.
pub fn stationary_solution(diff: &DiffusionSpec, pot: &PotentialSpec, branch: Branch) -> Result<StationarySolution> {
    if pot.is_zero() && branch == Branch::Default {
        return Ok(StationarySolution::constant_one());
    }
    let params = fit_riccati(diff, pot, &fit_grid())?
        .ok_or_else(|| Error::Construction("pair satisfies none of the drift equations".into()))?;
    let b = basis(diff, &params)?;
    let (c1, c2, limit) = match branch {
        Branch::First => (1.0, 0.0, MuZeroLimit::Unknown),
        Branch::Second => (0.0, 1.0, MuZeroLimit::Unknown),
        Branch::Combination { c1, c2 } => (c1, c2, MuZeroLimit::Unknown),
        Branch::Default => {
            // the same branch with the potential removed decides
            let free = fit_riccati(diff, &PotentialSpec::zero(), &fit_grid())?
                .ok_or_else(|| Error::Construction("unkilled drift is unclassified".into()))?;
            match basis(diff, &free).ok().as_ref().and_then(unit_combination) {
                Some((c1, c2)) => {
                    let (c1, c2) = (snap(c1), snap(c2));
                    (c1, c2, MuZeroLimit::ConstantOne)
                }
                None => (1.0, 0.0, MuZeroLimit::Nonconstant),
            }
        }
    };
    if c1 == 0.0 && c2 == 0.0 {
        return domain("branch coefficients are both zero");
    }
    let (f1, f2) = (b.first.clone(), b.second.clone());
    let eval = move |x: f64| {
        let mut v = 0.0;
        if c1 != 0.0 {
            v += c1 * f1(x);
        }
        if c2 != 0.0 {
            v += c2 * f2(x);
        }
        v
    };
    let at_zero = match (c1 != 0.0, c2 != 0.0) {
        (true, false) => b.at_zero.0,
        (false, true) => b.at_zero.1,
        _ => None,
    };
    let mut sol = StationarySolution::new(format!("{} with (c1, c2) = ({c1}, {c2})", b.description), eval, limit);
    sol.value_at_zero = at_zero.or_else(|| estimate_at_zero(&sol));
    sol.params = Some(params);
    for &x in &CHECK_POINTS {
        let r = sol.relative_residual(diff, pot, x);
        if !(r < 1e-8) {
            return Err(Error::Construction(format!("stationary residual {r:e} at x = {x}")));
        }
    }
    Ok(sol)
}

fn snap(c: f64) -> f64 {
    if c.abs() < 1e-12 {
        0.0
    } else {
        c
    }
}

// u0(0+) when the values settle as x decreases through several decades.
fn estimate_at_zero(sol: &StationarySolution) -> Option<f64> {
    let v: Vec<f64> = [1e-10, 1e-12, 1e-14].iter().map(|&x| sol.eval(x)).collect();
    let settled = v.iter().all(|t| t.is_finite()) && (v[0] - v[2]).abs() <= 1e-6 * v[2].abs() && v[2] != 0.0;
    settled.then_some(v[2])
}
