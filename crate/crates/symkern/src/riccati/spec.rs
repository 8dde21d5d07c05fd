use std::fmt;
use std::sync::Arc;

use crate::error::{domain, Error, Result};

pub type Func = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Generator `sigma x^gamma d^2 + f(x) d` on (0, inf), with F' = f / x^gamma.
#[derive(Clone)]
pub struct DiffusionSpec {
    pub gamma: f64,
    pub sigma: f64,
    pub drift: Func,
    pub drift_derivative: Option<Func>,
    pub antiderivative: Func,
    pub label: String,
}

impl fmt::Debug for DiffusionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiffusionSpec")
            .field("gamma", &self.gamma)
            .field("sigma", &self.sigma)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// 4th-order central difference with relative step 1e-4, kept inside (0, inf).
pub(crate) fn central_derivative(f: &dyn Fn(f64) -> f64, x: f64) -> f64 {
    let h = (1e-4 * x.max(1.0)).min(x / 4.0);
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

impl DiffusionSpec {
    pub fn new(
        label: impl Into<String>,
        gamma: f64,
        sigma: f64,
        drift: impl Fn(f64) -> f64 + Send + Sync + 'static,
        antiderivative: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        DiffusionSpec {
            gamma,
            sigma,
            drift: Arc::new(drift),
            drift_derivative: None,
            antiderivative: Arc::new(antiderivative),
            label: label.into(),
        }
    }

    pub fn with_derivative(mut self, df: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.drift_derivative = Some(Arc::new(df));
        self
    }

    pub fn drift(&self, x: f64) -> f64 {
        (self.drift)(x)
    }

    pub fn drift_derivative(&self, x: f64) -> f64 {
        match &self.drift_derivative {
            Some(df) => df(x),
            None => central_derivative(&*self.drift, x),
        }
    }

    pub fn antiderivative(&self, x: f64) -> f64 {
        (self.antiderivative)(x)
    }

    /// h(x) = x^{1-gamma} f(x)
    pub fn h(&self, x: f64) -> f64 {
        x.powf(1.0 - self.gamma) * self.drift(x)
    }

    pub fn h_derivative(&self, x: f64) -> f64 {
        let e = 1.0 - self.gamma;
        let p = x.powf(e);
        p * self.drift_derivative(x) + if e == 0.0 { 0.0 } else { e * p / x * self.drift(x) }
    }

    /// Checks sigma > 0 and F' = f / x^gamma (to 1e-8 relative) at the given points.
    pub fn validate(&self, xs: &[f64]) -> Result<()> {
        if !(self.sigma > 0.0) {
            return domain(format!("{}: sigma must be positive, got {}", self.label, self.sigma));
        }
        for &x in xs {
            let want = self.drift(x) / x.powf(self.gamma);
            let got = central_derivative(&*self.antiderivative, x);
            if (got - want).abs() > 1e-8 * want.abs().max(1.0) {
                return Err(Error::Construction(format!("{}: F'({x}) = {got} but f/x^gamma = {want}", self.label)));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialForm {
    /// mu x^n
    Power { mu: f64, n: f64 },
    /// nu / x + mu x
    InversePlusLinear { nu: f64, mu: f64 },
    /// sum of c x^p
    PowerSum(Vec<(f64, f64)>),
    /// piecewise-linear samples, held constant outside the table; no derivative
    Tabulated { x: Vec<f64>, g: Vec<f64> },
}

/// The killing rate g(x).
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSpec {
    pub form: PotentialForm,
}

impl PotentialSpec {
    pub fn zero() -> Self {
        Self::power(0.0, 0.0)
    }

    pub fn power(mu: f64, n: f64) -> Self {
        PotentialSpec { form: PotentialForm::Power { mu, n } }
    }

    pub fn inverse_plus_linear(nu: f64, mu: f64) -> Self {
        PotentialSpec { form: PotentialForm::InversePlusLinear { nu, mu } }
    }

    pub fn power_sum(terms: Vec<(f64, f64)>) -> Self {
        PotentialSpec { form: PotentialForm::PowerSum(terms) }
    }

    pub fn tabulated(x: Vec<f64>, g: Vec<f64>) -> Result<Self> {
        if x.len() != g.len() || x.len() < 2 || x.windows(2).any(|w| !(w[1] > w[0])) {
            return domain("tabulated potential needs >= 2 increasing abscissae matching the values");
        }
        Ok(PotentialSpec { form: PotentialForm::Tabulated { x, g } })
    }

    fn terms(&self) -> Vec<(f64, f64)> {
        match &self.form {
            PotentialForm::Power { mu, n } => vec![(*mu, *n)],
            PotentialForm::InversePlusLinear { nu, mu } => vec![(*nu, -1.0), (*mu, 1.0)],
            PotentialForm::PowerSum(t) => t.clone(),
            PotentialForm::Tabulated { .. } => Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.form {
            PotentialForm::Tabulated { g, .. } => g.iter().all(|v| *v == 0.0),
            _ => self.terms().iter().all(|(c, _)| *c == 0.0),
        }
    }

    /// True when some term blows up at x = 0.
    pub fn singular_at_origin(&self) -> bool {
        self.terms().iter().any(|(c, p)| *c != 0.0 && *p < 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.form {
            PotentialForm::Tabulated { x: xs, g } => {
                if x <= xs[0] {
                    return g[0];
                }
                if x >= xs[xs.len() - 1] {
                    return g[g.len() - 1];
                }
                let i = xs.partition_point(|v| *v <= x) - 1;
                let w = (x - xs[i]) / (xs[i + 1] - xs[i]);
                g[i] * (1.0 - w) + g[i + 1] * w
            }
            PotentialForm::Power { mu, n } => term(*mu, *n, x),
            PotentialForm::InversePlusLinear { nu, mu } => term(*nu, -1.0, x) + term(*mu, 1.0, x),
            PotentialForm::PowerSum(t) => t.iter().map(|&(c, p)| term(c, p, x)).sum(),
        }
    }

    pub fn derivative(&self, x: f64) -> Result<f64> {
        match &self.form {
            PotentialForm::Tabulated { .. } => {
                Err(Error::Capability("tabulated potential has no derivative; use the h-form residual".into()))
            }
            _ => Ok(self
                .terms()
                .iter()
                .map(|(c, p)| if *c == 0.0 || *p == 0.0 { 0.0 } else { c * p * x.powf(p - 1.0) })
                .sum()),
        }
    }
}

fn term(c: f64, p: f64, x: f64) -> f64 {
    if c == 0.0 {
        0.0
    } else if p == 1.0 {
        c * x
    } else if p == -1.0 {
        c / x
    } else {
        c * x.powf(p)
    }
}
