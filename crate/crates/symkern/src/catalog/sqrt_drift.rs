use std::sync::Arc;

use super::util::{get, ln_bessel_laplace, ln_i, need};
use super::{check_tx, check_txy, Model, Params};
use crate::error::{domain, Error, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec, RiccatiParams};

/// Drift a - b sqrt(x), sigma = 1, with the killing rate
/// g = (A - b^2/2)/2 + (a - a^2/2 + B)/(2x) + (ab - b/2)/(2 sqrt x)
/// chosen so that the pair solves `x f' - f + f^2/2 + 2x g = A x + B`.
/// The expectation is of exp(-lambda X_t - int g), the same sign as for every entry.
#[derive(Debug, Clone, Copy)]
pub struct SqrtDrift {
    pub a: f64,
    pub b: f64,
    pub big_a: f64,
    pub big_b: f64,
}

pub(super) fn build(p: &Params) -> Result<Arc<dyn Model>> {
    Ok(Arc::new(SqrtDrift::new(get(p, "a"), get(p, "b"), get(p, "A"), get(p, "B"))?))
}

const MAX_TERMS: usize = 400;

impl SqrtDrift {
    pub fn new(a: f64, b: f64, big_a: f64, big_b: f64) -> Result<Self> {
        need(big_a >= 0.0, "A >= 0")?;
        need(1.0 + 2.0 * big_b > 0.0, "1 + 2B > 0")?;
        let s = SqrtDrift { a, b, big_a, big_b };
        need(a + s.m() + 1.0 > 0.0, "a + sqrt(1 + 2B) + 1 > 0")?;
        Ok(s)
    }

    pub fn m(&self) -> f64 {
        (1.0 + 2.0 * self.big_b).sqrt()
    }
}

impl Model for SqrtDrift {
    fn diffusion(&self) -> DiffusionSpec {
        let (a, b) = (self.a, self.b);
        DiffusionSpec::new(
            "sqrt-drift",
            1.0,
            1.0,
            move |x: f64| a - b * x.sqrt(),
            move |x: f64| a * x.ln() - 2.0 * b * x.sqrt(),
        )
        .with_derivative(move |x: f64| -b / (2.0 * x.sqrt()))
    }

    fn potential(&self) -> PotentialSpec {
        let (a, b, ca, cb) = (self.a, self.b, self.big_a, self.big_b);
        PotentialSpec::power_sum(vec![
            ((ca - b * b / 2.0) / 2.0, 0.0),
            ((a - a * a / 2.0 + cb) / 2.0, -1.0),
            ((a * b - b / 2.0) / 2.0, -0.5),
        ])
    }

    fn riccati(&self) -> RiccatiParams {
        RiccatiParams::linear(self.big_a, self.big_b)
    }

    fn log_density(&self, t: f64, x: f64, y: f64) -> Result<f64> {
        check_txy(t, x, y)?;
        Ok(-t.ln() + (1.0 - self.a) / 2.0 * (x / y).ln() + self.b * (x.sqrt() - y.sqrt())
            - self.big_a * t / 2.0
            - (x + y) / t
            + ln_i(self.m(), 2.0 * (x * y).sqrt() / t)?)
    }

    fn conserves_mass(&self) -> bool {
        false
    }

    /// x^{(1-a)/2} e^{b sqrt x} I_m(sqrt(2Ax))
    fn stationary(&self, y: f64) -> f64 {
        let l = (1.0 - self.a) / 2.0 * y.ln() + self.b * y.sqrt();
        if self.big_a == 0.0 {
            return (l + self.m() / 2.0 * y.ln()).exp();
        }
        (l + ln_i(self.m(), (2.0 * self.big_a * y).sqrt()).unwrap_or(f64::NAN)).exp()
    }

    fn transform_rhs(&self, lambda: f64, t: f64, x: f64) -> Result<f64> {
        check_tx(t, x)?;
        let q = 1.0 + lambda * t;
        if !(q > 0.0) {
            return domain(format!("1 + lambda t = {q} <= 0"));
        }
        let ca = self.big_a;
        let base = (0.5 - self.a / 2.0) * x.ln() - q.ln() + self.b * x.sqrt() - lambda * (x + ca * t * t / 2.0) / q;
        if ca == 0.0 {
            return Ok((base + self.m() / 2.0 * x.ln() - self.m() * q.ln()).exp());
        }
        Ok((base + ln_i(self.m(), (2.0 * ca * x).sqrt() / q)?).exp())
    }

    /// Expand e^{-b sqrt y} and integrate each power against the Bessel kernel.
    fn expectation_closed(&self, lambda: f64, t: f64, x: f64) -> Option<Result<f64>> {
        Some((|| {
            check_tx(t, x)?;
            let al = lambda + 1.0 / t;
            if !(al > 0.0) {
                return domain(format!("lambda + 1/t = {al} <= 0"));
            }
            let (a, b, m) = (self.a, self.b, self.m());
            let beta = x.sqrt() / t;
            let pre = -t.ln() + (1.0 - a) / 2.0 * x.ln() + b * x.sqrt() - self.big_a * t / 2.0 - x / t;
            let mut sum = 0.0;
            let mut ln_fact = 0.0;
            let mut small = 0;
            for j in 0..MAX_TERMS {
                if j > 0 {
                    ln_fact += (j as f64).ln();
                }
                let l = ln_bessel_laplace((a + j as f64) / 2.0, m / 2.0, al, beta)?;
                let mag = if b == 0.0 {
                    if j == 0 {
                        1.0
                    } else {
                        0.0
                    }
                } else {
                    (j as f64 * b.abs().ln() - ln_fact + l + pre).exp()
                };
                let term = if j == 0 {
                    (l + pre).exp()
                } else if b > 0.0 && j % 2 == 1 {
                    -mag
                } else {
                    mag
                };
                sum += term;
                if term.abs() <= 1e-17 * sum.abs() {
                    small += 1;
                    if small >= 3 {
                        return Ok(sum);
                    }
                } else {
                    small = 0;
                }
            }
            Err(Error::Convergence(format!("series for the expectation did not settle in {MAX_TERMS} terms")))
        })())
    }

    fn power_at_zero(&self) -> Option<f64> {
        Some((self.a - 1.0) / 2.0 + self.m() / 2.0)
    }
}
