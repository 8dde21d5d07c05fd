use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, Poisson, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec};

/// Singular killing rates are evaluated at max(x, X_FLOOR).
pub const X_FLOOR: f64 = 1e-8;
/// Largest tolerated fraction of paths ending in NaN or infinity.
pub const MAX_FAILURE_RATE: f64 = 1e-3;
pub const MIN_PATHS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    EulerFullTruncation,
    /// Exact transitions of BESQ(n); needs gamma = 1, sigma = 2 and constant drift n.
    ExactBesq,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McSpec {
    pub n_paths: usize,
    pub n_steps: usize,
    pub scheme: Scheme,
    pub seed: u64,
    pub antithetic: bool,
}

impl Default for McSpec {
    fn default() -> Self {
        McSpec { n_paths: 100_000, n_steps: 2000, scheme: Scheme::EulerFullTruncation, seed: 0, antithetic: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    /// Samples entering the estimate (antithetic pairs count once).
    pub samples: usize,
    pub failed_paths: usize,
    /// Fraction of killing-rate evaluations clipped at X_FLOOR.
    pub clip_rate: f64,
}

type F = std::sync::Arc<dyn Fn(f64) -> f64 + Send + Sync>;

// Dynamics after the change of variable z = x^2 for gamma = 0.
struct Plan {
    gamma: f64,
    sigma: f64,
    drift: F,
    killing: F,
    singular: bool,
    killed: bool,
    // test function exponent in the simulated variable
    power: f64,
    x0: f64,
    besq_dim: Option<f64>,
}

fn plan(diff: &DiffusionSpec, pot: &PotentialSpec, power: f64, x: f64, scheme: Scheme) -> Result<Plan> {
    let (p1, p2) = (pot.clone(), pot.clone());
    let killed = !pot.is_zero();
    let singular = pot.singular_at_origin();
    if diff.gamma == 0.0 {
        let (s, d) = (diff.sigma, diff.clone());
        return Ok(Plan {
            gamma: 1.0,
            sigma: 4.0 * s,
            drift: std::sync::Arc::new(move |z: f64| {
                let r = z.sqrt();
                2.0 * s + 2.0 * r * d.drift(r)
            }),
            killing: std::sync::Arc::new(move |z: f64| p1.eval(z.sqrt())),
            singular,
            killed,
            power: power / 2.0,
            x0: x * x,
            besq_dim: None,
        });
    }
    let besq_dim = match scheme {
        Scheme::EulerFullTruncation => None,
        Scheme::ExactBesq => {
            let n = diff.drift(1.0);
            let constant = [0.5, 2.0, 7.0].iter().all(|&y| diff.drift(y) == n);
            if diff.gamma != 1.0 || diff.sigma != 2.0 || !constant || !(n > 0.0) {
                return Err(Error::Capability("exact sampling needs a BESQ(n) generator 2x d^2 + n d".into()));
            }
            Some(n)
        }
    };
    let d = diff.clone();
    Ok(Plan {
        gamma: diff.gamma,
        sigma: diff.sigma,
        drift: std::sync::Arc::new(move |y| d.drift(y)),
        killing: std::sync::Arc::new(move |y| p2.eval(y)),
        singular,
        killed,
        power,
        x0: x,
        besq_dim,
    })
}

impl Plan {
    fn g(&self, x: f64, clips: &mut usize) -> f64 {
        if !self.killed {
            return 0.0;
        }
        if self.singular && x < X_FLOOR {
            *clips += 1;
            return (self.killing)(X_FLOOR);
        }
        (self.killing)(x.max(0.0))
    }

    fn payoff(&self, lambda: f64, x: f64, integral: f64) -> f64 {
        let xp = x.max(0.0);
        let test = if lambda == 0.0 { 0.0 } else { lambda * xp.powf(self.power) };
        (-test - integral).exp()
    }

    // full-truncation Euler; `sign` flips every normal for the antithetic partner
    fn euler(&self, rng: &mut ChaCha8Rng, sign: f64, lambda: f64, t: f64, n: usize, clips: &mut usize) -> f64 {
        let dt = t / n as f64;
        let mut x = self.x0;
        let mut integral = 0.0;
        for _ in 0..n {
            let xp = x.max(0.0);
            let z: f64 = StandardNormal.sample(rng);
            let var = if self.gamma == 1.0 { xp } else { xp.powf(self.gamma) };
            x += (self.drift)(xp.max(X_FLOOR)) * dt + sign * (2.0 * self.sigma * var * dt).sqrt() * z;
            integral += self.g(0.5 * (xp + x.max(0.0)), clips) * dt;
        }
        self.payoff(lambda, x, integral)
    }

    fn exact_besq(&self, rng: &mut ChaCha8Rng, dim: f64, lambda: f64, t: f64, n: usize, clips: &mut usize) -> f64 {
        // the transition is exact, so without killing one step covers [0, t]
        let n = if self.killed { n } else { 1 };
        let dt = t / n as f64;
        let mut x = self.x0;
        let mut integral = 0.0;
        let whole = dim == dim.round() && dim <= 64.0;
        // integer dimension: |B|^2 for an n-dimensional Brownian motion with |B_0|^2 = x
        let mut coords = vec![0.0f64; if whole { dim as usize } else { 0 }];
        if whole {
            coords[0] = x.sqrt();
        }
        let sd = dt.sqrt();
        for _ in 0..n {
            let prev = x;
            if whole {
                x = 0.0;
                for c in coords.iter_mut() {
                    let z: f64 = StandardNormal.sample(rng);
                    *c += sd * z;
                    x += *c * *c;
                }
            } else {
                // noncentral chi-square as a Poisson mixture of gammas
                let k =
                    if x > 0.0 { Poisson::new(x / (2.0 * dt)).map(|p| p.sample(rng)).unwrap_or(f64::NAN) } else { 0.0 };
                x = Gamma::new(0.5 * dim + k, 2.0 * dt).map(|g| g.sample(rng)).unwrap_or(f64::NAN);
            }
            integral += self.g(0.5 * (prev + x), clips) * dt;
        }
        self.payoff(lambda, x, integral)
    }
}

/// Estimate of E_x[exp(-lambda X_t^power - int_0^t g(X_s) ds)], the path integral by the
/// midpoint rule on each step, g taken at the mean of the endpoints. Near a 1/x singularity this
/// is markedly less biased than the trapezoid rule. Path i draws from the ChaCha8 stream i of `seed`, so the
/// result does not depend on thread scheduling.
pub fn mc_expectation(
    diff: &DiffusionSpec,
    pot: &PotentialSpec,
    lambda: f64,
    power: f64,
    t: f64,
    x: f64,
    spec: &McSpec,
) -> Result<McEstimate> {
    if !(t > 0.0) || !(x > 0.0) || !(lambda >= 0.0) {
        return domain(format!("Monte Carlo needs t > 0, x > 0, lambda >= 0; got t={t}, x={x}, lambda={lambda}"));
    }
    if spec.n_paths < MIN_PATHS || spec.n_steps == 0 {
        return domain(format!("Monte Carlo needs at least {MIN_PATHS} paths and one step"));
    }
    let p = plan(diff, pot, power, x, spec.scheme)?;
    let results: Vec<(f64, usize)> = (0..spec.n_paths)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            rng.set_stream(i as u64);
            let mut clips = 0;
            let run = |rng: &mut ChaCha8Rng, sign: f64, clips: &mut usize| match p.besq_dim {
                Some(dim) => p.exact_besq(rng, dim, lambda, t, spec.n_steps, clips),
                None => p.euler(rng, sign, lambda, t, spec.n_steps, clips),
            };
            if spec.antithetic && p.besq_dim.is_none() {
                let mut twin = rng.clone();
                let a = run(&mut rng, 1.0, &mut clips);
                let b = run(&mut twin, -1.0, &mut clips);
                (0.5 * (a + b), clips)
            } else {
                (run(&mut rng, 1.0, &mut clips), clips)
            }
        })
        .collect();
    let values: Vec<f64> = results.iter().map(|r| r.0).filter(|v| v.is_finite()).collect();
    let failed = results.len() - values.len();
    if failed as f64 > MAX_FAILURE_RATE * results.len() as f64 {
        return Err(Error::Scheme(format!("{failed} of {} paths produced non-finite values", results.len())));
    }
    let n = values.len() as f64;
    let mean = pairwise_sum(&values) / n;
    let dev: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
    let var = pairwise_sum(&dev) / (n - 1.0);
    let clips: usize = results.iter().map(|r| r.1).sum();
    let evals = results.len() as f64 * spec.n_steps as f64 * if spec.antithetic { 2.0 } else { 1.0 };
    Ok(McEstimate {
        estimate: mean,
        standard_error: (var / n).sqrt(),
        samples: values.len(),
        failed_paths: failed,
        clip_rate: clips as f64 / evals,
    })
}

/// Sum by recursive halving; the result depends only on the order of `v`.
pub fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 64 {
        return v.iter().sum();
    }
    let (a, b) = v.split_at(v.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}
