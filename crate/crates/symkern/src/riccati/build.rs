use super::DiffusionSpec;
use crate::error::{domain, Error, Result};
use crate::specfun::{bessel_i_scaled, bessel_k_scaled, EvalPolicy};

// y(x) = sqrt(x) Z(s), s = sqrt(2 A x)/sigma, Z = c1 I_a + c2 (I_{-a} or K_a).
// Returns (ln|Z| - s, s Z'/Z) from exponentially scaled Bessel values.
#[derive(Clone, Copy)]
struct Linearised {
    a: f64,
    sigma: f64,
    alpha: f64,
    c1: f64,
    c2: f64,
    integer: bool,
}

impl Linearised {
    fn parts(&self, x: f64) -> (f64, f64) {
        let p = EvalPolicy::default();
        let al = self.alpha;
        if self.a == 0.0 {
            // power solutions x^{+-alpha/2}; log solution when alpha = 0
            let lx = x.ln();
            if al == 0.0 {
                let z = self.c1 + self.c2 * lx;
                return (z.abs().ln(), 2.0 * self.c2 / z);
            }
            let (u, v) = (self.c1 * (0.5 * al * lx).exp(), self.c2 * (-0.5 * al * lx).exp());
            return ((u + v).abs().ln(), al * (u - v) / (u + v));
        }
        let s = (2.0 * self.a * x).sqrt() / self.sigma;
        let i0 = bessel_i_scaled(al, s, &p).unwrap_or(f64::NAN);
        let i1 = bessel_i_scaled(al + 1.0, s, &p).unwrap_or(f64::NAN);
        let mut z = self.c1 * i0;
        let mut dz = self.c1 * (s * i1 + al * i0);
        if self.c2 != 0.0 {
            if self.integer {
                // K_a scaled by e^{s}; bring it to the e^{-s} scale of I
                let e = (-2.0 * s).exp();
                let k0 = bessel_k_scaled(al, s, &p).unwrap_or(f64::NAN) * e;
                let k1 = bessel_k_scaled(al + 1.0, s, &p).unwrap_or(f64::NAN) * e;
                z += self.c2 * k0;
                dz += self.c2 * (-s * k1 + al * k0);
            } else {
                let m0 = bessel_i_scaled(-al, s, &p).unwrap_or(f64::NAN);
                let m1 = bessel_i_scaled(1.0 - al, s, &p).unwrap_or(f64::NAN);
                z += self.c2 * m0;
                dz += self.c2 * (s * m1 - al * m0);
            }
        }
        (z.abs().ln(), dz / z)
    }

    fn z_sign(&self, x: f64) -> f64 {
        let p = EvalPolicy::default();
        if self.a == 0.0 {
            let lx = x.ln();
            if self.alpha == 0.0 {
                return (self.c1 + self.c2 * lx).signum();
            }
            return (self.c1 * (0.5 * self.alpha * lx).exp() + self.c2 * (-0.5 * self.alpha * lx).exp()).signum();
        }
        let s = (2.0 * self.a * x).sqrt() / self.sigma;
        let i0 = bessel_i_scaled(self.alpha, s, &p).unwrap_or(f64::NAN);
        let other = if self.c2 == 0.0 {
            0.0
        } else if self.integer {
            bessel_k_scaled(self.alpha, s, &p).unwrap_or(f64::NAN) * (-2.0 * s).exp()
        } else {
            bessel_i_scaled(-self.alpha, s, &p).unwrap_or(f64::NAN)
        };
        (self.c1 * i0 + self.c2 * other).signum()
    }
}

/// Drift f = 2 sigma x y'/y solving `sigma x f' - sigma f + f^2/2 = A x + B`,
/// y = sqrt(x) (c1 I_alpha + c2 I_{-alpha})(sqrt(2Ax)/sigma), alpha = sqrt(2B + sigma^2)/sigma,
/// with K_alpha in place of I_{-alpha} for integer alpha. F = 2 sigma ln y.
pub fn build_drift(a: f64, b: f64, sigma: f64, c1: f64, c2: f64) -> Result<DiffusionSpec> {
    if !(a >= 0.0) || !(sigma > 0.0) {
        return domain(format!("build_drift needs A >= 0 and sigma > 0, got A={a}, sigma={sigma}"));
    }
    if !(2.0 * b + sigma * sigma > 0.0) {
        return domain(format!("build_drift needs 2B + sigma^2 > 0, got {}", 2.0 * b + sigma * sigma));
    }
    if c1 == 0.0 && c2 == 0.0 {
        return domain("build_drift needs (c1, c2) != (0, 0)");
    }
    let alpha = (2.0 * b + sigma * sigma).sqrt() / sigma;
    let lin = Linearised { a, sigma, alpha, c1, c2, integer: alpha == alpha.round() };
    // scan (0, 100] for a zero of y, which would make the drift singular
    let grid: Vec<f64> = (0..=600).map(|i| 1e-8 * 10f64.powf(i as f64 / 60.0)).collect();
    let mut prev = (grid[0], lin.z_sign(grid[0]));
    for &x in &grid[1..] {
        let sg = lin.z_sign(x);
        if sg.is_nan() {
            return Err(Error::SingularDrift(format!("Bessel evaluation failed near x = {x}")));
        }
        if sg != prev.1 {
            let (mut lo, mut hi) = (prev.0, x);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if lin.z_sign(mid) == prev.1 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Err(Error::SingularDrift(format!(
                "y vanishes at x = {:.12e}; the drift has a pole there",
                0.5 * (lo + hi)
            )));
        }
        prev = (x, sg);
    }
    let l1 = lin;
    let l2 = lin;
    let l3 = lin;
    let drift = move |x: f64| sigma * (1.0 + l1.parts(x).1);
    // r = s Z'/Z obeys dr/ds = (s^2 + alpha^2 - r^2)/s, and ds/dx = s/(2x)
    let d_drift = move |x: f64| {
        let r = l3.parts(x).1;
        let s2 = 2.0 * l3.a * x / (sigma * sigma);
        sigma * (s2 + alpha * alpha - r * r) / (2.0 * x)
    };
    let anti = move |x: f64| {
        let (lz, _) = l2.parts(x);
        let s = if l2.a == 0.0 { 0.0 } else { (2.0 * l2.a * x).sqrt() / l2.sigma };
        2.0 * sigma * (0.5 * x.ln() + lz + s)
    };
    Ok(DiffusionSpec::new(format!("built(A={a}, B={b}, sigma={sigma}, c1={c1}, c2={c2})"), 1.0, sigma, drift, anti)
        .with_derivative(d_drift))
}
