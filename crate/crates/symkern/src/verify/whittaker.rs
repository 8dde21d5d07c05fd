use super::{integrate_semi_infinite_hinted, Hints, QuadratureSpec};
use crate::error::{domain, Result};
use crate::specfun::{whittaker_w, EvalPolicy};

/// Forward transform: integral of (lambda y)^{-k-1/2} e^{-lambda y/2} W_{k+1/2, nu}(lambda y) phi(y) over (0, inf).
/// `hints` should declare the power of the whole integrand at 0 when it is singular.
/// With k = nu the kernel is e^{-lambda y} and this is the Laplace transform.
pub fn whittaker_forward(
    phi: &dyn Fn(f64) -> f64,
    k: f64,
    nu: f64,
    lambda: f64,
    hints: &Hints,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !(lambda > 0.0) {
        return domain(format!("whittaker transform needs lambda > 0, got {lambda}"));
    }
    let policy = EvalPolicy::default();
    let kernel = move |y: f64| {
        let z = lambda * y;
        let w = whittaker_w(k + 0.5, nu, z, &policy).unwrap_or(f64::NAN);
        z.powf(-k - 0.5) * (-0.5 * z).exp() * w
    };
    integrate_semi_infinite_hinted(
        |y| {
            if y <= 0.0 {
                return 0.0;
            }
            let v = phi(y);
            if v == 0.0 {
                0.0
            } else {
                kernel(y) * v
            }
        },
        hints,
        spec,
    )
}
