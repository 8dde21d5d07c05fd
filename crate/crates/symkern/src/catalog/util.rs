use crate::error::{validity, Error, Result};
use crate::specfun::{gamma_ln, hypergeom_1f1, ln_bessel_i, EvalPolicy};

pub(crate) fn pol() -> EvalPolicy {
    EvalPolicy::default()
}

pub(crate) fn ln_i(nu: f64, z: f64) -> Result<f64> {
    ln_bessel_i(nu, z, &pol())
}

/// ln sinh(h) for h > 0 without overflow.
pub(crate) fn ln_sinh(h: f64) -> f64 {
    if h > 20.0 {
        h - std::f64::consts::LN_2 + (-(-2.0 * h).exp()).ln_1p()
    } else {
        h.sinh().ln()
    }
}

/// ln cosh(y) without overflow.
pub(crate) fn ln_cosh(y: f64) -> f64 {
    let a = y.abs();
    a - std::f64::consts::LN_2 + (-2.0 * a).exp().ln_1p()
}

pub(crate) fn coth(h: f64) -> f64 {
    1.0 / h.tanh()
}

/// sinh(r t)/r, continuous at r = 0.
pub(crate) fn sinhc(r: f64, t: f64) -> f64 {
    if r * t < 1e-8 {
        t * (1.0 + (r * t).powi(2) / 6.0)
    } else {
        (r * t).sinh() / r
    }
}

/// Log of `integral_0^inf y^{m - 1/2} e^{-alpha y} I_{2nu}(2 beta sqrt(y)) dy`
/// = ln[Gamma(m + nu + 1/2)/Gamma(2nu + 1) beta^{2nu} alpha^{-(m + nu + 1/2)} 1F1(m + nu + 1/2; 2nu + 1; beta^2/alpha)].
pub(crate) fn ln_bessel_laplace(m: f64, nu: f64, alpha: f64, beta: f64) -> Result<f64> {
    let c = m + nu + 0.5;
    if !(c > 0.0) || !(alpha > 0.0) || !(2.0 * nu + 1.0 > 0.0) {
        return Err(Error::Domain(format!("Bessel Laplace integral diverges (m = {m}, nu = {nu}, alpha = {alpha})")));
    }
    let z = beta * beta / alpha;
    let f = hypergeom_1f1(c, 2.0 * nu + 1.0, z, &pol())?;
    Ok(gamma_ln(c)? - gamma_ln(2.0 * nu + 1.0)? + 2.0 * nu * beta.ln() - c * alpha.ln() + f.ln())
}

pub(crate) fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        validity(format!("parameter constraint violated: {what}"))
    }
}

pub(crate) fn get(p: &crate::catalog::Params, k: &str) -> f64 {
    p.get(k).copied().unwrap_or(f64::NAN)
}
