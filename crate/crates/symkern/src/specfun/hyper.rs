use super::gamma::gamma_ln_signed;
use super::EvalPolicy;
use crate::error::{domain, Error, Result};

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

fn series_1f1(a: f64, b: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut log_scale = 0.0;
    let limit = policy.max_terms + 2 * z.abs().ceil() as usize + a.abs().ceil() as usize;
    for k in 0..limit {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term == 0.0 {
            return Ok(sum * log_scale_exp(log_scale)?);
        }
        if sum.abs() > 1e250 {
            sum *= 1e-250;
            term *= 1e-250;
            log_scale += 250.0 * std::f64::consts::LN_10;
        }
        let past_turn = kf > a.abs() && kf > z.abs() * (a + kf).abs() / (b + kf).abs() - 1.0;
        if past_turn && term.abs() < policy.rel_tol * 1e-3 * sum.abs() {
            return Ok(sum * log_scale_exp(log_scale)?);
        }
    }
    Err(Error::Convergence(format!("1F1({a}, {b}, {z}) series did not converge in {limit} terms")))
}

fn log_scale_exp(s: f64) -> Result<f64> {
    if s > 709.0 {
        return Err(Error::Overflow("1F1 exceeds double range".into()));
    }
    Ok(s.exp())
}

// Gamma(b)/Gamma(a) e^z z^{a-b} sum (b-a)_k (1-a)_k / (k! z^k); None if the series stalls early.
fn asymptotic_1f1(a: f64, b: f64, z: f64, policy: &EvalPolicy) -> Result<Option<f64>> {
    let mut term = 1.0f64;
    let mut sum = 1.0;
    let mut converged = false;
    for k in 0..policy.max_terms {
        let kf = k as f64;
        let next = term * (b - a + kf) * (1.0 - a + kf) / ((kf + 1.0) * z);
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < policy.rel_tol * 1e-3 * sum.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Ok(None);
    }
    let (lgb, sb) = gamma_ln_signed(b)?;
    let (lga, sa) = gamma_ln_signed(a)?;
    let l = lgb - lga + z + (a - b) * z.ln() + sum.abs().ln();
    if l > 709.0 {
        return Err(Error::Overflow(format!("1F1({a}, {b}, {z}) exceeds double range")));
    }
    Ok(Some(sb * sa * sum.signum() * l.exp()))
}

/// Kummer's function M(a, b, z) = 1F1(a; b; z).
pub fn hypergeom_1f1(a: f64, b: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !z.is_finite() {
        return domain(format!("1F1 needs finite arguments, got ({a}, {b}, {z})"));
    }
    if is_nonpositive_integer(b) {
        return Err(Error::Pole(format!("1F1 has a pole at b = {b}")));
    }
    if z == 0.0 || a == 0.0 {
        return Ok(1.0);
    }
    if is_nonpositive_integer(a) {
        return series_1f1(a, b, z, policy);
    }
    if z < 0.0 {
        // Kummer transformation turns the alternating series into a positive one
        let m = hypergeom_1f1(b - a, b, -z, policy)?;
        return Ok(z.exp() * m);
    }
    if z > 60.0 && z > 4.0 * (a.abs() + b.abs()) {
        if let Some(v) = asymptotic_1f1(a, b, z, policy)? {
            return Ok(v);
        }
    }
    series_1f1(a, b, z, policy)
}

// U(a,b,z) ~ z^{-a} sum (a)_k (a-b+1)_k (-1/z)^k / k!; returns (value, last term ratio)
fn asymptotic_u(a: f64, b: f64, z: f64, policy: &EvalPolicy) -> (f64, f64) {
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for k in 0..policy.max_terms {
        let kf = k as f64;
        let next = -term * (a + kf) * (a - b + 1.0 + kf) / ((kf + 1.0) * z);
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    (z.powf(-a) * sum, (term / sum).abs())
}

/// Tricomi's confluent hypergeometric function U(a, b, z) for z > 0.
pub fn tricomi_u(a: f64, b: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return domain(format!("U(a, b, z) needs z > 0, got {z}"));
    }
    if !a.is_finite() || !b.is_finite() {
        return domain(format!("U needs finite parameters, got ({a}, {b})"));
    }
    if a == 0.0 {
        return Ok(1.0);
    }
    if is_nonpositive_integer(a) {
        // (-1)^n sum_k (b+k)_{n-k} (-n)_k z^k / k!
        let n = (-a) as usize;
        let mut sum = 0.0;
        let mut zk = 1.0; // (-n)_k z^k / k!
        for k in 0..=n {
            let mut poch = 1.0;
            for j in k..n {
                poch *= b + j as f64;
            }
            sum += poch * zk;
            zk *= (k as f64 - n as f64) * z / (k as f64 + 1.0);
        }
        return Ok(if n.is_multiple_of(2) { sum } else { -sum });
    }
    let tol = policy.rel_tol * 1e-2;
    let mut z0 = 40f64.max(4.0 * (a.abs() + (a - b + 1.0).abs()) + 20.0);
    loop {
        if z >= z0 {
            let (v, err) = asymptotic_u(a, b, z, policy);
            if err < tol {
                return Ok(v);
            }
        }
        let (u0, e0) = asymptotic_u(a, b, z0, policy);
        let (u1, e1) = asymptotic_u(a + 1.0, b + 1.0, z0, policy);
        if e0 < tol && e1 < tol {
            return taylor_walk(a, b, z0, u0, -a * u1, z);
        }
        z0 *= 2.0;
        if z0 > 1e6 {
            return Err(Error::Convergence(format!("no asymptotic anchor for U({a}, {b}, {z})")));
        }
    }
}

// Integrate z w'' + (b - z) w' - a w = 0 from (zc, w, w') to target by Taylor steps.
fn taylor_walk(a: f64, b: f64, mut zc: f64, mut w: f64, mut dw: f64, target: f64) -> Result<f64> {
    let mut steps = 0;
    while zc != target {
        let mut h = -(0.5 * zc).min(2.0);
        if zc + h <= target || (zc - target) < 1e-12 * zc {
            h = target - zc;
        }
        // scaled coefficients d_n = c_n h^n
        let mut d0 = w;
        let mut d1 = dw * h;
        let mut val = d0 + d1;
        let mut der = d1;
        let mut small = 0;
        for n in 0..2000 {
            let nf = n as f64;
            let d2 = (-(nf + 1.0) * (nf + b - zc) * d1 * h + (nf + a) * d0 * h * h) / (zc * (nf + 2.0) * (nf + 1.0));
            val += d2;
            der += (nf + 2.0) * d2;
            d0 = d1;
            d1 = d2;
            let scale = val.abs() + der.abs() + 1e-300;
            if d2.abs() < 1e-18 * scale {
                small += 1;
                if small >= 2 {
                    break;
                }
            } else {
                small = 0;
            }
        }
        w = val;
        dw = der / h;
        zc += h;
        steps += 1;
        if steps > 10_000 || !w.is_finite() {
            return Err(Error::Convergence(format!("U({a}, {b}, {target}) Taylor walk")));
        }
    }
    Ok(w)
}

/// Whittaker M_{k,m}(z) = e^{-z/2} z^{m+1/2} 1F1(m - k + 1/2, 1 + 2m, z).
pub fn whittaker_m(k: f64, m: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(z > 0.0) {
        return domain(format!("M_(k,m)(z) needs z > 0, got {z}"));
    }
    if is_nonpositive_integer(1.0 + 2.0 * m) {
        return Err(Error::Pole(format!("M_(k,m) undefined for 1 + 2m = {}", 1.0 + 2.0 * m)));
    }
    let f = hypergeom_1f1(m - k + 0.5, 1.0 + 2.0 * m, z, policy)?;
    Ok((-0.5 * z + (m + 0.5) * z.ln()).exp() * f)
}

/// Whittaker W_{k,m}(z) = e^{-z/2} z^{m+1/2} U(1/2 + m - k, 1 + 2m, z).
pub fn whittaker_w(k: f64, m: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(z > 0.0) {
        return domain(format!("W_(k,m)(z) needs z > 0, got {z}"));
    }
    let u = tricomi_u(0.5 + m - k, 1.0 + 2.0 * m, z, policy)?;
    Ok((-0.5 * z + (m + 0.5) * z.ln()).exp() * u)
}
