use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_ln(x: f64) -> f64 {
    // valid for x >= 0.5
    let z = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + s.ln()
}

/// ln Gamma(x) for x > 0.
pub fn gamma_ln(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("gamma_ln needs x > 0, got {x}"));
    }
    if x < 0.5 {
        // reflection keeps the Lanczos sum in its accurate range
        Ok((PI / (PI * x).sin()).ln() - lanczos_ln(1.0 - x))
    } else {
        Ok(lanczos_ln(x))
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Gamma(x) on the real line, with a pole error at 0, -1, -2, ...
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(format!("Gamma has a pole at {x}")));
    }
    if x > 0.0 {
        if x > 171.6 {
            return Err(Error::Overflow(format!("Gamma({x})")));
        }
        if x == x.round() && x < 30.0 {
            let mut f = 1.0;
            for k in 2..(x as u32) {
                f *= k as f64;
            }
            return Ok(f);
        }
        return Ok(gamma_ln(x)?.exp());
    }
    let s = (PI * x).sin();
    Ok(PI / (s * gamma(1.0 - x)?))
}

/// 1/Gamma(x), entire; zero at the poles of Gamma.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 171.6 {
        return (-gamma_ln(x).unwrap()).exp();
    }
    1.0 / gamma(x).unwrap()
}

/// ln|Gamma(x)| and the sign of Gamma(x).
pub fn gamma_ln_signed(x: f64) -> Result<(f64, f64)> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(format!("Gamma has a pole at {x}")));
    }
    if x > 0.0 {
        return Ok((gamma_ln(x)?, 1.0));
    }
    let s = (PI * x).sin();
    let (l, sg) = gamma_ln_signed(1.0 - x)?;
    Ok(((PI / s.abs()).ln() - l, s.signum() * sg))
}

pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        return -erf(-x);
    }
    if x < 2.5 {
        erf_series(x)
    } else {
        1.0 - erfc_cf(x)
    }
}

pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x < 2.5 {
        1.0 - erf_series(x)
    } else {
        erfc_cf(x)
    }
}

// 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (2n+1)!!, all terms positive
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    2.0 / PI.sqrt() * (-x2).exp() * sum
}

// modified Lentz on erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
fn erfc_cf(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..500 {
        let a = 0.5 * k as f64;
        d = x + a * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = x + a / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / (PI.sqrt() * f)
}
