use std::f64::consts::PI;

use super::gamma::gamma_ln;
use super::EvalPolicy;
use crate::error::{domain, Error, Result};

// Taylor coefficients of 1/Gamma(1 + x) about 0, used for Temme's gamma_1, gamma_2.
const RGAMMA1P: [f64; 30] = [
    1.0,
    0.577_215_664_901_532_860_6,
    -0.655_878_071_520_253_881_1,
    -0.042_002_635_034_095_235_53,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_75,
    -0.009_621_971_527_876_973_562,
    0.007_218_943_246_663_099_542,
    -0.001_165_167_591_859_065_112,
    -0.000_215_241_674_114_950_972_8,
    0.000_128_050_282_388_116_186_2,
    -0.000_020_134_854_780_788_238_66,
    -0.000_001_250_493_482_142_670_657,
    0.000_001_133_027_231_981_695_882,
    -2.056_338_416_977_607_103e-7,
    6.116_095_104_481_415_818e-9,
    5.002_007_644_469_222_930e-9,
    -1.181_274_570_487_020_145e-9,
    1.043_426_711_691_100_510e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783e-14,
    -5.348_122_539_423_017_982e-15,
    1.226_778_628_238_260_790e-15,
    -1.181_259_301_697_458_770e-16,
    1.186_692_254_751_600_333e-18,
    1.412_380_655_318_031_782e-18,
    -2.298_745_684_435_370_207e-19,
    1.714_406_321_927_337_433e-20,
];

// A number kept as mantissa * e^log_scale so that recurrences and sums never overflow.
#[derive(Clone, Copy, Debug)]
struct Scaled {
    m: f64,
    log_scale: f64,
}

impl Scaled {
    fn ln(self) -> f64 {
        self.m.ln() + self.log_scale
    }
}

fn is_integer(x: f64) -> bool {
    x == x.round()
}

/// ln I_nu(z) by the ascending series, nu > -1, z > 0; every term is positive.
fn ln_i_series(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    let q = 0.25 * z * z;
    let lead = nu * (0.5 * z).ln() - gamma_ln(nu + 1.0)?;
    let limit = policy.max_terms + 2 * z.ceil() as usize;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut log_scale = 0.0;
    for k in 0..limit {
        let kf = k as f64;
        term *= q / ((kf + 1.0) * (kf + nu + 1.0));
        sum += term;
        if sum > 1e250 {
            sum *= 1e-250;
            term *= 1e-250;
            log_scale += 250.0 * std::f64::consts::LN_10;
        }
        if term < policy.rel_tol * 1e-3 * sum && kf + 1.0 > 0.5 * z {
            return Ok(lead + sum.ln() + log_scale);
        }
    }
    Err(Error::Convergence(format!("I_{nu}({z}) series did not converge in {limit} terms")))
}

/// e^{-z} I_nu(z) by the Hankel expansion; depends on nu only through nu^2.
fn i_scaled_asymptotic(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..=policy.max_terms {
        let j = (2 * k - 1) as f64;
        term *= -(mu - j * j) / (k as f64 * 8.0 * z);
        if term.abs() > prev {
            break;
        }
        sum += term;
        prev = term.abs();
        if term.abs() < policy.rel_tol * 1e-3 * sum.abs() {
            return Ok(sum / (2.0 * PI * z).sqrt());
        }
    }
    if prev < policy.rel_tol * sum.abs() {
        Ok(sum / (2.0 * PI * z).sqrt())
    } else {
        Err(Error::Convergence(format!("Hankel expansion of I_{nu}({z}) stalled at relative term {prev:e}")))
    }
}

fn use_asymptotic(nu: f64, z: f64) -> bool {
    z > 30f64.max(0.25 * nu * nu)
}

/// ln I_nu(z) for nu > -1 (or any integer nu).
pub fn ln_bessel_i(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(z >= 0.0) || !z.is_finite() || !nu.is_finite() {
        return domain(format!("I_nu needs finite z >= 0, got nu={nu}, z={z}"));
    }
    let nu = if nu < 0.0 && is_integer(nu) { -nu } else { nu };
    if nu <= -1.0 {
        let v = bessel_i(nu, z, policy)?;
        if v > 0.0 {
            return Ok(v.ln());
        }
        return domain(format!("I_{nu}({z}) = {v} is not positive"));
    }
    if z == 0.0 {
        return Ok(if nu == 0.0 { 0.0 } else { f64::NEG_INFINITY });
    }
    if use_asymptotic(nu, z) {
        Ok(i_scaled_asymptotic(nu, z, policy)?.ln() + z)
    } else {
        ln_i_series(nu, z, policy)
    }
}

/// e^{-z} I_nu(z), finite for all z >= 0.
pub fn bessel_i_scaled(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(z >= 0.0) || !z.is_finite() || !nu.is_finite() {
        return domain(format!("I_nu needs finite z >= 0, got nu={nu}, z={z}"));
    }
    if nu < 0.0 && !is_integer(nu) && nu <= -1.0 {
        // I_{-m} = I_m + (2/pi) sin(m pi) K_m
        let m = -nu;
        if z == 0.0 {
            return Err(Error::Overflow(format!("I_{nu}(0) is infinite")));
        }
        let i = bessel_i_scaled(m, z, policy)?;
        let k = bessel_k_scaled(m, z, policy)?;
        return Ok(i + 2.0 / PI * (m * PI).sin() * k * (-2.0 * z).exp());
    }
    if z == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 || is_integer(nu) {
            Ok(0.0)
        } else {
            Err(Error::Overflow(format!("I_{nu}(0) is infinite")))
        };
    }
    let nu = if nu < 0.0 && is_integer(nu) { -nu } else { nu };
    if use_asymptotic(nu, z) {
        i_scaled_asymptotic(nu, z, policy)
    } else {
        Ok((ln_i_series(nu, z, policy)? - z).exp())
    }
}

/// I_nu(z). Overflow is reported as an error rather than infinity.
pub fn bessel_i(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if nu < 0.0 && !is_integer(nu) && nu <= -1.0 {
        let m = -nu;
        let i = bessel_i(m, z, policy)?;
        let k = bessel_k(m, z, policy)?;
        return Ok(i + 2.0 / PI * (m * PI).sin() * k);
    }
    if z > 700.0 {
        let l = ln_bessel_i(nu, z, policy)?;
        if l > 709.0 {
            return Err(Error::Overflow(format!("I_{nu}({z}) exceeds double range; use the scaled variant")));
        }
        return Ok(l.exp());
    }
    Ok(bessel_i_scaled(nu, z, policy)? * z.exp())
}

fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    // gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    let mut p = 1.0;
    for (k, c) in RGAMMA1P.iter().enumerate() {
        if k % 2 == 0 {
            gam2 += c * p;
        } else {
            gam1 -= c * p;
            p *= mu * mu;
        }
    }
    let odd: f64 = RGAMMA1P.iter().enumerate().filter(|(k, _)| k % 2 == 1).map(|(k, c)| c * mu.powi(k as i32)).sum();
    let gampl = gam2 + odd; // 1/Gamma(1+mu)
    let gammi = gam2 - odd; // 1/Gamma(1-mu)
    (gam1, gam2, gampl, gammi)
}

// (e^z K_mu(z), e^z K_{mu+1}(z)) for |mu| <= 1/2
fn k_pair_scaled(mu: f64, z: f64, eps: f64) -> Result<(f64, f64)> {
    if z < 2.0 {
        // Temme's series
        let x2 = 0.5 * z;
        let pimu = PI * mu;
        let fact = if pimu.abs() < 1e-15 { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = mu * d;
        let fact2 = if e.abs() < 1e-15 { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mut i = 1.0;
        loop {
            ff = (i * ff + p + q) / (i * i - mu * mu);
            c *= dd / i;
            p /= i - mu;
            q /= i + mu;
            let del = c * ff;
            sum += del;
            sum1 += c * (p - i * ff);
            if del.abs() < sum.abs() * eps {
                break;
            }
            i += 1.0;
            if i > 500.0 {
                return Err(Error::Convergence(format!("Temme series for K_{mu}({z})")));
            }
        }
        let s = z.exp();
        Ok((sum * s, sum1 * 2.0 / z * s))
    } else {
        // Steed's continued fraction
        let mut b = 2.0 * (1.0 + z);
        let mut d = 1.0 / b;
        let mut delh = d;
        let mut h = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - mu * mu;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut i = 1.0;
        loop {
            a -= 2.0 * i;
            c = -a * c / (i + 1.0);
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < eps {
                break;
            }
            i += 1.0;
            if i > 10_000.0 {
                return Err(Error::Convergence(format!("Steed fraction for K_{mu}({z})")));
            }
        }
        h *= a1;
        let kmu = (PI / (2.0 * z)).sqrt() / s;
        Ok((kmu, kmu * (mu + z + 0.5 - h) / z))
    }
}

fn ln_k_scaled(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return domain(format!("K_nu needs z > 0, got {z}"));
    }
    if !nu.is_finite() {
        return domain("K_nu needs a finite order");
    }
    let nu = nu.abs();
    let nl = (nu + 0.5).floor();
    let mu = nu - nl;
    let eps = policy.rel_tol.clamp(1e-17, 1e-16);
    let (k0, k1) = k_pair_scaled(mu, z, eps)?;
    let mut lo = Scaled { m: k0, log_scale: 0.0 };
    let mut hi = Scaled { m: k1, log_scale: 0.0 };
    for i in 1..=(nl as usize) {
        let next = 2.0 * (mu + i as f64) / z * hi.m + lo.m * (lo.log_scale - hi.log_scale).exp();
        lo = hi;
        hi = Scaled { m: next, log_scale: hi.log_scale };
        if hi.m > 1e250 {
            hi.m *= 1e-250;
            hi.log_scale += 250.0 * std::f64::consts::LN_10;
        }
    }
    Ok(lo.ln())
}

/// e^z K_nu(z).
pub fn bessel_k_scaled(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    let l = ln_k_scaled(nu, z, policy)?;
    if l > 709.0 {
        return Err(Error::Overflow(format!("K_{nu}({z}) exceeds double range")));
    }
    Ok(l.exp())
}

/// ln K_nu(z).
pub fn ln_bessel_k(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    Ok(ln_k_scaled(nu, z, policy)? - z)
}

/// K_nu(z), z > 0. Integer orders are computed directly (no limiting average).
pub fn bessel_k(nu: f64, z: f64, policy: &EvalPolicy) -> Result<f64> {
    let l = ln_bessel_k(nu, z, policy)?;
    if l > 709.0 {
        return Err(Error::Overflow(format!("K_{nu}({z}) exceeds double range")));
    }
    Ok(l.exp())
}
