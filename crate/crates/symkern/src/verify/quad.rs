use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_600_525_520,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];
// 10-point Gauss weights for the odd-indexed Kronrod nodes
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Interval bisections allowed per finite panel.
    pub max_subdivisions: usize,
    /// Geometric panels allowed beyond the last breakpoint before the tail is declared divergent.
    pub max_tail_panels: usize,
    /// A tail panel is negligible when its contribution is below this fraction of the running tolerance.
    pub tail_fraction: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 4000,
            max_tail_panels: 120,
            tail_fraction: 0.01,
        }
    }
}

/// Where the integrand on [0, inf) needs help: interior kinks or peaks, and a
/// power singularity y^s (s > -1) at the origin.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Hints {
    pub breakpoints: Vec<f64>,
    pub power_at_zero: Option<f64>,
}

impl Hints {
    pub fn at(points: &[f64]) -> Self {
        Hints { breakpoints: points.to_vec(), power_at_zero: None }
    }

    pub fn singular(mut self, s: f64) -> Self {
        self.power_at_zero = Some(s);
        self
    }
}

fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kr = WGK[10] * fc;
    let mut ga = 0.0;
    for i in 0..10 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        kr += WGK[i] * s;
        if i % 2 == 1 {
            ga += WG[i / 2] * s;
        }
    }
    (kr * h, ((kr - ga) * h).abs())
}

fn check_finite(v: f64, a: f64, b: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Convergence(format!("integrand not finite on [{a}, {b}]")))
    }
}

/// Adaptive Gauss-Kronrod (10/21) on a finite interval.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    integrate_with_error(&f, a, b, spec).map(|r| r.0)
}

fn integrate_with_error<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    if a == b {
        return Ok((0.0, 0.0));
    }
    let (v, e) = gk21(f, a, b);
    check_finite(v, a, b)?;
    let mut parts = vec![(a, b, v, e)];
    let mut total = v;
    let mut err = e;
    for _ in 0..spec.max_subdivisions {
        if err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            return Ok((total, err));
        }
        let (i, _) = parts.iter().enumerate().max_by(|x, y| x.1 .3.total_cmp(&y.1 .3)).unwrap();
        let (lo, hi, pv, pe) = parts.swap_remove(i);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // cannot split further; accept this piece as resolved
            parts.push((lo, hi, pv, 0.0));
            err -= pe;
            continue;
        }
        let (v1, e1) = gk21(f, lo, mid);
        let (v2, e2) = gk21(f, mid, hi);
        check_finite(v1 + v2, lo, hi)?;
        total += v1 + v2 - pv;
        err += e1 + e2 - pe;
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
    }
    // recompute to shed accumulated rounding in the running sums
    let total: f64 = parts.iter().map(|p| p.2).sum();
    let err: f64 = parts.iter().map(|p| p.3).sum();
    if err <= 10.0 * spec.abs_tol.max(spec.rel_tol * total.abs()) {
        return Ok((total, err));
    }
    Err(Error::Convergence(format!("adaptive quadrature on [{a}, {b}] stopped at error {err:e} for value {total:e}")))
}

/// Integral over [0, inf) with default hints.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    integrate_semi_infinite_hinted(f, &Hints::default(), spec)
}

/// Integral over [0, inf): caller breakpoints, then doubling panels until the tail is negligible.
pub fn integrate_semi_infinite_hinted<F: Fn(f64) -> f64>(f: F, hints: &Hints, spec: &QuadratureSpec) -> Result<f64> {
    let mut pts: Vec<f64> = hints.breakpoints.iter().copied().filter(|p| *p > 0.0 && p.is_finite()).collect();
    pts.sort_by(|a, b| a.total_cmp(b));
    pts.dedup();
    if pts.is_empty() {
        pts.push(1.0);
    }
    let mut total = 0.0;
    let first = pts[0];
    total += match hints.power_at_zero {
        Some(s) if s > -1.0 && s != 0.0 => {
            // y = first * v^q with q = 1/(1+s) removes the y^s behaviour
            let q = 1.0 / (1.0 + s);
            let g = |v: f64| {
                if v <= 0.0 {
                    return 0.0;
                }
                let y = first * v.powf(q);
                f(y) * first * q * v.powf(q - 1.0)
            };
            integrate_with_error(&g, 0.0, 1.0, spec)?.0
        }
        Some(s) if s <= -1.0 => {
            return Err(Error::Convergence(format!("y^{s} is not integrable at 0")));
        }
        _ => integrate_with_error(&f, 0.0, first, spec)?.0,
    };
    for w in pts.windows(2) {
        total += integrate_with_error(&f, w[0], w[1], spec)?.0;
    }
    let mut lo = *pts.last().unwrap();
    let mut width = lo.max(1.0);
    let mut quiet = 0;
    for _ in 0..spec.max_tail_panels {
        let hi = lo + width;
        let (v, _) = integrate_with_error(&f, lo, hi, spec)?;
        total += v;
        let tol = spec.tail_fraction * spec.abs_tol.max(spec.rel_tol * total.abs());
        if v.abs() <= tol {
            quiet += 1;
            if quiet >= 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        width *= 2.0;
    }
    Err(Error::Convergence(format!("tail beyond y = {lo:e} still contributes; integrand does not decay")))
}
