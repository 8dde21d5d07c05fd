use super::{riccati_lhs, DiffusionSpec, Family, PotentialSpec, RiccatiParams};
use crate::error::{domain, Error, Result};

const FIT_TOL: f64 = 1e-6;

// Target values and basis columns such that target = sum coef_j * basis_j.
fn design(family: Family, sigma: f64, gamma: f64, x: f64, lhs: f64) -> (f64, Vec<f64>) {
    let p = x.powf(2.0 - gamma);
    match family {
        Family::Linear => (lhs, vec![p, 1.0]),
        Family::Quadratic => (lhs, vec![0.5 * p * p, p, 1.0]),
        Family::Fractional => {
            let fixed = -3.0 * sigma.powi(3) * p / (4.0 * (2.0 - gamma));
            (lhs - fixed, vec![sigma * p * p, 4.0 * sigma / 3.0 * x.powf(3.0 - 1.5 * gamma), 1.0])
        }
        Family::LogConstant => {
            let xi = x.ln();
            (lhs - 0.5 * sigma * sigma * xi * xi, vec![2.0 * sigma * xi * xi, 1.0])
        }
        Family::LogLinear => {
            let xi = x.ln();
            (lhs - 0.5 * sigma * sigma * xi * xi, vec![4.0 * sigma / 3.0 * xi.powi(3), 2.0 * sigma * xi * xi, 1.0])
        }
    }
}

// Least squares by Householder QR; errors when the columns are (numerically) dependent.
#[allow(clippy::needless_range_loop)]
fn least_squares(rows: &[Vec<f64>], rhs: &[f64]) -> Result<Vec<f64>> {
    let m = rows.len();
    let n = rows[0].len();
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut b = rhs.to_vec();
    // equilibrate columns so the rank test is scale free
    let norms: Vec<f64> =
        (0..n).map(|j| a.iter().map(|r| r[j] * r[j]).sum::<f64>().sqrt().max(f64::MIN_POSITIVE)).collect();
    for r in a.iter_mut() {
        for j in 0..n {
            r[j] /= norms[j];
        }
    }
    for k in 0..n {
        let alpha = -(k..m).map(|i| a[i][k] * a[i][k]).sum::<f64>().sqrt().copysign(a[k][k]);
        let mut v: Vec<f64> = (k..m).map(|i| a[i][k]).collect();
        v[0] -= alpha;
        let vn: f64 = v.iter().map(|t| t * t).sum();
        if vn == 0.0 || alpha.abs() < 1e-10 {
            return Err(Error::Conditioning(format!("basis column {k} is dependent on the others")));
        }
        for j in k..n {
            let d: f64 = (k..m).map(|i| v[i - k] * a[i][j]).sum::<f64>() * 2.0 / vn;
            for i in k..m {
                a[i][j] -= d * v[i - k];
            }
        }
        let d: f64 = (k..m).map(|i| v[i - k] * b[i]).sum::<f64>() * 2.0 / vn;
        for i in k..m {
            b[i] -= d * v[i - k];
        }
    }
    let mut coef = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| a[k][j] * coef[j]).sum();
        coef[k] = (b[k] - s) / a[k][k];
    }
    Ok(coef.iter().zip(&norms).map(|(c, s)| c / s).collect())
}

/// Classify (f, g): the first family (fewest free constants first) whose fit
/// leaves a scaled residual below 1e-6 on the grid, or None.
pub fn fit_riccati(diff: &DiffusionSpec, pot: &PotentialSpec, grid: &[f64]) -> Result<Option<RiccatiParams>> {
    if grid.len() < 8 || grid.iter().any(|x| !(*x > 0.0) || !x.is_finite()) {
        return domain("fit grid needs at least 8 positive points");
    }
    let lhs: Vec<(f64, f64)> = grid.iter().map(|&x| riccati_lhs(diff, pot, x)).collect::<Result<_>>()?;
    let mut families: Vec<Family> = Family::for_gamma(diff.gamma).to_vec();
    families.sort_by_key(|f| f.free_parameters());
    let mut span_checked = false;
    for family in families {
        let mut rows = Vec::with_capacity(grid.len());
        let mut rhs = Vec::with_capacity(grid.len());
        let mut weights = Vec::with_capacity(grid.len());
        let mut col_max = Vec::new();
        let mut t_max = 1.0f64;
        for (&x, &(l, scale)) in grid.iter().zip(&lhs) {
            let (t, basis) = design(family, diff.sigma, diff.gamma, x, l);
            let w = 1.0 / scale.max(t.abs()).max(1.0);
            col_max.resize(basis.len(), 0.0f64);
            for (m, v) in col_max.iter_mut().zip(&basis) {
                *m = m.max(v.abs());
            }
            t_max = t_max.max(t.abs());
            rows.push(basis.iter().map(|v| v * w).collect::<Vec<_>>());
            rhs.push(t * w);
            weights.push(w);
        }
        let mut coef = least_squares(&rows, &rhs)?;
        // a coefficient whose whole term stays at rounding level is exactly zero
        for (c, m) in coef.iter_mut().zip(&col_max) {
            if (*c * m).abs() < 1e-12 * t_max {
                *c = 0.0;
            }
        }
        if !span_checked {
            let (lo, hi) = grid.iter().fold((f64::INFINITY, 0.0f64), |(l, h), x| (l.min(*x), h.max(*x)));
            if hi / lo < 10.0 {
                return domain("fit grid must span at least one decade");
            }
            span_checked = true;
        }
        let worst = rows
            .iter()
            .zip(&rhs)
            .map(|(r, t)| (r.iter().zip(&coef).map(|(a, c)| a * c).sum::<f64>() - t).abs())
            .fold(0.0f64, f64::max);
        if worst < FIT_TOL {
            let get = |i: usize| coef.get(i).copied().unwrap_or(0.0);
            return Ok(Some(RiccatiParams::new(family, get(0), get(1), get(2))));
        }
    }
    Ok(None)
}
