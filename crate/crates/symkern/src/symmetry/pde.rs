use crate::error::{domain, Result};
use crate::riccati::{DiffusionSpec, PotentialSpec};

/// Steps for the convergence-order estimate.
pub const RICHARDSON_STEPS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];

/// Central-difference estimate of u_t - sigma x^gamma u_xx - f u_x + g u.
pub fn pde_residual(
    u: &dyn Fn(f64, f64) -> f64,
    diff: &DiffusionSpec,
    pot: &PotentialSpec,
    x: f64,
    t: f64,
    h: f64,
) -> Result<f64> {
    if !(h > 0.0) || !(x - 2.0 * h > 0.0) || !(t - h > 0.0) {
        return domain(format!("stencil with h = {h} leaves the domain at (x, t) = ({x}, {t})"));
    }
    let c = u(x, t);
    let ut = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
    let (up, um) = (u(x + h, t), u(x - h, t));
    let uxx = (up - 2.0 * c + um) / (h * h);
    let ux = (up - um) / (2.0 * h);
    Ok(ut - diff.sigma * x.powf(diff.gamma) * uxx - diff.drift(x) * ux + pot.eval(x) * c)
}

/// Observed order of the residual as h shrinks (least-squares slope of log|r| on log h)
/// and the residual at the smallest step.
pub fn convergence_order(
    u: &dyn Fn(f64, f64) -> f64,
    diff: &DiffusionSpec,
    pot: &PotentialSpec,
    x: f64,
    t: f64,
    steps: &[f64],
) -> Result<(f64, f64)> {
    let mut pts = Vec::with_capacity(steps.len());
    for &h in steps {
        let r = pde_residual(u, diff, pot, x, t, h)?;
        pts.push((h.ln(), r.abs().max(f64::MIN_POSITIVE).ln()));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok((sxy / sxx, pts.last().map(|p| p.1.exp()).unwrap_or(f64::NAN)))
}
