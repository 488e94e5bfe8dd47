#[allow(unused_imports)]
use num_traits::Float;

use super::grid::{build_grid_with, reference_length, GridOptions};
use super::numerov::numerov_integrate;
use crate::model::{characteristic_length, PotentialSpec};
use crate::{Error, Result};

/// Zero-energy fit of the outer wavefunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringFit {
    pub a: f64,
    /// RMS fit residual relative to the RMS wavefunction.
    pub residual: f64,
    pub window: (f64, f64),
}

const MAX_RESIDUAL: f64 = 1e-6;

/// s-wave scattering length from the zero-energy solution.
pub fn scattering_length(spec: &PotentialSpec) -> Result<f64> {
    scattering_fit(spec, GridOptions::default()).map(|f| f.a)
}

/// Fits `psi = c1 f1 + c0 f0` on `[30 L, 40 L]` with the first tail
/// correction built into the basis:
/// `f1 = r - (n-2)/(n-3) r_n^(n-2) r^(3-n)`, `f0 = 1 - (n-2)/(n-1) r_n^(n-2) r^(2-n)`,
/// then `a = -c0 / c1`.
pub fn scattering_fit(spec: &PotentialSpec, opts: GridOptions) -> Result<ScatteringFit> {
    if spec.l() != 0 {
        return Err(Error::domain("scattering_length", "only defined here for l = 0"));
    }
    let n = spec.n();
    if n <= 3.0 {
        return Err(Error::domain("scattering_length", alloc::format!("needs n > 3, got {n}")));
    }
    let l_ref = reference_length(spec);
    let window = (30.0 * l_ref, 40.0 * l_ref);
    let grid = build_grid_with(spec, 0.0, opts)?;
    let trace = numerov_integrate(spec, 0.0, grid)?;

    let g = characteristic_length(spec).powf(n - 2.0);
    let c_1 = (n - 2.0) / (n - 3.0) * g;
    let c_0 = (n - 2.0) / (n - 1.0) * g;
    let basis = |r: f64| (r - c_1 * r.powf(3.0 - n), 1.0 - c_0 * r.powf(2.0 - n));

    // Normal equations, with psi scaled to O(1) first.
    let scale = trace.values.last().copied().unwrap_or(1.0).abs().max(f64::MIN_POSITIVE);
    let (mut s11, mut s10, mut s00, mut t1, mut t0, mut yy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    let mut count = 0usize;
    for (&r, &v) in trace.grid.points().iter().zip(&trace.values) {
        if r < window.0 || r > window.1 {
            continue;
        }
        let y = v / scale;
        let (f1, f0) = basis(r);
        s11 += f1 * f1;
        s10 += f1 * f0;
        s00 += f0 * f0;
        t1 += f1 * y;
        t0 += f0 * y;
        yy += y * y;
        count += 1;
    }
    if count < 3 {
        return Err(Error::Resolution(alloc::format!("only {count} grid points in the fit window")));
    }
    let det = s11 * s00 - s10 * s10;
    let c1 = (t1 * s00 - t0 * s10) / det;
    let c0 = (s11 * t0 - s10 * t1) / det;
    if !(c1.is_finite() && c0.is_finite()) || c1 == 0.0 {
        return Err(Error::Singular(alloc::format!("zero-energy fit is degenerate (c1 = {c1}, c0 = {c0})")));
    }
    let mut rss = 0.0;
    for (&r, &v) in trace.grid.points().iter().zip(&trace.values) {
        if r < window.0 || r > window.1 {
            continue;
        }
        let (f1, f0) = basis(r);
        let e = v / scale - c1 * f1 - c0 * f0;
        rss += e * e;
    }
    let residual = (rss / yy).sqrt();
    if !(residual < MAX_RESIDUAL) {
        return Err(Error::Accuracy(alloc::format!(
            "scattering-length fit residual {residual:e} exceeds {MAX_RESIDUAL:e}"
        )));
    }
    Ok(ScatteringFit { a: -c0 / c1, residual, window })
}
