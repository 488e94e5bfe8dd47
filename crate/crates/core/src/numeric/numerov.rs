use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::grid::RadialGrid;
use crate::model::{characteristic_length, PotentialSpec};
use crate::{Error, Result};

const RENORM_AT: f64 = 1e150;

/// Outward solution on a grid, started from `psi(R) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionTrace {
    pub grid: RadialGrid,
    /// Values at the grid points, in an arbitrary overall scale.
    pub values: Vec<f64>,
    /// Sign changes of `psi` strictly outside the core.
    pub node_count: usize,
    /// `psi'/psi` at the matching point.
    pub log_derivative: f64,
    /// Matching radius, the second-to-last grid point.
    pub r_match: f64,
    pub renormalizations: usize,
}

impl WavefunctionTrace {
    /// `psi'/psi + kappa`: zero for a bound state at `kappa`.
    pub fn mismatch(&self, kappa: f64) -> f64 {
        self.log_derivative + kappa
    }
}

/// Nodes and matching log-derivative without storing the wavefunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Shot {
    pub nodes: usize,
    pub log_derivative: f64,
}

/// `psi'' = f(r) psi` coefficient.
struct Coefficient {
    k2: f64,
    ll: f64,
    depth: f64,
    m: f64,
    r_n: f64,
}

impl Coefficient {
    fn new(spec: &PotentialSpec, kappa: f64) -> Self {
        let m = spec.n() - 2.0;
        Self {
            k2: kappa * kappa,
            ll: (spec.l() * (spec.l() + 1)) as f64,
            depth: m * m,
            m,
            r_n: characteristic_length(spec),
        }
    }

    fn at(&self, r: f64) -> f64 {
        let inv2 = 1.0 / (r * r);
        self.k2 + self.ll * inv2 - self.depth * inv2 * (self.r_n / r).powf(self.m)
    }
}

pub fn numerov_integrate(spec: &PotentialSpec, kappa: f64, grid: RadialGrid) -> Result<WavefunctionTrace> {
    let mut values = Vec::with_capacity(grid.len());
    let (shot, renormalizations) = run(spec, kappa, &grid, Some(&mut values))?;
    let r_match = grid.points()[grid.len() - 2];
    Ok(WavefunctionTrace {
        grid,
        values,
        node_count: shot.nodes,
        log_derivative: shot.log_derivative,
        r_match,
        renormalizations,
    })
}

pub(crate) fn shoot(spec: &PotentialSpec, kappa: f64, grid: &RadialGrid) -> Result<Shot> {
    run(spec, kappa, grid, None).map(|(s, _)| s)
}

fn run(spec: &PotentialSpec, kappa: f64, grid: &RadialGrid, mut store: Option<&mut Vec<f64>>) -> Result<(Shot, usize)> {
    if !(kappa.is_finite() && kappa >= 0.0) {
        return Err(Error::domain("numerov_integrate", alloc::format!("kappa must be finite and >= 0, got {kappa}")));
    }
    let pts = grid.points();
    if pts.len() < 4 {
        return Err(Error::Resolution(alloc::format!("grid has only {} points", pts.len())));
    }
    let f = Coefficient::new(spec, kappa);

    // Last three values psi_{i-2}, psi_{i-1}, psi_i, with f at the same points.
    let h0 = pts[1] - pts[0];
    let mut psi = [0.0, 0.0, h0];
    let mut fv = [0.0, f.at(pts[0]), f.at(pts[1])];
    if let Some(s) = store.as_deref_mut() {
        s.push(0.0);
        s.push(h0);
    }
    let mut nodes = 0usize;
    let mut last_sign = 1.0;
    let mut renorms = 0usize;

    let mut i = 1usize;
    for (si, seg) in grid.segments().iter().enumerate() {
        let h = seg.step;
        let h2 = h * h;
        // On entering a coarser segment, the point one new step back is two old points back.
        let mut prev = if si == 0 { psi[1] } else { psi[0] };
        let mut fprev = if si == 0 { fv[1] } else { fv[0] };
        let first = if si == 0 { 1 } else { 0 };
        for _ in first..seg.steps {
            let cur = psi[2];
            let fcur = fv[2];
            let fnext = f.at(pts[i + 1]);
            let next = (2.0 * cur * (1.0 + 5.0 * h2 * fcur / 12.0) - prev * (1.0 - h2 * fprev / 12.0))
                / (1.0 - h2 * fnext / 12.0);
            if !next.is_finite() {
                return Err(Error::NonFinite(alloc::format!("wavefunction at r = {}", pts[i + 1])));
            }
            if next != 0.0 {
                let sign = next.signum();
                if sign != last_sign {
                    nodes += 1;
                    last_sign = sign;
                }
            }
            psi = [psi[1], cur, next];
            fv = [fv[1], fcur, fnext];
            prev = cur;
            fprev = fcur;
            i += 1;
            if let Some(s) = store.as_deref_mut() {
                s.push(next);
            }
            if next.abs() > RENORM_AT {
                let scale = 1.0 / next.abs();
                for p in psi.iter_mut() {
                    *p *= scale;
                }
                prev *= scale;
                if let Some(s) = store.as_deref_mut() {
                    for v in s.iter_mut() {
                        *v *= scale;
                    }
                }
                renorms += 1;
            }
        }
    }
    debug_assert_eq!(i, pts.len() - 1);

    // Derivative at the penultimate point from its neighbours in the last segment.
    let h = grid.segments().last().expect("non-empty grid").step;
    let h2 = h * h;
    let d = (psi[2] * (1.0 - h2 * fv[2] / 6.0) - psi[0] * (1.0 - h2 * fv[0] / 6.0)) / (2.0 * h);
    let log_derivative = d / psi[1];
    Ok((Shot { nodes, log_derivative }, renorms))
}
