use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::grid::{build_grid_with, GridOptions, RadialGrid};
use super::numerov::shoot;
use crate::analytic::{Method, ResonanceEstimate};
use crate::model::{characteristic_length, derive_scales, regime_report, PotentialSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootOptions {
    pub grid: GridOptions,
    /// Log-spaced scan points per decade of `kappa`.
    pub scan_per_decade: usize,
    /// Relative width at which bisection stops.
    pub rel_tol: f64,
    /// Lower end of the scan, in units of `1/r_n`.
    pub kappa_min_rn: f64,
}

impl Default for ShootOptions {
    fn default() -> Self {
        Self { grid: GridOptions::default(), scan_per_decade: 24, rel_tol: 1e-12, kappa_min_rn: 1e-6 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    /// Decay wavenumber, inverse length.
    pub kappa: f64,
    /// `-kappa^2 / 2`.
    pub energy: f64,
    pub node_count: usize,
}

/// Bound states ordered from deepest to shallowest.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundStateSet {
    pub states: Vec<BoundState>,
}

impl BoundStateSet {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Least-bound state, if any.
    pub fn weakest(&self) -> Option<&BoundState> {
        self.states.last()
    }
}

/// Number of eigenvalues with decay wavenumber above `kappa` on a fixed grid:
/// nodes of the outward solution plus one if it already bends the wrong way
/// at the matching point.
fn states_above(spec: &PotentialSpec, kappa: f64, grid: &RadialGrid) -> Result<usize> {
    let s = shoot(spec, kappa, grid)?;
    let overshoot = s.log_derivative + kappa < 0.0;
    Ok(s.nodes + overshoot as usize)
}

/// `sqrt(2 beta / R^n)`: no bound state is deeper than the well at the core.
/// Written as `(n-2) x_R / (2R)`, which survives where `R^n` underflows.
fn kappa_ceiling(spec: &PotentialSpec) -> f64 {
    (spec.n() - 2.0) * derive_scales(spec).x_r / (2.0 * spec.core_radius())
}

pub fn shoot_bound_states(spec: &PotentialSpec) -> Result<BoundStateSet> {
    shoot_bound_states_with(spec, ShootOptions::default())
}

pub fn shoot_bound_states_with(spec: &PotentialSpec, opts: ShootOptions) -> Result<BoundStateSet> {
    let r_n = characteristic_length(spec);
    let k_lo = opts.kappa_min_rn / r_n;
    let k_hi = kappa_ceiling(spec);
    if !k_hi.is_finite() {
        return Err(Error::NonFinite(alloc::format!("well depth 2 beta / R^n overflows (kappa ceiling {k_hi})")));
    }
    if k_hi <= k_lo {
        return Ok(BoundStateSet::default());
    }
    let decades = (k_hi / k_lo).log10();
    let n_scan = ((decades * opts.scan_per_decade as f64).ceil() as usize).max(2);
    let mut scan = Vec::with_capacity(n_scan + 1);
    for i in 0..=n_scan {
        let k = k_lo * (k_hi / k_lo).powf(i as f64 / n_scan as f64);
        let grid = build_grid_with(spec, k, opts.grid)?;
        scan.push((k, states_above(spec, k, &grid)?));
    }
    for w in scan.windows(2) {
        if w[1].1 > w[0].1 {
            return Err(Error::Resolution(alloc::format!(
                "state count rises from {} to {} between kappa = {:e} and {:e}",
                w[0].1,
                w[1].1,
                w[0].0,
                w[1].0
            )));
        }
    }
    if scan[n_scan].1 != 0 {
        return Err(Error::Resolution(alloc::format!("{} states remain above the well depth", scan[n_scan].1)));
    }
    let total = scan[0].1;
    let mut states = Vec::with_capacity(total);
    // Deepest first: state j has exactly j states above it.
    for j in 0..total {
        let idx = scan.iter().rposition(|&(_, c)| c > j).expect("count at k_lo exceeds j");
        let st = refine(spec, j, scan[idx].0, scan[idx + 1].0, &opts)?;
        states.push(st);
    }
    for (i, st) in states.iter().enumerate() {
        if st.node_count != i {
            return Err(Error::Resolution(alloc::format!("state {i} has {} nodes", st.node_count)));
        }
    }
    Ok(BoundStateSet { states })
}

/// Bisects for the state with `j` deeper states, with `kappa` bracketed by
/// `[a, b]` from the scan. One grid, built at the lower end, serves the whole
/// bisection so the count stays monotone.
fn refine(spec: &PotentialSpec, j: usize, mut a: f64, mut b: f64, opts: &ShootOptions) -> Result<BoundState> {
    let mut grid = build_grid_with(spec, a, opts.grid)?;
    let mut tries = 0;
    while !(states_above(spec, a, &grid)? > j && states_above(spec, b, &grid)? <= j) {
        tries += 1;
        if tries > 10 {
            return Err(Error::Resolution(alloc::format!("cannot bracket state {j} near kappa = {a:e}")));
        }
        a /= 1.5;
        b *= 1.5;
        grid = build_grid_with(spec, a, opts.grid)?;
    }
    while b / a - 1.0 > opts.rel_tol {
        let mid = (a * b).sqrt();
        if mid <= a || mid >= b {
            break;
        }
        if states_above(spec, mid, &grid)? > j {
            a = mid;
        } else {
            b = mid;
        }
    }
    let kappa = (a * b).sqrt();
    let nodes = shoot(spec, b, &grid)?.nodes;
    Ok(BoundState { kappa, energy: -0.5 * kappa * kappa, node_count: nodes })
}

/// Least-bound state as an estimate, with regime flags against the nearest zero.
pub fn weakest_bound_kappa(spec: &PotentialSpec) -> Result<ResonanceEstimate> {
    weakest_bound_kappa_with(spec, ShootOptions::default())
}

pub fn weakest_bound_kappa_with(spec: &PotentialSpec, opts: ShootOptions) -> Result<ResonanceEstimate> {
    let set = shoot_bound_states_with(spec, opts)?;
    let kappa = set.weakest().ok_or(Error::NoBoundState)?.kappa;
    let r_n = characteristic_length(spec);
    let regime = regime_report(spec, kappa)?;
    Ok(ResonanceEstimate::from_kappa_rn(kappa * r_n, r_n, Method::Numeric, regime))
}
