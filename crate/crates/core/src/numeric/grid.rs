use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::model::{characteristic_length, PotentialSpec};
use crate::{Error, Result};

/// Knobs for [`build_grid_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridOptions {
    /// Upper bound on `h * q(r)`.
    pub resolution: f64,
    /// The step never exceeds `(r_max - R) / divisions`.
    pub divisions: f64,
    /// Refuse to build grids larger than this.
    pub max_points: usize,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self { resolution: 0.02, divisions: 1e4, max_points: 100_000_000 }
    }
}

impl GridOptions {
    /// Same grid rule with every step halved.
    pub fn refined(self) -> Self {
        Self { resolution: 0.5 * self.resolution, divisions: 2.0 * self.divisions, ..self }
    }
}

/// A run of equal steps. `start` indexes the first point of the run; the run
/// covers points `start..=start + steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: usize,
    pub step: f64,
    pub steps: usize,
}

/// Piecewise-uniform radial grid from the core radius outwards. Consecutive
/// segments double the step, and every segment has at least two steps, so
/// the point two back from a segment start is one new step away.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    points: Vec<f64>,
    segments: Vec<Segment>,
}

impl RadialGrid {
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn r_min(&self) -> f64 {
        self.points[0]
    }

    pub fn r_max(&self) -> f64 {
        self.points[self.points.len() - 1]
    }
}

/// `max(r_n, R)`: sets the outer extent when the core dwarfs the tail scale.
pub fn reference_length(spec: &PotentialSpec) -> f64 {
    characteristic_length(spec).max(spec.core_radius())
}

/// Outer radius for a probe wavenumber: `max(12/kappa, 40 L)`.
pub fn outer_radius(spec: &PotentialSpec, kappa_probe: f64) -> f64 {
    let floor = 40.0 * reference_length(spec);
    if kappa_probe > 0.0 {
        (12.0 / kappa_probe).max(floor)
    } else {
        floor
    }
}

pub fn build_grid(spec: &PotentialSpec, kappa_probe: f64) -> Result<RadialGrid> {
    build_grid_with(spec, kappa_probe, GridOptions::default())
}

/// Grid with `h q(r) <= resolution`, where
/// `q(r) = sqrt(kappa^2 + l(l+1)/r^2 + (n-2)^2 r_n^(n-2)/r^n) + n/r`
/// bounds the local wavenumber from above and decreases monotonically, so
/// steps only ever grow. The `n/r` term resolves the length over which the
/// tail itself changes, which a pure wavenumber bound misses for steep tails.
pub fn build_grid_with(spec: &PotentialSpec, kappa_probe: f64, opts: GridOptions) -> Result<RadialGrid> {
    if !(kappa_probe.is_finite() && kappa_probe >= 0.0) {
        return Err(Error::domain("build_grid", alloc::format!("probe wavenumber must be >= 0, got {kappa_probe}")));
    }
    if !(opts.resolution > 0.0 && opts.divisions >= 1.0) {
        return Err(Error::domain("build_grid", "resolution must be > 0 and divisions >= 1"));
    }
    let r0 = spec.core_radius();
    let r_max = outer_radius(spec, kappa_probe);
    let cap = (r_max - r0) / opts.divisions;
    let q = local_wavenumber_bound(spec, kappa_probe);

    // Rough point budget check before allocating.
    let estimate = estimate_points(r0, r_max, cap, opts.resolution, &q);
    if estimate > opts.max_points as f64 {
        return Err(Error::Resource { points: estimate as usize, limit: opts.max_points });
    }

    let mut step = (opts.resolution / q(r0)).min(cap);
    let mut points = Vec::with_capacity(estimate as usize + 16);
    let mut segments = Vec::new();
    points.push(r0);
    let mut seg = Segment { start: 0, step, steps: 0 };
    let mut seg_origin = r0;
    loop {
        let r = seg_origin + (seg.steps + 1) as f64 * step;
        points.push(r);
        seg.steps += 1;
        if points.len() > opts.max_points {
            return Err(Error::Resource { points: points.len(), limit: opts.max_points });
        }
        if r >= r_max && seg.steps >= 2 {
            break;
        }
        if seg.steps >= 2 && 2.0 * step <= cap && 2.0 * step * q(r) <= opts.resolution {
            segments.push(seg);
            step *= 2.0;
            seg = Segment { start: points.len() - 1, step, steps: 0 };
            seg_origin = r;
        }
    }
    segments.push(seg);
    Ok(RadialGrid { points, segments })
}

fn local_wavenumber_bound(spec: &PotentialSpec, kappa: f64) -> impl Fn(f64) -> f64 {
    let m = spec.n() - 2.0;
    let depth = m * m;
    let r_n = characteristic_length(spec);
    let ll = (spec.l() * (spec.l() + 1)) as f64;
    let k2 = kappa * kappa;
    move |r: f64| {
        let inv2 = 1.0 / (r * r);
        (k2 + ll * inv2 + depth * inv2 * (r_n / r).powf(m)).sqrt() + (m + 2.0) / r
    }
}

fn estimate_points(r0: f64, r_max: f64, cap: f64, resolution: f64, q: &impl Fn(f64) -> f64) -> f64 {
    // Integrate dr / h(r) on a geometric mesh.
    let samples = 2000;
    let ratio = (r_max / r0).powf(1.0 / samples as f64);
    let mut total = 0.0;
    let mut r = r0;
    for _ in 0..samples {
        let next = r * ratio;
        let h = (resolution / q(r)).min(cap);
        total += (next - r) / h;
        r = next;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_increasing_from_core() {
        let s = PotentialSpec::with_detuning(6.0, 0, 1, 0.05, 1.0).unwrap();
        let g = build_grid(&s, 0.05).unwrap();
        assert_eq!(g.r_min(), s.core_radius());
        assert!(g.points().windows(2).all(|w| w[1] > w[0]));
        assert!(g.r_max() >= 12.0 / 0.05);
    }

    #[test]
    fn segments_have_two_steps_and_double() {
        let s = PotentialSpec::with_detuning(6.0, 0, 2, 0.05, 1.0).unwrap();
        let g = build_grid(&s, 0.01).unwrap();
        for pair in g.segments().windows(2) {
            assert!(pair[0].steps >= 2);
            assert_eq!(pair[1].step, 2.0 * pair[0].step);
            assert_eq!(pair[1].start, pair[0].start + pair[0].steps);
        }
        let last = g.segments().last().unwrap();
        assert_eq!(last.start + last.steps, g.len() - 1);
    }

    #[test]
    fn step_rule_holds() {
        let s = PotentialSpec::with_detuning(10.0, 1, 1, 0.1, 1.0).unwrap();
        let kappa = 0.2;
        let opts = GridOptions::default();
        let g = build_grid_with(&s, kappa, opts).unwrap();
        let q = local_wavenumber_bound(&s, kappa);
        let cap = (outer_radius(&s, kappa) - s.core_radius()) / opts.divisions;
        for w in g.points().windows(2) {
            let h = w[1] - w[0];
            assert!(h * q(w[0]) <= opts.resolution * (1.0 + 1e-9));
            assert!(h <= cap * (1.0 + 1e-9));
        }
    }

    #[test]
    fn steep_tail_refines_inner_region() {
        let s = PotentialSpec::from_length_scale(60.0, 1.0, 0.9, 0).unwrap();
        let g = build_grid(&s, 0.0).unwrap();
        let segs = g.segments();
        assert!(segs.last().unwrap().step > 100.0 * segs[0].step);
    }

    #[test]
    fn refuses_oversized_grid() {
        let s = PotentialSpec::with_detuning(6.0, 0, 1, 0.05, 1.0).unwrap();
        let opts = GridOptions { max_points: 1000, ..GridOptions::default() };
        assert!(matches!(build_grid_with(&s, 0.05, opts), Err(Error::Resource { .. })));
    }
}
