//! Closed-form estimates of the most weakly bound level.
//!
//! All public results are real. The `i^(l+1/2)` phases of the outer solution
//! cancel in the resonance condition, leaving real brackets whose sign decides
//! whether a weakly bound level exists on the given side of a Bessel zero.
//! A non-positive bracket is reported as [`Error::NoNearThresholdState`].
//!
//! Every estimate carries a [`RegimeReport`]; callers decide what to do with
//! out-of-regime numbers, nothing here filters them.

use core::f64::consts::{FRAC_PI_2, PI};

#[allow(unused_imports)]
use num_traits::Float;

use crate::model::{derive_scales, regime_report_with, PotentialSpec, RegimeReport, RegimeThresholds, Scales};
use crate::specfun::{bessel_j_zero, double_factorial, gamma_pos, jy, BesselOrder};
use crate::{Error, Result};

/// Which route produced an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Full Bessel-ratio resonance condition at the core argument.
    BesselRatio,
    /// First order in the detuning from a Bessel zero.
    DetuningExpansion,
    /// Threshold energy in the `beta_n`-scaled form.
    ThresholdEnergy,
    /// Large-exponent limit of the threshold energy.
    LargeExponent,
    /// Numerov shooting on the full radial equation.
    Numeric,
    /// `kappa = 1/(a - a_bar)`.
    Semiclassical,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::BesselRatio => "bessel-ratio",
            Method::DetuningExpansion => "detuning-expansion",
            Method::ThresholdEnergy => "threshold-energy",
            Method::LargeExponent => "large-n",
            Method::Numeric => "numerov",
            Method::Semiclassical => "semiclassical",
        }
    }
}

/// A wavenumber/energy estimate with the method that produced it and regime flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceEstimate {
    /// Dimensionless `kappa r_n`.
    pub kappa_rn: f64,
    /// `E = -kappa^2 / 2` in natural units.
    pub energy: f64,
    pub method: Method,
    pub regime: RegimeReport,
}

impl ResonanceEstimate {
    pub(crate) fn from_kappa_rn(kappa_rn: f64, r_n: f64, method: Method, regime: RegimeReport) -> Self {
        let kappa = kappa_rn / r_n;
        Self { kappa_rn, energy: -0.5 * kappa * kappa, method, regime }
    }

    /// Wavenumber `kappa` in inverse length.
    pub fn kappa(&self, r_n: f64) -> f64 {
        self.kappa_rn / r_n
    }
}

/// Coefficient ratios from matching the inner and outer solutions in the
/// overlap region. `b1_over_a2` and `b2_over_a1` are the real factors left
/// after taking out the phases `i^-(l+1/2)` and `i^(l+1/2)` respectively.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingCoefficients {
    pub a2_over_a1: f64,
    pub b1_over_a2: f64,
    pub b2_over_a1: f64,
}

impl MatchingCoefficients {
    /// Relative violation of the decay condition `|B2| = |B1|`; zero at the
    /// resonance wavenumber.
    pub fn decay_mismatch(&self) -> f64 {
        let b1 = (self.b1_over_a2 * self.a2_over_a1).abs();
        let b2 = self.b2_over_a1.abs();
        (b2 - b1) / b2.max(b1)
    }
}

/// Inner boundary ratio `A2/A1 = -J_nu(x_R) / Y_nu(x_R)`.
pub fn core_ratio(scales: &Scales) -> Result<f64> {
    if !(scales.x_r > 0.0) {
        return Err(Error::domain("core_ratio", alloc::format!("x_R must be > 0, got {}", scales.x_r)));
    }
    let v = jy(scales.nu, scales.x_r)?;
    if v.y.abs() < 1e-12 {
        return Err(Error::Singular(alloc::format!(
            "Y_nu vanishes at the core argument x_R = {} (nu = {})",
            scales.x_r,
            scales.nu
        )));
    }
    Ok(-v.j / v.y)
}

/// Matching ratios at a given `kappa r_n`.
pub fn matching_coefficients(spec: &PotentialSpec, kappa_rn: f64) -> Result<MatchingCoefficients> {
    if !(kappa_rn > 0.0) {
        return Err(Error::domain("matching_coefficients", "kappa r_n must be > 0"));
    }
    let scales = derive_scales(spec);
    let lh = spec.l() as f64 + 0.5;
    let g_l = gamma_pos(lh);
    let g_nu = gamma_pos(scales.nu);
    Ok(MatchingCoefficients {
        a2_over_a1: core_ratio(&scales)?,
        b1_over_a2: -lh * g_l * g_nu / PI * (2.0 / kappa_rn).powf(lh),
        b2_over_a1: -PI / (scales.nu * g_l * g_nu) * (0.5 * kappa_rn).powf(lh),
    })
}

/// Zero-energy inner solution `r^(1/2) [J_nu(x) + (A2/A1) Y_nu(x)]`,
/// `x = 2 (r_n/r)^((n-2)/2)`, normalised to `A1 = 1`. Exact at `kappa = 0`.
pub fn inner_solution(spec: &PotentialSpec, r: f64) -> Result<f64> {
    let scales = derive_scales(spec);
    let ratio = core_ratio(&scales)?;
    let x = 2.0 * (scales.r_n / r).powf(0.5 * (spec.n() - 2.0));
    let v = jy(scales.nu, x)?;
    Ok(r.sqrt() * (v.j + ratio * v.y))
}

/// Large-`r` form of [`inner_solution`]: the `r^-l` and `r^(l+1)` terms.
///
/// For non-integer `nu`, `Y_nu` also carries `cot(nu pi) J_nu`, which feeds
/// the `r^-l` coefficient. Integer orders bring in `ln r` and are rejected.
pub fn inner_solution_asymptote(spec: &PotentialSpec, r: f64) -> Result<f64> {
    let scales = derive_scales(spec);
    if scales.nu.fract() == 0.0 {
        return Err(Error::domain("inner_solution_asymptote", "integer Bessel order has a logarithmic tail"));
    }
    let ratio = core_ratio(&scales)?;
    let l = spec.l() as i32;
    let g_nu = gamma_pos(scales.nu);
    let s = scales.r_n.sqrt();
    let u = scales.r_n / r;
    let cot = (FRAC_PI_2 - PI * scales.nu.fract()).tan();
    Ok((1.0 + ratio * cot) * s / (scales.nu * g_nu) * u.powi(l) - ratio * s * g_nu / PI * u.powi(-(l + 1)))
}

/// `Delta_k = x_R - j_{nu,k}`.
pub fn detuning(spec: &PotentialSpec, k: u32) -> Result<f64> {
    let scales = derive_scales(spec);
    Ok(scales.x_r - bessel_j_zero(scales.order(), k)?.value)
}

/// The bracket whose `(2l+1)`-th root is `kappa r_n` in the full
/// Bessel-ratio condition.
pub fn resonance_bracket(spec: &PotentialSpec) -> Result<f64> {
    let scales = derive_scales(spec);
    let ratio = core_ratio(&scales)?;
    let l = spec.l();
    let lh = l as f64 + 0.5;
    let inner = 2.0.powi(l as i32 + 1) * lh * gamma_pos(lh) * gamma_pos(scales.nu) / PI;
    // (-1)^(l+1) J/Y == (-1)^l (A2/A1)
    Ok(parity(l) * inner * inner / (spec.n() - 2.0) * ratio)
}

/// `kappa r_n` from the full Bessel-ratio resonance condition, with the
/// regime measured against the zero nearest to `x_R`.
pub fn resonance_kappa(spec: &PotentialSpec) -> Result<ResonanceEstimate> {
    resonance_kappa_with(spec, None)
}

/// [`resonance_kappa`] with an optional explicit zero index for the regime
/// report.
pub fn resonance_kappa_with(spec: &PotentialSpec, k: Option<u32>) -> Result<ResonanceEstimate> {
    let scales = derive_scales(spec);
    let probe = regime_report_with(spec, 0.0, k, RegimeThresholds::default())?;
    let kappa_rn = if on_zero(probe.delta_k, probe.nearest_zero.value) {
        0.0
    } else {
        let bracket = resonance_bracket(spec)?;
        root_of_bracket(bracket, spec.l())?
    };
    estimate(spec, &scales, kappa_rn, Method::BesselRatio, probe.nearest_zero.k)
}

/// Detuning-expansion bracket (before taking the `(2l+1)`-th root).
pub fn detuning_bracket(spec: &PotentialSpec, k: u32) -> Result<f64> {
    let (bracket, _) = detuning_bracket_parts(spec, k)?;
    Ok(bracket)
}

fn detuning_bracket_parts(spec: &PotentialSpec, k: u32) -> Result<(f64, f64)> {
    let scales = derive_scales(spec);
    let zero = bessel_j_zero(scales.order(), k)?;
    let delta = scales.x_r - zero.value;
    if on_zero(delta, zero.value) {
        return Ok((0.0, 0.0));
    }
    let ratio = jy(scales.nu + 1.0, zero.value)?.j / jy(scales.nu, zero.value)?.y;
    let l = spec.l();
    let df = double_factorial(2 * l as i64 + 1)? as f64;
    let g = df * gamma_pos(scales.nu);
    Ok((parity(l) / (PI * (spec.n() - 2.0)) * g * g * ratio * delta, delta))
}

/// `kappa r_n` to first order in `Delta_k`.
pub fn resonance_kappa_near_zero(spec: &PotentialSpec, k: u32) -> Result<ResonanceEstimate> {
    let scales = derive_scales(spec);
    let (bracket, _) = detuning_bracket_parts(spec, k)?;
    let kappa_rn = root_of_bracket(bracket, spec.l())?;
    estimate(spec, &scales, kappa_rn, Method::DetuningExpansion, k)
}

/// Threshold energy from the `beta_n`-scaled closed form,
/// `(2 beta_n^(2/n))^(n/(n-2)) E = -{...}^(2/(2l+1))`.
pub fn threshold_energy(spec: &PotentialSpec, k: u32) -> Result<ResonanceEstimate> {
    let scales = derive_scales(spec);
    let zero = bessel_j_zero(scales.order(), k)?;
    let delta = scales.x_r - zero.value;
    let n = spec.n();
    let l = spec.l();
    let scaled = if on_zero(delta, zero.value) {
        0.0
    } else {
        let ratio = jy(scales.nu + 1.0, zero.value)?.j / jy(scales.nu, zero.value)?.y;
        let df = double_factorial(2 * l as i64 + 1)? as f64;
        let g = df * (n - 2.0).powf(scales.nu) * gamma_pos(scales.nu);
        let bracket = parity(l) / (PI * (n - 2.0)) * g * g * ratio * delta;
        if !(bracket > 0.0) {
            return Err(Error::NoNearThresholdState { bracket });
        }
        -bracket.powf(2.0 / (2 * l + 1) as f64)
    };
    let energy_unit = (2.0 * spec.beta().powf(2.0 / n)).powf(n / (n - 2.0));
    let energy = scaled / energy_unit;
    energy_estimate(spec, &scales, energy, Method::ThresholdEnergy, k)
}

/// Large-`n` limit, `2 beta_n^(2/n) E = -{(-1)^l [(2l-1)!!]^2 (n/pi) J_1(j_{0,k})/Y_0(j_{0,k}) Delta_k}^(2/(2l+1))`.
///
/// `Delta_k` is measured from `j_{nu,k}` as everywhere else. The regime
/// report flags `n < 20` through `large_n_ok`.
pub fn threshold_energy_large_n(spec: &PotentialSpec, k: u32) -> Result<ResonanceEstimate> {
    let scales = derive_scales(spec);
    let delta = detuning(spec, k)?;
    let n = spec.n();
    let l = spec.l();
    let zero = bessel_j_zero(BesselOrder::new(0.0)?, k)?;
    let scaled = if on_zero(delta, zero.value) {
        0.0
    } else {
        let ratio = jy(1.0, zero.value)?.j / jy(0.0, zero.value)?.y;
        let df = double_factorial(2 * l as i64 - 1)? as f64;
        let bracket = parity(l) * df * df * n / PI * ratio * delta;
        if !(bracket > 0.0) {
            return Err(Error::NoNearThresholdState { bracket });
        }
        -bracket.powf(2.0 / (2 * l + 1) as f64)
    };
    let energy = scaled / (2.0 * spec.beta().powf(2.0 / n));
    energy_estimate(spec, &scales, energy, Method::LargeExponent, k)
}

/// `a_bar = pi r_n (n-2) cot(pi/(n-2)) / Gamma(1/(n-2))^2`.
pub fn mean_scattering_length(spec: &PotentialSpec) -> Result<f64> {
    let scales = derive_scales(spec);
    let m = spec.n() - 2.0;
    let theta = PI / m;
    if theta.sin().abs() < 1e-12 {
        return Err(Error::Singular(alloc::format!("cot(pi/(n-2)) has a pole at n = {}", spec.n())));
    }
    let cot = (FRAC_PI_2 - theta).tan();
    let g = gamma_pos(1.0 / m);
    Ok(PI * scales.r_n * m * cot / (g * g))
}

/// `kappa = 1/(a - a_bar)`; negative values indicate a virtual state.
pub fn semiclassical_kappa(a: f64, a_bar: f64) -> Result<f64> {
    let gap = a - a_bar;
    if !gap.is_finite() || gap.abs() <= 1e-14 * a.abs().max(a_bar.abs()).max(1.0) {
        return Err(Error::Singular(alloc::format!("a = {a} coincides with a_bar = {a_bar}")));
    }
    Ok(1.0 / gap)
}

fn parity(l: u32) -> f64 {
    if l.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `x_R` equals the zero up to representation error.
fn on_zero(delta: f64, zero: f64) -> bool {
    delta.abs() <= 8.0 * f64::EPSILON * zero
}

fn root_of_bracket(bracket: f64, l: u32) -> Result<f64> {
    if bracket == 0.0 {
        return Ok(0.0);
    }
    if !(bracket > 0.0) {
        return Err(Error::NoNearThresholdState { bracket });
    }
    Ok(bracket.powf(1.0 / (2 * l + 1) as f64))
}

fn estimate(spec: &PotentialSpec, scales: &Scales, kappa_rn: f64, method: Method, k: u32) -> Result<ResonanceEstimate> {
    let regime = regime_report_with(spec, kappa_rn / scales.r_n, Some(k), RegimeThresholds::default())?;
    Ok(ResonanceEstimate::from_kappa_rn(kappa_rn, scales.r_n, method, regime))
}

fn energy_estimate(
    spec: &PotentialSpec,
    scales: &Scales,
    energy: f64,
    method: Method,
    k: u32,
) -> Result<ResonanceEstimate> {
    let kappa = (-2.0 * energy).max(0.0).sqrt();
    let regime = regime_report_with(spec, kappa, Some(k), RegimeThresholds::default())?;
    Ok(ResonanceEstimate { kappa_rn: kappa * scales.r_n, energy, method, regime })
}
