//! Problem instance, derived scales and validity-regime reporting.
//!
//! Natural units `hbar = mu = 1` are used everywhere, so the radial equation
//! outside the core reads
//! `psi'' = [kappa^2 + l(l+1)/r^2 - (n-2)^2 r_n^(n-2) / r^n] psi`
//! with `r_n = [2 beta_n / (n-2)^2]^(1/(n-2))`.

#[allow(unused_imports)]
use num_traits::Float;

use crate::specfun::{bessel_j_zero, BesselOrder, BesselZero};
use crate::{Error, Result};

/// Hard core of radius `R` plus the tail `-beta_n / r^n` for `r > R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    n: f64,
    beta: f64,
    core_radius: f64,
    l: u32,
}

impl PotentialSpec {
    pub fn new(n: f64, beta: f64, core_radius: f64, l: u32) -> Result<Self> {
        if !(n.is_finite() && n > 2.0) {
            return Err(Error::domain("PotentialSpec", alloc::format!("tail exponent n must be > 2, got {n}")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::domain("PotentialSpec", alloc::format!("tail strength beta must be > 0, got {beta}")));
        }
        if !(core_radius.is_finite() && core_radius > 0.0) {
            return Err(Error::domain("PotentialSpec", alloc::format!("core radius R must be > 0, got {core_radius}")));
        }
        let spec = Self { n, beta, core_radius, l };
        let sc = derive_scales(&spec);
        if !(sc.r_n.is_finite() && sc.r_n > 0.0 && sc.x_r.is_finite() && sc.x_r > 0.0) {
            return Err(Error::domain(
                "PotentialSpec",
                alloc::format!("r_n = {:e} and x_R = {:e} are not representable", sc.r_n, sc.x_r),
            ));
        }
        Ok(spec)
    }

    /// Builds the spec from the characteristic length instead of `beta_n`.
    pub fn from_length_scale(n: f64, r_n: f64, core_radius: f64, l: u32) -> Result<Self> {
        if !(r_n.is_finite() && r_n > 0.0) {
            return Err(Error::domain("PotentialSpec", alloc::format!("length scale r_n must be > 0, got {r_n}")));
        }
        if !(n.is_finite() && n > 2.0) {
            return Err(Error::domain("PotentialSpec", alloc::format!("tail exponent n must be > 2, got {n}")));
        }
        let beta = 0.5 * (n - 2.0) * (n - 2.0) * r_n.powf(n - 2.0);
        Self::new(n, beta, core_radius, l)
    }

    /// Places the core so that `x_R = j_{nu,k} + delta` at fixed `r_n`.
    pub fn with_detuning(n: f64, l: u32, k: u32, delta: f64, r_n: f64) -> Result<Self> {
        if !(n.is_finite() && n > 2.0) {
            return Err(Error::domain("PotentialSpec", alloc::format!("tail exponent n must be > 2, got {n}")));
        }
        let nu = BesselOrder::new((2 * l + 1) as f64 / (n - 2.0))?;
        let zero = bessel_j_zero(nu, k)?;
        let x_r = zero.value + delta;
        if !(x_r > 0.0) {
            return Err(Error::domain(
                "PotentialSpec",
                alloc::format!("detuning {delta} puts x_R = {x_r} at or below 0"),
            ));
        }
        let core_radius = r_n * (2.0 / x_r).powf(2.0 / (n - 2.0));
        Self::from_length_scale(n, r_n, core_radius, l)
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn core_radius(&self) -> f64 {
        self.core_radius
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Bessel order `(2l+1)/(n-2)` of the inner-region solution.
    pub fn nu(&self) -> f64 {
        (2 * self.l + 1) as f64 / (self.n - 2.0)
    }
}

/// Dimensionless groups derived from a [`PotentialSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scales {
    /// Characteristic length `r_n`.
    pub r_n: f64,
    /// Bessel order `(2l+1)/(n-2)`.
    pub nu: f64,
    /// Core argument `2 (r_n/R)^((n-2)/2)`.
    pub x_r: f64,
}

impl Scales {
    pub fn order(&self) -> BesselOrder {
        // nu > 0 by construction of PotentialSpec
        BesselOrder::new(self.nu).expect("positive Bessel order")
    }
}

/// `r_n = [2 beta_n / (n-2)^2]^(1/(n-2))`.
pub fn characteristic_length(spec: &PotentialSpec) -> f64 {
    let m = spec.n - 2.0;
    (2.0 * spec.beta / (m * m)).powf(1.0 / m)
}

pub fn derive_scales(spec: &PotentialSpec) -> Scales {
    let r_n = characteristic_length(spec);
    let m = spec.n - 2.0;
    Scales { r_n, nu: spec.nu(), x_r: 2.0 * (r_n / spec.core_radius).powf(0.5 * m) }
}

/// Thresholds standing in for "much less than one".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeThresholds {
    /// `kappa r_n` must stay below this.
    pub kappa_rn: f64,
    /// `|Delta_k|` must stay below this.
    pub delta: f64,
    /// Exponents at or above this count as large `n`.
    pub large_n: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        Self { kappa_rn: 0.1, delta: 0.3, large_n: 20.0 }
    }
}

/// Where an estimate sits relative to the asymptotic regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeReport {
    pub kappa_rn: f64,
    pub small_kappa_ok: bool,
    pub nearest_zero: BesselZero,
    /// `x_R - j_{nu,k}` for the reported zero.
    pub delta_k: f64,
    pub small_delta_ok: bool,
    pub large_n_ok: bool,
}

impl RegimeReport {
    /// Both smallness conditions hold.
    pub fn in_regime(&self) -> bool {
        self.small_kappa_ok && self.small_delta_ok
    }
}

/// Regime flags for wavenumber `kappa` (inverse length), with the zero of
/// `J_nu` nearest to `x_R`.
pub fn regime_report(spec: &PotentialSpec, kappa: f64) -> Result<RegimeReport> {
    regime_report_with(spec, kappa, None, RegimeThresholds::default())
}

/// Like [`regime_report`], optionally pinning the zero index `k`.
pub fn regime_report_with(
    spec: &PotentialSpec,
    kappa: f64,
    k: Option<u32>,
    thresholds: RegimeThresholds,
) -> Result<RegimeReport> {
    if !(kappa.is_finite() && kappa >= 0.0) {
        return Err(Error::domain("regime_report", alloc::format!("kappa must be finite and >= 0, got {kappa}")));
    }
    let scales = derive_scales(spec);
    let zero = match k {
        Some(k) => bessel_j_zero(scales.order(), k)?,
        None => nearest_zero(scales.order(), scales.x_r)?,
    };
    let kappa_rn = kappa * scales.r_n;
    let delta_k = scales.x_r - zero.value;
    Ok(RegimeReport {
        kappa_rn,
        small_kappa_ok: kappa_rn < thresholds.kappa_rn,
        nearest_zero: zero,
        delta_k,
        small_delta_ok: delta_k.abs() < thresholds.delta,
        large_n_ok: spec.n >= thresholds.large_n,
    })
}

/// Zero `j_{nu,k}`, `k <= 100`, closest to `x`.
pub fn nearest_zero(nu: BesselOrder, x: f64) -> Result<BesselZero> {
    let mut prev = bessel_j_zero(nu, 1)?;
    if x <= prev.value {
        return Ok(prev);
    }
    for k in 2..=crate::specfun::MAX_ZERO_INDEX {
        let next = bessel_j_zero(nu, k)?;
        if x <= next.value {
            return Ok(if x - prev.value <= next.value - x { prev } else { next });
        }
        prev = next;
    }
    // Past the last supported zero: accept only within half a spacing.
    let before = bessel_j_zero(nu, prev.k - 1)?;
    if x - prev.value <= 0.5 * (prev.value - before.value) {
        Ok(prev)
    } else {
        Err(Error::domain(
            "nearest_zero",
            alloc::format!("x_R = {x} lies beyond the supported zeros (k <= {})", prev.k),
        ))
    }
}
