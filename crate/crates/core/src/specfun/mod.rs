//! Special functions needed by the threshold formulas: Gamma, Bessel
//! functions of both kinds for real order, zeros of `J_nu`, double factorial.
//!
//! Everything here is a pure function of its arguments.

mod bessel;
mod gamma;
mod zeros;

pub use bessel::{bessel_j, bessel_j_prime, bessel_jy, bessel_y, bessel_y_prime};
pub use gamma::{double_factorial, gamma_fn};
pub use zeros::{bessel_j_zero, MAX_ZERO_INDEX, MAX_ZERO_ORDER};

pub(crate) use bessel::jy;
pub(crate) use gamma::gamma_pos;

use crate::{Error, Result};

/// A non-negative, finite Bessel order.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu >= 0.0 {
            Ok(Self(nu))
        } else {
            Err(Error::domain("BesselOrder", alloc::format!("order must be finite and >= 0, got {nu}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for BesselOrder {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        Self::new(nu)
    }
}

/// The `k`-th positive zero `j_{nu,k}` of `J_nu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselZero {
    pub nu: BesselOrder,
    /// 1-based index.
    pub k: u32,
    pub value: f64,
}
