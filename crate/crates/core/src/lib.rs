//! Most weakly bound level of a particle in a hard-core plus attractive
//! inverse-power-law potential `V(r) = -beta_n / r^n` (`n > 2`, wall at `r = R`).
//!
//! The crate is `no_std` (it needs `alloc`) and is split into:
//!
//! * [`specfun`]: Gamma, Bessel `J_nu`/`Y_nu` of real order, zeros of `J_nu`,
//!   double factorial.
//! * [`model`]: the problem instance, derived length scale and Bessel
//!   arguments, and validity-regime reporting.
//! * [`analytic`]: closed-form matched-asymptotics estimates of the threshold
//!   wavenumber and energy, plus the mean scattering length relation.
//! * [`numeric`]: an independent Numerov shooting solver for the full radial
//!   equation and the zero-energy scattering length.
//!
//! Units are natural throughout: `hbar = mu = 1`, so `E = -kappa^2 / 2`.
#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// The `num_traits::Float` imports carry `allow(unused_imports)`: once std is
// anywhere in the crate graph its inherent float methods win and the trait
// goes unused.

extern crate alloc;

pub mod analytic;
mod error;
pub mod model;
pub mod numeric;
pub mod specfun;

pub use error::{Error, Result};
pub use model::{PotentialSpec, RegimeReport, Scales};
