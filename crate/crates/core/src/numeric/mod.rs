//! Numerov shooting oracle for the bound spectrum and scattering length.

mod grid;
mod numerov;
mod scattering;
mod spectrum;

pub use grid::{build_grid, build_grid_with, outer_radius, reference_length, GridOptions, RadialGrid, Segment};
pub use numerov::{numerov_integrate, WavefunctionTrace};
pub use scattering::{scattering_fit, scattering_length, ScatteringFit};
pub use spectrum::{
    shoot_bound_states, shoot_bound_states_with, weakest_bound_kappa, weakest_bound_kappa_with, BoundState,
    BoundStateSet, ShootOptions,
};
