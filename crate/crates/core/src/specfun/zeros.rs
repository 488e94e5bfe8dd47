use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::bessel::jy;
use super::{BesselOrder, BesselZero};
use crate::{Error, Result};

const MAX_NEWTON: usize = 50;
pub const MAX_ZERO_ORDER: f64 = 10.0;
pub const MAX_ZERO_INDEX: u32 = 100;

/// The `k`-th positive zero of `J_nu` (`k >= 1`), for `nu` in `[0, 10]` and
/// `k <= 100`.
///
/// Seeded by McMahon's expansion and polished by Newton's method with
/// `J'_nu = -J_{nu+1} + (nu/x) J_nu`.
pub fn bessel_j_zero(nu: BesselOrder, k: u32) -> Result<BesselZero> {
    let n = nu.get();
    if n > MAX_ZERO_ORDER {
        return Err(Error::domain("bessel_j_zero", alloc::format!("order {n} outside supported range [0, 10]")));
    }
    if k == 0 || k > MAX_ZERO_INDEX {
        return Err(Error::domain("bessel_j_zero", alloc::format!("index {k} outside supported range [1, 100]")));
    }
    let seed = mcmahon(n, k);
    let mut x = seed;
    for _ in 0..MAX_NEWTON {
        let lo = jy(n, x)?;
        let hi = jy(n + 1.0, x)?;
        let deriv = -hi.j + n / x * lo.j;
        let step = lo.j / deriv;
        x -= step;
        if !x.is_finite() || x <= 0.0 {
            break;
        }
        if step.abs() <= 1e-13 * x {
            return Ok(BesselZero { nu, k, value: x });
        }
    }
    Err(Error::NoConvergence {
        op: "bessel_j_zero",
        detail: alloc::format!("Newton from McMahon seed {seed} for nu = {n}, k = {k} ended at {x}"),
    })
}

/// McMahon's large-zero expansion, truncated once its terms stop decreasing.
fn mcmahon(nu: f64, k: u32) -> f64 {
    let beta = (k as f64 + 0.5 * nu - 0.25) * PI;
    let m = 4.0 * nu * nu;
    let b8 = 8.0 * beta;
    let terms = [
        (m - 1.0) / b8,
        4.0 * (m - 1.0) * (7.0 * m - 31.0) / (3.0 * b8.powi(3)),
        32.0 * (m - 1.0) * (83.0 * m * m - 982.0 * m + 3779.0) / (15.0 * b8.powi(5)),
        64.0 * (m - 1.0) * (6949.0 * m * m * m - 153_855.0 * m * m + 1_585_743.0 * m - 6_277_237.0)
            / (105.0 * b8.powi(7)),
    ];
    let mut x = beta;
    let mut last = f64::INFINITY;
    for t in terms {
        if t.abs() > last {
            break;
        }
        x -= t;
        last = t.abs();
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(nu: f64) -> BesselOrder {
        BesselOrder::new(nu).unwrap()
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        for m in 1..=100u32 {
            let z = bessel_j_zero(order(0.5), m).unwrap();
            assert!((z.value - m as f64 * PI).abs() < 1e-10, "m = {m}");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(bessel_j_zero(order(0.0), 0).is_err());
        assert!(bessel_j_zero(order(0.0), 101).is_err());
        assert!(bessel_j_zero(order(10.5), 1).is_err());
    }

    #[test]
    fn zeros_have_small_residual_and_increase() {
        for i in 0..=40 {
            let nu = 0.25 * i as f64;
            let mut prev = 0.0;
            for k in 1..=100 {
                let z = bessel_j_zero(order(nu), k).unwrap();
                let r = jy(nu, z.value).unwrap().j;
                assert!(r.abs() < 1e-10, "nu = {nu}, k = {k}, J = {r}");
                assert!(k == 1 || z.value > prev + 2.5, "nu = {nu}, k = {k}");
                prev = z.value;
            }
        }
    }
}
