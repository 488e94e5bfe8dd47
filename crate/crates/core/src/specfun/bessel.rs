//! Bessel functions `J_nu(x)` and `Y_nu(x)` of real order `nu >= 0` and real
//! argument `x > 0`.
//!
//! Three regimes are used:
//!
//! * `x < 2`: ascending power series for `J`, Temme's series for `Y` at the
//!   reduced order `mu = nu - round(nu)` followed by upward recurrence. Temme's
//!   series is uniform in `mu`, so integer orders need no special casing.
//! * `2 <= x < 40 + nu^2/2`: continued fraction for `J'/J` with backward
//!   recurrence in the order, Steed's complex continued fraction for
//!   `(J', Y, Y')` at the reduced order, upward recurrence for `Y`.
//! * `x >= 40 + nu^2/2`: Hankel asymptotic expansion.

use core::f64::consts::{FRAC_2_PI, PI};

#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::{gamma_pos, temme_gammas};
use super::BesselOrder;
use crate::{Error, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 100_000;
const SERIES_MAX_X: f64 = 2.0;

/// `J_nu(x)` for `x > 0`.
pub fn bessel_j(nu: BesselOrder, x: f64) -> Result<f64> {
    check_arg("bessel_j", x)?;
    Ok(jy(nu.get(), x)?.j)
}

/// `Y_nu(x)` for `x > 0`.
pub fn bessel_y(nu: BesselOrder, x: f64) -> Result<f64> {
    check_arg("bessel_y", x)?;
    Ok(jy(nu.get(), x)?.y)
}

/// `(J_nu(x), Y_nu(x))` from a single evaluation.
pub fn bessel_jy(nu: BesselOrder, x: f64) -> Result<(f64, f64)> {
    check_arg("bessel_jy", x)?;
    let v = jy(nu.get(), x)?;
    Ok((v.j, v.y))
}

/// `J'_nu(x) = -J_{nu+1}(x) + (nu/x) J_nu(x)`.
pub fn bessel_j_prime(nu: BesselOrder, x: f64) -> Result<f64> {
    check_arg("bessel_j_prime", x)?;
    let n = nu.get();
    let lo = jy(n, x)?;
    let hi = jy(n + 1.0, x)?;
    Ok(-hi.j + n / x * lo.j)
}

/// `Y'_nu(x) = -Y_{nu+1}(x) + (nu/x) Y_nu(x)`.
pub fn bessel_y_prime(nu: BesselOrder, x: f64) -> Result<f64> {
    check_arg("bessel_y_prime", x)?;
    let n = nu.get();
    let lo = jy(n, x)?;
    let hi = jy(n + 1.0, x)?;
    Ok(-hi.y + n / x * lo.y)
}

fn check_arg(op: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(op, alloc::format!("argument must be finite and > 0, got {x}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Jy {
    pub j: f64,
    pub y: f64,
}

pub(crate) fn hankel_threshold(nu: f64) -> f64 {
    40.0 + 0.5 * nu * nu
}

/// Both kinds at order `nu >= 0`, `x > 0`.
pub(crate) fn jy(nu: f64, x: f64) -> Result<Jy> {
    debug_assert!(nu >= 0.0 && x > 0.0);
    if x >= hankel_threshold(nu) {
        return Ok(hankel(nu, x));
    }
    if x < SERIES_MAX_X {
        return Ok(Jy { j: j_series(nu, x), y: y_temme(nu, x)? });
    }
    steed(nu, x)
}

/// Ascending series `J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)`.
pub(crate) fn j_series(nu: f64, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (nu + k));
        sum += term;
        if term.abs() < EPS * sum.abs() {
            break;
        }
        k += 1.0;
    }
    if nu == 0.0 {
        return sum;
    }
    (0.5 * x).powf(nu) / gamma_pos(nu + 1.0) * sum
}

/// Temme's series for `Y_mu`, `Y_{mu+1}` at `|mu| <= 1/2`, then upward
/// recurrence to `Y_nu`. Intended for `x < 2`.
fn y_temme(nu: f64, x: f64) -> Result<f64> {
    let nl = (nu + 0.5).floor();
    let mu = nu - nl;
    let mu2 = mu * mu;
    let half_x = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -half_x.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let g = temme_gammas(mu);
    let mut ff = FRAC_2_PI * fact * (g.gam1 * e.cosh() + g.gam2 * fact2 * d);
    let ee = e.exp();
    let mut p = ee / (g.rgamma_plus * PI);
    let mut q = 1.0 / (ee * PI * g.rgamma_minus);
    let half_pimu = 0.5 * pimu;
    let fact3 = if half_pimu.abs() < EPS { 1.0 } else { half_pimu.sin() / half_pimu };
    let r = PI * half_pimu * fact3 * fact3;
    let mut c = 1.0;
    let dd = -half_x * half_x;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    let mut converged = false;
    for i in 1..MAXIT {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            op: "bessel_y",
            detail: alloc::format!("Temme series at nu = {nu}, x = {x}"),
        });
    }
    let mut y_lo = -sum;
    let mut y_hi = -sum1 * (2.0 / x);
    for i in 1..=(nl as usize) {
        let next = (mu + i as f64) * (2.0 / x) * y_hi - y_lo;
        y_lo = y_hi;
        y_hi = next;
    }
    Ok(y_lo)
}

/// Continued fractions (CF1 for `J'/J`, Steed's CF2 for `p + iq`) with
/// backward recurrence for `J` and upward recurrence for `Y`. Intended for
/// `x >= 2`.
fn steed(nu: f64, x: f64) -> Result<Jy> {
    let nl = (nu - x + 1.5).floor().max(0.0);
    let mu = nu - nl;
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: h = J'_nu / J_nu, modified Lentz.
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { op: "bessel_jy", detail: alloc::format!("CF1 at nu = {nu}, x = {x}") });
    }

    // Backward recurrence from nu down to mu on unnormalised values.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in 0..(nl as usize) {
        let t = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * t - rjl;
        rjl = t;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    // CF2: p + iq = (J' + iY') / (J + iY) at order mu.
    let mut a = 0.25 - mu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    converged = false;
    for i in 2..MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { op: "bessel_jy", detail: alloc::format!("CF2 at nu = {nu}, x = {x}") });
    }
    let gam = (p - f) / q;
    let mut rjmu = (w / ((p - f) * gam + q)).sqrt();
    if rjl < 0.0 {
        rjmu = -rjmu;
    }
    let rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let ry1 = mu * xi * rymu - rymup;

    let j = rjl1 * (rjmu / rjl);
    let mut y_lo = rymu;
    let mut y_hi = ry1;
    for i in 1..=(nl as usize) {
        let next = (mu + i as f64) * xi2 * y_hi - y_lo;
        y_lo = y_hi;
        y_hi = next;
    }
    Ok(Jy { j, y: y_lo })
}

/// Hankel's asymptotic expansion, truncated at the smallest term.
pub(crate) fn hankel(nu: f64, x: f64) -> Jy {
    let four_nu2 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (four_nu2 - odd * odd) / (8.0 * kf * x);
        let mag = term.abs();
        if mag > last {
            break;
        }
        // (-1)^floor(k/2) sign pattern: a1 +Q, a2 -P, a3 -Q, a4 +P, ...
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 1 {
            q += signed;
        } else {
            p += signed;
        }
        if mag < EPS * 1e-2 {
            break;
        }
        last = mag;
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    let amp = (FRAC_2_PI / x).sqrt();
    let (s, c) = chi.sin_cos();
    Jy { j: amp * (p * c - q * s), y: amp * (p * s + q * c) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(nu: f64) -> BesselOrder {
        BesselOrder::new(nu).unwrap()
    }

    #[test]
    fn half_integer_closed_forms() {
        for i in 1..=500 {
            let x = 0.1 * i as f64;
            let s = (2.0 / (PI * x)).sqrt();
            let (j, y) = bessel_jy(order(0.5), x).unwrap();
            assert!((j - s * x.sin()).abs() < 1e-13 * s, "J_1/2({x})");
            assert!((y + s * x.cos()).abs() < 1e-13 * s, "Y_1/2({x})");
        }
    }

    #[test]
    fn small_argument_limits() {
        assert!((bessel_j(order(0.0), 1e-10).unwrap() - 1.0).abs() < 1e-15);
        let y_small = bessel_y(order(0.0), 1e-6).unwrap();
        let y_tiny = bessel_y(order(0.0), 1e-12).unwrap();
        assert!(y_small.is_finite() && y_tiny.is_finite());
        assert!(y_tiny < y_small && y_small < -8.0);
    }

    #[test]
    fn regimes_agree_at_boundaries() {
        for &nu in &[0.0, 0.25, 1.0, 2.5, 7.0] {
            // series/Temme vs continued fractions around x = 2
            let a = jy(nu, 1.999_999).unwrap();
            let b = steed(nu, 1.999_999).unwrap();
            assert!((a.j - b.j).abs() < 1e-14 * (1.0 + a.j.abs()), "J nu = {nu}");
            assert!((a.y - b.y).abs() < 1e-13 * (1.0 + a.y.abs()), "Y nu = {nu}");
            // continued fractions vs Hankel around the asymptotic switch
            let x = hankel_threshold(nu);
            let c = steed(nu, x).unwrap();
            let h = hankel(nu, x);
            assert!((c.j - h.j).abs() < 1e-14, "J nu = {nu}");
            assert!((c.y - h.y).abs() < 1e-14, "Y nu = {nu}");
        }
    }

    #[test]
    fn near_integer_order_is_continuous() {
        for &x in &[0.3, 1.5, 3.0, 11.0] {
            for &m in &[0.0, 1.0, 3.0] {
                let at = bessel_y(order(m), x).unwrap();
                let off = bessel_y(order(m + 1e-9), x).unwrap();
                assert!((at - off).abs() < 1e-7 * (1.0 + at.abs()), "m = {m}, x = {x}");
            }
        }
    }

    #[test]
    fn rejects_non_positive_argument() {
        assert!(bessel_j(order(1.0), 0.0).is_err());
        assert!(bessel_y(order(1.0), -2.0).is_err());
        assert!(bessel_j(order(1.0), f64::NAN).is_err());
    }
}
