// Independent reference implementations for the integration tests. Nothing
// here calls into the library's special functions.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use statrs::function::gamma::gamma;

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

/// `sum_m (-1)^m (x^2/4)^m / (m! (nu+1)_m)` in exact arithmetic, for rational
/// `nu` given as `p/q`. Stops once a term is below `1e-40` of the running sum.
fn series_sum(p: i64, q: i64, x: f64) -> BigRational {
    let z = {
        let x = rational(x);
        &x * &x / BigRational::from_integer(BigInt::from(4))
    };
    let nu = BigRational::new(BigInt::from(p), BigInt::from(q));
    let tiny = BigRational::new(BigInt::one(), BigInt::from(10).pow(40));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut m = 0i64;
    loop {
        m += 1;
        let denom = BigRational::from_integer(BigInt::from(m)) * (&nu + BigRational::from_integer(BigInt::from(m)));
        term = -(term * &z) / denom;
        sum += &term;
        // Terms only shrink once m exceeds x/2; before that keep going.
        if (m as f64) > x && term.abs() < &tiny * sum.abs().max(BigRational::one()) {
            break;
        }
        if m > 400 {
            break;
        }
    }
    sum
}

/// `J_{p/q}(x)` from the ascending series. The series is exact; only the
/// prefactor `(x/2)^nu / Gamma(nu+1)` is evaluated in floating point.
pub fn bessel_j_oracle(p: i64, q: i64, x: f64) -> f64 {
    let nu = p as f64 / q as f64;
    let pre = (0.5 * x).powf(nu) / gamma(nu + 1.0);
    pre * series_sum(p, q, x).to_f64().unwrap()
}

/// `Y_{p/q}(x)` for non-integer order through
/// `Y = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi)`.
pub fn bessel_y_oracle(p: i64, q: i64, x: f64) -> f64 {
    let nu = p as f64 / q as f64;
    assert!(nu.fract() != 0.0, "connection formula needs non-integer order");
    let (s, c) = (nu * std::f64::consts::PI).sin_cos();
    (bessel_j_oracle(p, q, x) * c - bessel_j_oracle(-p, q, x)) / s
}

/// Sign of `J_m(x)` for integer `m >= 0`, decided exactly.
fn j_integer_sign(m: i64, x: f64) -> i32 {
    let s = series_sum(m, 1, x);
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

/// Root of `J_m` in `(lo, hi)` by bisection on the exact series sign.
pub fn bessel_zero_by_bisection(m: i64, mut lo: f64, mut hi: f64) -> f64 {
    let s_lo = j_integer_sign(m, lo);
    assert!(s_lo != 0 && s_lo == -j_integer_sign(m, hi), "bracket does not straddle a zero");
    while hi - lo > 4.0 * f64::EPSILON * hi {
        let mid = 0.5 * (lo + hi);
        if j_integer_sign(m, mid) == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Central difference with Richardson extrapolation.
pub fn derivative(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let d = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d(0.5 * h) - d(h)) / 3.0
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
