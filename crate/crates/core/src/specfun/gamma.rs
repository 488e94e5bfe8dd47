use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Taylor coefficients of `1/Gamma(z)` about `z = 0`; `RGAMMA[k]` multiplies `z^(k+1)`.
#[allow(clippy::excessive_precision)]
const RGAMMA: [f64; 30] = [
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_9,
    -0.042_002_635_034_095_24,
    0.166_538_611_382_291_5,
    -0.042_197_734_555_544_34,
    -0.009_621_971_527_876_974,
    0.007_218_943_246_663_1,
    -0.001_165_167_591_859_065,
    -0.000_215_241_674_114_951,
    0.000_128_050_282_388_116_2,
    -2.013_485_478_078_824e-5,
    -1.250_493_482_142_671e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_507e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
    -1.181_259_301_697_458_8e-16,
    1.186_692_254_751_600_3e-18,
    1.412_380_655_318_031_8e-18,
    -2.298_745_684_435_370_2e-19,
    1.714_406_321_927_337_4e-20,
];

/// `Gamma(x)` for `x > 0`.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain("gamma_fn", alloc::format!("argument must be finite and > 0, got {x}")));
    }
    Ok(gamma_pos(x))
}

/// Unchecked `Gamma(x)` for finite `x > 0`.
pub(crate) fn gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        // Gamma(x) = Gamma(x + 1) / x keeps the Lanczos sum in its good range.
        return lanczos(x + 1.0) / x;
    }
    lanczos(x)
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut sum = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // Split the power to delay overflow for large arguments.
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * sum
}

/// Returns `(1/Gamma(1 + mu), 1/Gamma(1 - mu))` together with Temme's
/// auxiliary quantities
/// `gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)` and
/// `gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2`, all stable at `mu = 0`.
///
/// Valid for `|mu| <= 1/2`.
pub(crate) fn temme_gammas(mu: f64) -> TemmeGammas {
    debug_assert!(mu.abs() <= 0.5 + 1e-12);
    let mut even = 0.0; // sum over k even of c_k mu^(k-2)
    let mut odd = 0.0; // sum over k odd of c_k mu^(k-1)
                       // Horner in mu^2 from the top.
    let mu2 = mu * mu;
    for pair in RGAMMA.chunks(2).rev() {
        odd = odd * mu2 + pair[0];
        even = even * mu2 + pair[1];
    }
    let gam1 = -even;
    let gam2 = odd;
    TemmeGammas { gam1, gam2, rgamma_plus: gam2 - mu * gam1, rgamma_minus: gam2 + mu * gam1 }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct TemmeGammas {
    pub gam1: f64,
    pub gam2: f64,
    /// `1 / Gamma(1 + mu)`
    pub rgamma_plus: f64,
    /// `1 / Gamma(1 - mu)`
    pub rgamma_minus: f64,
}

/// `m!! = m (m-2) ... 1` for odd `m >= -1`, with `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<u64> {
    if m < -1 || m % 2 == 0 {
        return Err(Error::domain("double_factorial", alloc::format!("argument must be odd and >= -1, got {m}")));
    }
    let mut acc: u64 = 1;
    let mut k = m;
    while k > 1 {
        acc = acc.checked_mul(k as u64).ok_or(Error::Overflow("double_factorial"))?;
        k -= 2;
    }
    Ok(acc)
}
