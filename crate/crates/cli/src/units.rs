use crate::CliError;

/// Conversion between user units and the library's `hbar = mu = 1`.
///
/// With `s = hbar^2/(2 mu)` the radial equation in user units becomes the
/// natural-unit one with `beta -> beta / (2 s)` and `E -> E / (2 s)`.
/// Lengths and wavenumbers are the same in both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    s: f64,
}

impl Units {
    pub fn new(hbar2_over_2mu: Option<f64>) -> Result<Self, CliError> {
        match hbar2_over_2mu {
            None => Ok(Self::natural()),
            Some(s) if s.is_finite() && s > 0.0 => Ok(Self { s }),
            Some(s) => Err(CliError::Usage(format!("--hbar2-over-2mu must be finite and > 0, got {s}"))),
        }
    }

    pub fn natural() -> Self {
        Self { s: 0.5 }
    }

    pub fn is_natural(&self) -> bool {
        self.s == 0.5
    }

    pub fn beta_to_natural(&self, beta: f64) -> f64 {
        beta / (2.0 * self.s)
    }

    pub fn beta_from_natural(&self, beta: f64) -> f64 {
        beta * 2.0 * self.s
    }

    pub fn energy_from_natural(&self, e: f64) -> f64 {
        e * 2.0 * self.s
    }
}
