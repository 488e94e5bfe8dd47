use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "tailbound",
    version,
    about = "Weakly bound levels of a hard core plus an attractive -beta/r^n tail",
    long_about = "Weakly bound levels of a hard core plus an attractive -beta/r^n tail.\n\n\
                  Natural units hbar = mu = 1 by default. Pass --hbar2-over-2mu to read beta and \
                  report energies in units where hbar^2/(2 mu) takes that value; lengths are unchanged."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form wavenumber and energy estimates near a zero of J_nu
    Threshold(ThresholdArgs),
    /// Full bound spectrum from Numerov shooting
    Solve(SpecArgs),
    /// Sweep the detuning and tabulate every estimator as CSV
    Compare(CompareArgs),
    /// Scattering length and the semiclassical wavenumber (l = 0)
    Scatlen(SpecArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Tail exponent n (> 2)
    #[arg(long)]
    pub n: f64,
    /// Tail strength beta_n (> 0)
    #[arg(long)]
    pub beta: f64,
    /// Hard-core radius R (> 0)
    #[arg(long = "R", value_name = "R")]
    pub core_radius: f64,
    /// Angular momentum l
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Value of hbar^2/(2 mu) for physical units
    #[arg(long = "hbar2-over-2mu", value_name = "S")]
    pub hbar2_over_2mu: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ThresholdArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Zero index k of J_nu (default: the zero nearest x_R)
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    /// Tail exponent n (> 2)
    #[arg(long)]
    pub n: f64,
    /// Angular momentum l
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Zero index k of J_nu
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// First detuning of the geometric sweep, in (0, 0.3]
    #[arg(long = "delta-from")]
    pub delta_from: f64,
    /// Last detuning of the geometric sweep, in (0, 0.3]
    #[arg(long = "delta-to")]
    pub delta_to: f64,
    /// Number of sweep points
    #[arg(long, default_value_t = 4)]
    pub steps: usize,
    /// Length scale r_n held fixed during the sweep
    #[arg(long, default_value_t = 1.0)]
    pub rn: f64,
    /// Value of hbar^2/(2 mu) for physical units
    #[arg(long = "hbar2-over-2mu", value_name = "S")]
    pub hbar2_over_2mu: Option<f64>,
    /// Output file, or - for stdout
    #[arg(long, value_name = "PATH", default_value = "-")]
    pub csv: PathBuf,
}
