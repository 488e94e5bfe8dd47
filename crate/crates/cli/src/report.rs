use std::io::{self, Write};

use tailbound::model::derive_scales;
use tailbound::{PotentialSpec, RegimeReport};

use crate::args::SpecArgs;
use crate::units::Units;
use crate::CliError;

pub(crate) fn build_spec(args: &SpecArgs) -> Result<(PotentialSpec, Units), CliError> {
    let units = Units::new(args.hbar2_over_2mu)?;
    let spec = PotentialSpec::new(args.n, units.beta_to_natural(args.beta), args.core_radius, args.l)?;
    Ok((spec, units))
}

pub(crate) fn stdout_error(e: io::Error) -> CliError {
    CliError::Io { path: "-".into(), source: e }
}

pub(crate) fn write_spec(out: &mut dyn Write, spec: &PotentialSpec, units: &Units) -> io::Result<()> {
    let sc = derive_scales(spec);
    let unit_note = if units.is_natural() {
        "natural units (hbar = mu = 1)".to_string()
    } else {
        format!("hbar^2/(2 mu) = {}", units.energy_from_natural(0.5))
    };
    writeln!(
        out,
        "potential: n = {} l = {} beta_n = {:.10e} R = {:.10e} [{unit_note}]",
        spec.n(),
        spec.l(),
        units.beta_from_natural(spec.beta()),
        spec.core_radius()
    )?;
    writeln!(out, "scales:    r_n = {:.10e} nu = {:.10e} x_R = {:.10e}", sc.r_n, sc.nu, sc.x_r)
}

pub(crate) fn regime_flags(r: &RegimeReport) -> String {
    format!(
        "k={} delta_k={:+.4e} small_kappa_ok={} small_delta_ok={} large_n_ok={}",
        r.nearest_zero.k, r.delta_k, r.small_kappa_ok, r.small_delta_ok, r.large_n_ok
    )
}
