use std::io::Write;

use tailbound::analytic::{mean_scattering_length, resonance_kappa, semiclassical_kappa};
use tailbound::model::{characteristic_length, regime_report};
use tailbound::numeric::{scattering_length, weakest_bound_kappa};

use crate::args::SpecArgs;
use crate::report::{build_spec, regime_flags, stdout_error, write_spec};
use crate::{CliError, EXIT_OK};

pub(crate) fn run(args: &SpecArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.l != 0 {
        return Err(CliError::Usage(format!("scatlen needs l = 0, got l = {}", args.l)));
    }
    let (spec, units) = build_spec(args)?;
    let r_n = characteristic_length(&spec);
    let a = scattering_length(&spec)?;
    let a_bar = mean_scattering_length(&spec)?;
    let k_sc = semiclassical_kappa(a, a_bar)?;
    let numeric = absent_if_unbound(weakest_bound_kappa(&spec))?;
    let bessel = absent_if_unbound(resonance_kappa(&spec))?;

    write_spec(out, &spec, &units).map_err(stdout_error)?;
    writeln!(out, "a (numeric)          = {a:.10e}").map_err(stdout_error)?;
    writeln!(out, "a_bar                = {a_bar:.10e}").map_err(stdout_error)?;
    writeln!(out, "a - a_bar            = {:.10e}", a - a_bar).map_err(stdout_error)?;
    let sc_regime = regime_report(&spec, k_sc.abs())?;
    writeln!(
        out,
        "kappa semiclassical  = {k_sc:.10e}{}  {}",
        if k_sc < 0.0 { " (virtual state)" } else { "" },
        regime_flags(&sc_regime)
    )
    .map_err(stdout_error)?;
    for (name, est) in [("kappa numerov       ", numeric), ("kappa bessel-ratio  ", bessel)] {
        match est {
            Some(e) => {
                let k = e.kappa(r_n);
                writeln!(
                    out,
                    "{name} = {k:.10e}  kappa (a - a_bar) = {:.10e}  {}",
                    k * (a - a_bar),
                    regime_flags(&e.regime)
                )
                .map_err(stdout_error)?;
            }
            None => writeln!(out, "{name} = none").map_err(stdout_error)?,
        }
    }
    Ok(EXIT_OK)
}

fn absent_if_unbound<T>(r: tailbound::Result<T>) -> Result<Option<T>, CliError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(tailbound::Error::NoBoundState | tailbound::Error::NoNearThresholdState { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}
