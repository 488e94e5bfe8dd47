use std::io::Write;

use tailbound::analytic::{
    resonance_kappa_near_zero, resonance_kappa_with, threshold_energy, threshold_energy_large_n, ResonanceEstimate,
};
use tailbound::model::{characteristic_length, regime_report};

use crate::args::ThresholdArgs;
use crate::report::{build_spec, regime_flags, stdout_error, write_spec};
use crate::{CliError, EXIT_NO_NEAR_THRESHOLD, EXIT_OK};

pub(crate) fn run(args: &ThresholdArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (spec, units) = build_spec(&args.spec)?;
    let k = match args.k {
        Some(k) => k,
        None => regime_report(&spec, 0.0)?.nearest_zero.k,
    };
    let r_n = characteristic_length(&spec);

    let mut rows: Vec<(&str, tailbound::Result<ResonanceEstimate>)> = vec![
        ("bessel-ratio", resonance_kappa_with(&spec, Some(k))),
        ("detuning-expansion", resonance_kappa_near_zero(&spec, k)),
        ("threshold-energy", threshold_energy(&spec, k)),
    ];
    if spec.n() >= 20.0 {
        rows.push(("large-n", threshold_energy_large_n(&spec, k)));
    }

    write_spec(out, &spec, &units).map_err(stdout_error)?;
    writeln!(out, "zero:      k = {k}{}", if args.k.is_some() { "" } else { " (nearest to x_R)" })
        .map_err(stdout_error)?;
    writeln!(out, "{:<20} {:>18} {:>18} {:>18}  regime", "method", "kappa r_n", "kappa", "E").map_err(stdout_error)?;
    let mut missing = Vec::new();
    for (name, est) in rows {
        match est {
            Ok(e) => writeln!(
                out,
                "{name:<20} {:>18.10e} {:>18.10e} {:>18.10e}  {}",
                e.kappa_rn,
                e.kappa(r_n),
                units.energy_from_natural(e.energy),
                regime_flags(&e.regime)
            )
            .map_err(stdout_error)?,
            Err(tailbound::Error::NoNearThresholdState { bracket }) => {
                writeln!(out, "{name:<20} {:>18} {:>18} {:>18}  bracket = {bracket:.4e}", "-", "-", "-")
                    .map_err(stdout_error)?;
                missing.push(name);
            }
            Err(e) => return Err(e.into()),
        }
    }
    if missing.is_empty() {
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(
            err,
            "no near-threshold state for {}: x_R sits on the side of j_(nu,{k}) that hosts no new level \
             (the bracket is negative); a bound state appears once x_R passes the zero",
            missing.join(", ")
        );
        Ok(EXIT_NO_NEAR_THRESHOLD)
    }
}
