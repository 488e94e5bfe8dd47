use std::io::Write;

use tailbound::model::{characteristic_length, regime_report, RegimeThresholds};
use tailbound::numeric::shoot_bound_states;

use crate::args::SpecArgs;
use crate::report::{build_spec, regime_flags, stdout_error, write_spec};
use crate::{CliError, EXIT_NO_BOUND_STATES, EXIT_OK};

pub(crate) fn run(args: &SpecArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (spec, units) = build_spec(args)?;
    let set = shoot_bound_states(&spec)?;
    write_spec(out, &spec, &units).map_err(stdout_error)?;
    if set.is_empty() {
        writeln!(out, "no bound states").map_err(stdout_error)?;
        return Ok(EXIT_NO_BOUND_STATES);
    }
    let r_n = characteristic_length(&spec);
    let small = RegimeThresholds::default().kappa_rn;
    writeln!(out, "{:>5} {:>5} {:>18} {:>18} {:>18}  small_kappa_ok", "index", "nodes", "kappa", "kappa r_n", "E")
        .map_err(stdout_error)?;
    for (i, st) in set.states.iter().enumerate() {
        writeln!(
            out,
            "{i:>5} {:>5} {:>18.10e} {:>18.10e} {:>18.10e}  {}",
            st.node_count,
            st.kappa,
            st.kappa * r_n,
            units.energy_from_natural(st.energy),
            st.kappa * r_n < small
        )
        .map_err(stdout_error)?;
    }
    let weakest = set.weakest().expect("non-empty");
    // Very deep wells can sit past the tabulated zeros; the spectrum is still valid.
    let flags = match regime_report(&spec, weakest.kappa) {
        Ok(r) => regime_flags(&r),
        Err(e) => format!("unavailable ({e})"),
    };
    writeln!(out, "weakest state regime: {flags}").map_err(stdout_error)?;
    Ok(EXIT_OK)
}
