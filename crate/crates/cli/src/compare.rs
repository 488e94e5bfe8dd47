use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use rayon::prelude::*;
use tailbound::analytic::{
    mean_scattering_length, resonance_kappa_near_zero, resonance_kappa_with, semiclassical_kappa, threshold_energy,
};
use tailbound::model::{derive_scales, RegimeThresholds};
use tailbound::numeric::{scattering_length, weakest_bound_kappa};
use tailbound::PotentialSpec;

use crate::args::CompareArgs;
use crate::units::Units;
use crate::{CliError, EXIT_OK, EXIT_SOFTWARE};

/// Column names, fixed as part of the output format. The `eq26`, `eq30` and
/// `eq31` suffixes name the Bessel-ratio condition, the detuning expansion
/// and the threshold energy.
pub const CSV_HEADER: [&str; 18] = [
    "n",
    "l",
    "beta_n",
    "R",
    "r_n",
    "nu",
    "x_R",
    "k",
    "delta_k",
    "kappa_eq26",
    "kappa_eq30",
    "kappa_numeric",
    "kappa_semiclassical",
    "E_eq31",
    "E_numeric",
    "rel_diff_kappa",
    "small_kappa_ok",
    "small_delta_ok",
];

/// One sweep point. Wavenumbers are in inverse length, energies in the
/// caller's units; `None` is written as an empty field.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub n: f64,
    pub l: u32,
    pub beta_n: f64,
    pub core_radius: f64,
    pub r_n: f64,
    pub nu: f64,
    pub x_r: f64,
    pub k: u32,
    pub delta_k: f64,
    pub kappa_eq26: Option<f64>,
    pub kappa_eq30: Option<f64>,
    pub kappa_numeric: Option<f64>,
    pub kappa_semiclassical: Option<f64>,
    pub e_eq31: Option<f64>,
    pub e_numeric: Option<f64>,
    pub rel_diff_kappa: Option<f64>,
    pub small_kappa_ok: bool,
    pub small_delta_ok: bool,
    /// Estimators that failed for reasons other than a missing state.
    pub failures: Vec<String>,
}

impl ComparisonRow {
    pub fn fields(&self) -> Vec<String> {
        let f = |x: f64| format!("{x:.16e}");
        let o = |x: Option<f64>| x.map(f).unwrap_or_default();
        vec![
            f(self.n),
            self.l.to_string(),
            f(self.beta_n),
            f(self.core_radius),
            f(self.r_n),
            f(self.nu),
            f(self.x_r),
            self.k.to_string(),
            f(self.delta_k),
            o(self.kappa_eq26),
            o(self.kappa_eq30),
            o(self.kappa_numeric),
            o(self.kappa_semiclassical),
            o(self.e_eq31),
            o(self.e_numeric),
            o(self.rel_diff_kappa),
            self.small_kappa_ok.to_string(),
            self.small_delta_ok.to_string(),
        ]
    }
}

/// Geometric sequence from `from` to `to` with `steps` points.
pub fn detuning_sweep(from: f64, to: f64, steps: usize) -> Result<Vec<f64>, CliError> {
    for d in [from, to] {
        if !(d > 0.0 && d <= 0.3) {
            return Err(CliError::Usage(format!("detuning must lie in (0, 0.3], got {d}")));
        }
    }
    if steps == 0 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    if steps == 1 {
        return Ok(vec![from]);
    }
    let ratio = to / from;
    Ok((0..steps)
        .map(|i| match i {
            0 => from,
            i if i == steps - 1 => to,
            i => from * ratio.powf(i as f64 / (steps - 1) as f64),
        })
        .collect())
}

/// Evaluates every estimator along the sweep, in sweep order.
pub fn comparison_rows(args: &CompareArgs) -> Result<Vec<ComparisonRow>, CliError> {
    let units = Units::new(args.hbar2_over_2mu)?;
    let deltas = detuning_sweep(args.delta_from, args.delta_to, args.steps)?;
    let specs = deltas
        .iter()
        .map(|&d| PotentialSpec::with_detuning(args.n, args.l, args.k, d, args.rn))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(specs.par_iter().map(|s| row(s, args.k, &units)).collect())
}

fn keep<T>(r: tailbound::Result<T>, name: &str, failures: &mut Vec<String>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(tailbound::Error::NoBoundState | tailbound::Error::NoNearThresholdState { .. }) => None,
        Err(e) => {
            failures.push(format!("{name}: {e}"));
            None
        }
    }
}

fn row(spec: &PotentialSpec, k: u32, units: &Units) -> ComparisonRow {
    let sc = derive_scales(spec);
    let thresholds = RegimeThresholds::default();
    let mut failures = Vec::new();
    let eq26 = keep(resonance_kappa_with(spec, Some(k)), "kappa_eq26", &mut failures);
    let eq30 = keep(resonance_kappa_near_zero(spec, k), "kappa_eq30", &mut failures);
    let eq31 = keep(threshold_energy(spec, k), "E_eq31", &mut failures);
    let numeric = keep(weakest_bound_kappa(spec), "kappa_numeric", &mut failures);
    let semiclassical = if spec.l() == 0 && spec.n() > 3.0 {
        let a = keep(scattering_length(spec), "kappa_semiclassical", &mut failures);
        let a_bar = keep(mean_scattering_length(spec), "kappa_semiclassical", &mut failures);
        match (a, a_bar) {
            (Some(a), Some(b)) => keep(semiclassical_kappa(a, b), "kappa_semiclassical", &mut failures),
            _ => None,
        }
    } else {
        None
    };
    let kappa_eq26 = eq26.map(|e| e.kappa(sc.r_n));
    let kappa_numeric = numeric.map(|e| e.kappa(sc.r_n));
    let reference = numeric.or(eq26).or(eq30).map(|e| e.kappa_rn).unwrap_or(0.0);
    let delta_k = sc.x_r - tailbound::specfun::bessel_j_zero(sc.order(), k).map(|z| z.value).unwrap_or(f64::NAN);
    ComparisonRow {
        n: spec.n(),
        l: spec.l(),
        beta_n: units.beta_from_natural(spec.beta()),
        core_radius: spec.core_radius(),
        r_n: sc.r_n,
        nu: sc.nu,
        x_r: sc.x_r,
        k,
        delta_k,
        kappa_eq26,
        kappa_eq30: eq30.map(|e| e.kappa(sc.r_n)),
        kappa_numeric,
        kappa_semiclassical: semiclassical,
        e_eq31: eq31.map(|e| units.energy_from_natural(e.energy)),
        e_numeric: numeric.map(|e| units.energy_from_natural(e.energy)),
        rel_diff_kappa: match (kappa_eq26, kappa_numeric) {
            (Some(a), Some(b)) => Some((a - b).abs() / b),
            _ => None,
        },
        small_kappa_ok: reference < thresholds.kappa_rn,
        small_delta_ok: delta_k.abs() < thresholds.delta,
        failures,
    }
}

pub fn write_csv<W: Write>(w: W, rows: &[ComparisonRow]) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for r in rows {
        out.write_record(r.fields())?;
    }
    out.flush()?;
    Ok(())
}

fn csv_error(path: &Path, e: csv::Error) -> CliError {
    let source = match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    };
    CliError::Io { path: path.to_path_buf(), source }
}

pub(crate) fn run(args: &CompareArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let to_stdout = args.csv.as_os_str() == "-";
    // Open the file before the sweep so an unwritable path fails fast.
    let file = if to_stdout {
        None
    } else {
        Some(File::create(&args.csv).map_err(|e| CliError::Io { path: args.csv.clone(), source: e })?)
    };
    let rows = comparison_rows(args)?;
    match file {
        Some(f) => write_csv(f, &rows).map_err(|e| csv_error(&args.csv, e))?,
        None => write_csv(&mut *out, &rows).map_err(|e| csv_error(&args.csv, e))?,
    }

    let _ = writeln!(
        err,
        "compare: {} rows, n = {} l = {} k = {} r_n = {}, written to {}",
        rows.len(),
        args.n,
        args.l,
        args.k,
        args.rn,
        if to_stdout { "stdout".to_string() } else { args.csv.display().to_string() }
    );
    let mut failed = false;
    for (i, r) in rows.iter().enumerate() {
        if !r.small_delta_ok {
            let _ =
                writeln!(err, "warning: row {i} (delta_k = {:.4e}) is outside the small-detuning regime", r.delta_k);
        }
        if !r.small_kappa_ok {
            let _ = writeln!(
                err,
                "warning: row {i} (delta_k = {:.4e}) has kappa r_n outside the small-kappa regime",
                r.delta_k
            );
        }
        for f in &r.failures {
            let _ = writeln!(err, "error: row {i}: {f}");
            failed = true;
        }
    }
    Ok(if failed { EXIT_SOFTWARE } else { EXIT_OK })
}
