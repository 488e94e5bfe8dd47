use std::fs;
use std::process::{Command, Output};

use tailbound_cli::{
    CSV_HEADER, EXIT_CANT_CREATE, EXIT_NO_BOUND_STATES, EXIT_NO_NEAR_THRESHOLD, EXIT_OK, EXIT_SOFTWARE, EXIT_USAGE,
};

// n = 6, beta = 8 puts r_n at 1; j_(1/4,1) = 2.78088772399497...
const J1: f64 = 2.7808877239949775;

fn core_radius_for(delta: f64) -> String {
    // x_R = 2 / R^2 for n = 6, r_n = 1.
    format!("{:.17e}", (2.0 / (J1 + delta)).sqrt())
}

fn tailbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tailbound")).args(args).output().expect("spawn tailbound")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Value following `label` on the first line that starts with it.
fn field(text: &str, label: &str, col: usize) -> f64 {
    let line = text.lines().find(|l| l.starts_with(label)).unwrap_or_else(|| panic!("no {label} in\n{text}"));
    line[label.len()..].split_whitespace().nth(col).unwrap().parse().unwrap()
}

fn solve_rows(text: &str) -> Vec<(usize, f64)> {
    text.lines()
        .skip_while(|l| !l.trim_start().starts_with("index"))
        .skip(1)
        .take_while(|l| !l.starts_with("weakest"))
        .map(|l| {
            let c: Vec<&str> = l.split_whitespace().collect();
            (c[1].parse().unwrap(), c[2].parse().unwrap())
        })
        .collect()
}

fn spec_args(r: &str) -> Vec<&str> {
    vec!["--n", "6", "--beta", "8", "--R", r]
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let o = tailbound(&[flag]);
        assert_eq!(code(&o), EXIT_OK);
        assert!(!stdout(&o).is_empty());
    }
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(code(&tailbound(&[])), EXIT_USAGE);
    assert_eq!(code(&tailbound(&["solve", "--n", "6"])), EXIT_USAGE);
    let o = tailbound(&["solve", "--n", "2", "--beta", "1", "--R", "1"]);
    assert_eq!(code(&o), EXIT_USAGE);
    assert!(stderr(&o).contains("n must be > 2"));
    assert_eq!(code(&tailbound(&["solve", "--n", "6", "--beta", "-1", "--R", "1"])), EXIT_USAGE);
    assert_eq!(
        code(&tailbound(&["solve", "--n", "6", "--beta", "8", "--R", "1", "--hbar2-over-2mu", "0"])),
        EXIT_USAGE
    );
}

#[test]
fn threshold_on_a_zero_is_exactly_zero() {
    let r = format!("{:.17e}", (2.0 / J1).sqrt());
    let mut a = vec!["threshold"];
    a.extend(spec_args(&r));
    let o = tailbound(&a);
    assert_eq!(code(&o), EXIT_OK, "{}", stderr(&o));
    let out = stdout(&o);
    for m in ["bessel-ratio", "detuning-expansion", "threshold-energy"] {
        let k = field(&out, m, 0);
        assert!(k.abs() < 1e-6, "{m}: {k}");
    }
}

#[test]
fn threshold_estimates_track_the_numeric_level() {
    let r = core_radius_for(0.05);
    let mut a = vec!["threshold"];
    a.extend(spec_args(&r));
    let o = tailbound(&a);
    assert_eq!(code(&o), EXIT_OK, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("k = 1"));

    let mut a = vec!["solve"];
    a.extend(spec_args(&r));
    let s = tailbound(&a);
    assert_eq!(code(&s), EXIT_OK);
    let rows = solve_rows(&stdout(&s));
    assert_eq!(rows.len(), 1);
    let numeric = rows[0].1;
    for m in ["bessel-ratio", "detuning-expansion", "threshold-energy"] {
        let k = field(&out, m, 1);
        assert!((k - numeric).abs() / numeric < 0.1, "{m}: {k} vs {numeric}");
    }
}

#[test]
fn threshold_below_a_zero_reports_no_state() {
    let r = core_radius_for(-0.05);
    let mut a = vec!["threshold"];
    a.extend(spec_args(&r));
    let o = tailbound(&a);
    assert_eq!(code(&o), EXIT_NO_NEAR_THRESHOLD);
    assert!(stdout(&o).contains("bracket"));
    assert!(stderr(&o).contains("no near-threshold state"));
}

#[test]
fn threshold_zero_override() {
    let r = core_radius_for(0.05);
    let mut a = vec!["threshold", "--k", "2"];
    a.extend(spec_args(&r));
    let o = tailbound(&a);
    // x_R is far below the second zero.
    assert_eq!(code(&o), EXIT_NO_NEAR_THRESHOLD);
    assert!(stdout(&o).contains("k = 2\n"));
}

#[test]
fn large_n_row_only_for_large_n() {
    let o = tailbound(&["threshold", "--n", "50", "--beta", "1152", "--R", "0.97"]);
    assert!(stdout(&o).contains("large-n"), "{}", stdout(&o));
    let r = core_radius_for(0.05);
    let mut a = vec!["threshold"];
    a.extend(spec_args(&r));
    assert!(!stdout(&tailbound(&a)).contains("large-n"));
}

#[test]
fn solve_without_states() {
    let o = tailbound(&["solve", "--n", "6", "--beta", "1e-6", "--R", "1"]);
    assert_eq!(code(&o), EXIT_NO_BOUND_STATES);
    assert!(stdout(&o).contains("no bound states"));
}

#[test]
fn solve_orders_states_by_depth() {
    let o = tailbound(&["solve", "--n", "6", "--beta", "8", "--R", "0.5"]);
    assert_eq!(code(&o), EXIT_OK);
    let rows = solve_rows(&stdout(&o));
    assert_eq!(rows.iter().map(|r| r.0).collect::<Vec<_>>(), vec![0, 1]);
    assert!(rows[0].1 > rows[1].1);
}

#[test]
fn solve_refuses_oversized_grids() {
    let o = tailbound(&["solve", "--n", "3", "--beta", "1e6", "--R", "1e-8"]);
    assert_eq!(code(&o), EXIT_SOFTWARE);
    assert!(stderr(&o).contains("radial grid needs"));
}

#[test]
fn unrepresentable_scales_are_usage_errors() {
    let o = tailbound(&["solve", "--n", "2.0001", "--beta", "1", "--R", "1"]);
    assert_eq!(code(&o), EXIT_USAGE);
    assert!(stderr(&o).contains("not representable"));
}

#[test]
fn unit_override_rescales_beta_and_energy() {
    let r = core_radius_for(0.05);
    let mut a = vec!["solve"];
    a.extend(spec_args(&r));
    let natural = stdout(&tailbound(&a));
    // hbar^2/2mu = 0.25 with beta = 4 is the same well as beta = 8 in natural units.
    let o = tailbound(&["solve", "--n", "6", "--beta", "4", "--R", &r, "--hbar2-over-2mu", "0.25"]);
    assert_eq!(code(&o), EXIT_OK);
    let scaled = stdout(&o);
    let e = |t: &str| -> f64 {
        let l = t.lines().find(|l| l.trim_start().starts_with("0 ")).unwrap();
        l.split_whitespace().nth(4).unwrap().parse().unwrap()
    };
    assert_eq!(solve_rows(&natural), solve_rows(&scaled));
    // Energies are printed to 10 significant digits.
    assert!((e(&scaled) / e(&natural) - 0.5).abs() < 1e-9);
}

#[test]
fn scatlen_rejects_higher_partial_waves() {
    let o = tailbound(&["scatlen", "--n", "6", "--beta", "8", "--R", "1", "--l", "1"]);
    assert_eq!(code(&o), EXIT_USAGE);
    let o = tailbound(&["scatlen", "--n", "3", "--beta", "8", "--R", "1"]);
    assert_eq!(code(&o), EXIT_USAGE);
}

#[test]
fn scatlen_weak_tail_gives_core_radius() {
    let o = tailbound(&["scatlen", "--n", "6", "--beta", "1e-6", "--R", "1"]);
    assert_eq!(code(&o), EXIT_OK);
    let a = field(&stdout(&o), "a (numeric)", 1);
    assert!((a - 1.0).abs() < 1e-6, "{a}");
}

#[test]
fn scatlen_mean_vanishes_for_n4() {
    let o = tailbound(&["scatlen", "--n", "4", "--beta", "8", "--R", "0.5"]);
    assert_eq!(code(&o), EXIT_OK);
    assert_eq!(field(&stdout(&o), "a_bar", 1), 0.0);
}

#[test]
fn scatlen_near_threshold_matches_binding() {
    let r = core_radius_for(0.025);
    let mut a = vec!["scatlen"];
    a.extend(spec_args(&r));
    let o = tailbound(&a);
    assert_eq!(code(&o), EXIT_OK);
    let out = stdout(&o);
    let product = field(&out, "kappa numerov", 7);
    assert!((product - 1.0).abs() < 0.15, "{product}");
    let virt = {
        let r = core_radius_for(-0.025);
        let mut a = vec!["scatlen"];
        a.extend(spec_args(&r));
        stdout(&tailbound(&a))
    };
    assert!(virt.contains("(virtual state)"));
}

fn compare_args(csv: &str) -> Vec<String> {
    ["compare", "--n", "6", "--delta-from", "0.2", "--delta-to", "0.025", "--steps", "4", "--csv", csv]
        .map(String::from)
        .to_vec()
}

fn run_strings(a: &[String]) -> Output {
    tailbound(&a.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn compare_writes_the_fixed_header_and_converging_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let o = run_strings(&compare_args(path.to_str().unwrap()));
    assert_eq!(code(&o), EXIT_OK, "{}", stderr(&o));
    assert!(stdout(&o).is_empty());

    let mut rd = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = rd.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, CSV_HEADER.to_vec());
    let col = |name: &str| CSV_HEADER.iter().position(|h| *h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    let rel: Vec<f64> = rows.iter().map(|r| r[col("rel_diff_kappa")].parse().unwrap()).collect();
    assert!(rel.windows(2).all(|w| w[1] < w[0]), "{rel:?}");
    assert!(rel[3] < 0.02);
    for r in &rows {
        assert_eq!(&r[col("small_delta_ok")], "true");
        for name in ["kappa_eq26", "kappa_eq30", "kappa_numeric", "kappa_semiclassical", "E_eq31", "E_numeric"] {
            let v: f64 = r[col(name)].parse().unwrap();
            assert!(v.is_finite());
        }
    }
}

#[test]
fn compare_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert_eq!(code(&run_strings(&compare_args(a.to_str().unwrap()))), EXIT_OK);
    assert_eq!(code(&run_strings(&compare_args(b.to_str().unwrap()))), EXIT_OK);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn compare_to_stdout() {
    let o = run_strings(&compare_args("-"));
    assert_eq!(code(&o), EXIT_OK);
    let out = stdout(&o);
    assert_eq!(out.lines().next().unwrap(), CSV_HEADER.join(","));
    assert_eq!(out.lines().count(), 5);
    assert!(stderr(&o).contains("4 rows"));
}

#[test]
fn compare_unwritable_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.csv");
    let o = run_strings(&compare_args(path.to_str().unwrap()));
    assert_eq!(code(&o), EXIT_CANT_CREATE);
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn compare_rejects_out_of_range_detuning() {
    let mut a = compare_args("-");
    a[4] = "0.5".into();
    assert_eq!(code(&run_strings(&a)), EXIT_USAGE);
}

#[test]
fn compare_leaves_missing_estimates_empty() {
    // l = 1 has no semiclassical estimate.
    let o =
        tailbound(&["compare", "--n", "6", "--l", "1", "--delta-from", "0.1", "--delta-to", "0.05", "--steps", "2"]);
    assert_eq!(code(&o), EXIT_OK, "{}", stderr(&o));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    let i = CSV_HEADER.iter().position(|h| *h == "kappa_semiclassical").unwrap();
    assert_eq!(row[i], "");
    assert_eq!(row[1], "1");
}
