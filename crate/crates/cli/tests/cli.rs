use std::process::{Command, Output};

use stickygap::models::{ball_bound, BallSpec};
use stickygap::sigma_omega;
use stickygap_cli::{OutputRecord, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stickygap"))
        .args(args)
        .env_remove("STICKYGAP_M_MAX")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> OutputRecord {
    let mut args = args.to_vec();
    args.push("--json");
    OutputRecord::from_json(&stdout(&args)).unwrap()
}

fn num(rec: &OutputRecord, key: &str) -> f64 {
    match &rec.results[key] {
        Value::Num(x) => *x,
        other => panic!("{key} is {other:?}"),
    }
}

fn exit_code(args: &[&str]) -> (i32, String) {
    let out = run(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn ball_example() {
    let rec = json(&["bound", "ball", "--d", "2", "--beta", "1", "--gamma", "1"]);
    assert!((num(&rec, "alpha") - 1.0 / 3.0).abs() < 1e-15);
    let expected = ball_bound(&BallSpec::new(2, 1.0, 1.0).unwrap(), None).unwrap();
    assert_eq!(num(&rec, "upper_bound"), expected);
    assert_eq!(rec.query_echo["d"], Value::Int(2));
    assert_eq!(rec.query_echo["gamma"], Value::Num(1.0));
}

#[test]
#[allow(clippy::approx_constant)]
fn needle_echoes_gamma() {
    let rec = json(&[
        "bound",
        "needle",
        "--L",
        "6.283185307",
        "--beta",
        "1",
        "--alpha",
        "0.5",
    ]);
    assert!((num(&rec, "gamma_l") - 0.0925).abs() < 5e-4);
    assert_eq!(rec.query_echo["L"], Value::Num(6.283185307));
    assert_eq!(rec.results["k_sigma_omega"], Value::Num(f64::INFINITY));
    assert!(num(&rec, "upper_bound") > 0.0);
}

#[test]
fn query_echo_is_exact() {
    let rec = json(&[
        "bound",
        "generic",
        "--c-omega",
        "0.1",
        "--c-sigma",
        "1e-3",
        "--k",
        "inf",
        "--k1",
        "3",
        "--k2",
        "0.30000000000000004",
        "--alpha",
        "0.25",
    ]);
    assert_eq!(rec.query_echo["c_omega"], Value::Num(0.1));
    assert_eq!(rec.query_echo["c_sigma"], Value::Num(1e-3));
    assert_eq!(rec.query_echo["k"], Value::Num(f64::INFINITY));
    assert_eq!(rec.query_echo["k2"], Value::Num(0.30000000000000004));
    let csv = stdout(&[
        "bound",
        "generic",
        "--c-omega",
        "0.1",
        "--c-sigma",
        "1e-3",
        "--k",
        "inf",
        "--k1",
        "3",
        "--k2",
        "0.30000000000000004",
        "--alpha",
        "0.25",
    ]);
    assert!(csv.contains("query,k2,0.30000000000000004,\n"));
    assert!(csv.contains("query,k,inf,\n"));
}

#[test]
fn every_result_has_provenance() {
    let cases: &[&[&str]] = &[
        &[
            "bound",
            "ball",
            "--d",
            "3",
            "--beta",
            "2",
            "--alpha",
            "0.4",
            "--c-omega",
            "0.2",
        ],
        &[
            "bound",
            "manifold",
            "--d",
            "3",
            "--k-r",
            "1",
            "--k-2",
            "2",
            "--c-omega",
            "0.5",
            "--c-sigma",
            "1",
            "--vol-ratio",
            "0.5",
            "--alpha",
            "0.3",
        ],
        &["bound", "partial-disk", "--delta", "0.9", "--curve", "5"],
        &["bound", "needle", "--L", "1", "--beta", "2", "--curve", "4"],
        &[
            "bound",
            "generic",
            "--c-omega",
            "1",
            "--c-sigma",
            "2",
            "--k",
            "0.5",
            "--k1",
            "0.1",
            "--k2",
            "0",
            "--alpha",
            "0.5",
        ],
        &["figure", "fig2a", "--n", "7"],
        &["solve", "neumann-gap"],
        &["solve", "disk-gap", "--alpha", "0.3"],
        &["solve", "needle-gamma", "--L", "3"],
        &["solve", "partial-threshold"],
    ];
    for args in cases {
        let rec = json(args);
        assert!(rec.missing_provenance().is_empty(), "{args:?}");
        assert!(!rec.results.is_empty() || rec.curve.is_some(), "{args:?}");
        for (k, anchor) in &rec.provenance {
            assert!(!anchor.is_empty(), "{args:?}: {k}");
        }
    }
}

#[test]
fn encodings_round_trip() {
    let args = [
        "bound", "needle", "--L", "2", "--beta", "0.7", "--curve", "9",
    ];
    let json_text = stdout(&[&args[..], &["--json"]].concat());
    let rec = OutputRecord::from_json(&json_text).unwrap();
    assert_eq!(rec.to_json(), json_text);

    let csv_text = stdout(&args);
    let back = OutputRecord::from_csv(&csv_text).unwrap();
    assert_eq!(back.to_csv(), csv_text);
    assert_eq!(back.query_echo, rec.query_echo);
    assert_eq!(back.provenance, rec.provenance);
    // the JSON record renders to the same CSV the binary printed
    assert_eq!(rec.to_csv(), csv_text);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["figure", "fig1", "--n", "20"][..],
        &[
            "bound",
            "manifold",
            "--d",
            "2",
            "--k-r",
            "1",
            "--k-2",
            "1",
            "--c-omega",
            "1",
            "--c-sigma",
            "1",
            "--vol-ratio",
            "1",
            "--curve",
            "30",
        ],
        &["solve", "disk-gap", "--alpha", "0.7", "--json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn figure_one_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let path_str = path.to_str().unwrap();
    assert_eq!(
        stdout(&["figure", "fig1", "--n", "99", "--out", path_str]),
        ""
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,exact,upper_bound"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 99);
    for row in &rows {
        assert!(row[1] <= row[2] + 1e-9, "{row:?}");
    }
    assert_eq!(rows[0][0], 0.00505050505051);
}

#[test]
fn figure_two_endpoints() {
    let b = json(&["figure", "fig2b", "--n", "50"]).curve.unwrap();
    assert!((b.upper_bounds[0] - 3.24).abs() < 0.1);
    assert!((b.upper_bounds[49] - 1.0 / sigma_omega()).abs() < 0.05);
    assert!(b.upper_bounds.windows(2).all(|w| w[1] < w[0]));

    let a = json(&["figure", "fig2a", "--n", "50"]).curve.unwrap();
    assert!(a.upper_bounds[0] > 1.0 + 1.0);
    assert_eq!(
        stdout(&["figure", "fig2a", "--n", "2"]).lines().next(),
        Some("alpha,upper_bound")
    );
}

#[test]
fn solve_examples() {
    let rec = json(&["solve", "neumann-gap"]);
    let sigma = num(&rec, "sigma_omega");
    assert!((sigma - 3.39).abs() < 0.005);
    assert_eq!(rec.results["mode"], Value::Int(1));
    assert!(num(&rec, "residual") < 1e-10);
    let (lo, hi) = (num(&rec, "bracket_lo"), num(&rec, "bracket_hi"));
    assert!(lo <= sigma.sqrt() && sigma.sqrt() <= hi);

    let g = num(
        &json(&["solve", "needle-gamma", "--L", "6.283185307"]),
        "gamma_l",
    );
    assert!((g - 0.0925).abs() < 5e-4);
    let t = num(&json(&["solve", "partial-threshold"]), "delta");
    assert!((t - 0.862).abs() < 0.001);
    // α = 0 gives C_0 = C_Σ = 1, the first tangential eigenvalue
    let gap = json(&["solve", "disk-gap", "--alpha", "0"]);
    assert!((num(&gap, "lambda_star") - 1.0).abs() < 1e-12);
}

#[test]
fn mode_cap_from_environment() {
    let strict = Command::new(env!("CARGO_BIN_EXE_stickygap"))
        .args(["solve", "neumann-gap", "--strict-scan", "--json"])
        .env("STICKYGAP_M_MAX", "5")
        .output()
        .unwrap();
    assert!(strict.status.success());
    let rec = OutputRecord::from_json(&String::from_utf8(strict.stdout).unwrap()).unwrap();
    assert!((num(&rec, "sigma_omega") - sigma_omega()).abs() < 1e-12);

    for bad in ["1", "x", "500"] {
        let out = Command::new(env!("CARGO_BIN_EXE_stickygap"))
            .args(["solve", "neumann-gap"])
            .env("STICKYGAP_M_MAX", bad)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(2), "STICKYGAP_M_MAX={bad}");
    }
}

#[test]
fn validation_errors_exit_2_with_one_line() {
    let cases: &[&[&str]] = &[
        &["bound", "ball", "--d", "1", "--beta", "1", "--gamma", "1"],
        &["bound", "ball", "--d", "3", "--beta", "1", "--gamma", "1"],
        &["bound", "ball", "--d", "2", "--beta", "1"],
        &["bound", "partial-disk", "--delta", "1.2", "--alpha", "0.5"],
        &[
            "bound",
            "partial-disk",
            "--delta",
            "0.5",
            "--alpha",
            "0.5",
            "--curve",
            "3",
        ],
        &[
            "bound",
            "generic",
            "--c-omega",
            "-1",
            "--c-sigma",
            "1",
            "--k",
            "1",
            "--k1",
            "1",
            "--k2",
            "1",
            "--alpha",
            "0.5",
        ],
        &[
            "bound", "needle", "--L", "0", "--beta", "1", "--alpha", "0.5",
        ],
        &["bound", "needle", "--L", "1", "--beta", "1", "--alpha", "1"],
        &[
            "bound",
            "manifold",
            "--d",
            "2",
            "--k-r",
            "1",
            "--k-2",
            "1",
            "--c-omega",
            "1",
            "--c-sigma",
            "1",
            "--vol-ratio",
            "1",
            "--curve",
            "1",
        ],
        &["figure", "fig1", "--n", "0"],
        &["figure", "fig3"],
        &["solve", "disk-gap"],
        &["solve", "disk-gap", "--alpha", "1"],
        &["solve", "disk-gap", "--alpha", "NaN"],
        &["solve", "needle-gamma", "--L", "abc"],
    ];
    for args in cases {
        let (code, err) = exit_code(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("stickygap: "), "{err}");
    }
}

#[test]
fn unwritable_output_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.csv");
    let (code, err) = exit_code(&[
        "figure",
        "fig2a",
        "--n",
        "3",
        "--out",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(code, 4, "{err}");
    let (code, _) = exit_code(&[
        "solve",
        "partial-threshold",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 4);
}

#[test]
fn help_succeeds() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("bound"));
}
