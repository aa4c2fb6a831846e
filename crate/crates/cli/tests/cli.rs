use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use tempered::SchwartzFn;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn tempered(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tempered"))
        .args(args)
        .env_remove("TEMPERED_FIXTURE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "status {:?}, stderr: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Data row `row` (after the header) of a CSV output, as floats.
fn csv_row(text: &str, row: usize) -> Vec<f64> {
    text.lines()
        .nth(row + 1)
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect()
}

#[test]
fn plancherel_on_gaussian() {
    let out = stdout(&tempered(&["plancherel", &fixture("gaussian.json")]));
    assert_eq!(out.lines().next().unwrap(), "l2_norm,fourier_l2_norm,difference");
    let row = csv_row(&out, 0);
    assert!(row[2].abs() < 1e-13);
    assert!((row[0] - 2f64.powf(-0.25)).abs() < 1e-15);
}

#[test]
fn delta_agrees_with_evaluation_at_zero() {
    for name in ["gaussian.json", "h3.json", "mixed.json"] {
        let d = csv_row(&stdout(&tempered(&["apply-dist", "delta", &fixture(name)])), 0);
        let e = csv_row(&stdout(&tempered(&["eval", &fixture(name), "0"])), 0);
        assert!((d[0] - e[1]).abs() < 1e-12 && (d[1] - e[2]).abs() < 1e-12, "{name}");
    }
}

#[test]
fn sobolev_zero_is_l2() {
    for name in ["gaussian.json", "mixed.json"] {
        let s = csv_row(&stdout(&tempered(&["sobolev", &fixture(name), "--s", "0"])), 0);
        let p = csv_row(&stdout(&tempered(&["plancherel", &fixture(name)])), 0);
        assert!((s[1] - p[0]).abs() < 1e-10);
    }
}

#[test]
fn outputs_are_deterministic() {
    let runs = [
        vec!["certify", "OP", "CERT", "--trials", "200", "--seed", "17"],
        vec!["seminorms", "F", "--grid", "2", "2"],
        vec!["sobolev", "F", "--s", "-1.5"],
        vec!["multiplier", "japanese_bracket:0.5", "F"],
    ];
    let (op, cert, f) = (fixture("op_fourier.json"), fixture("cert_fourier.json"), fixture("mixed.json"));
    for args in runs {
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "OP" => op.as_str(),
                "CERT" => cert.as_str(),
                "F" => f.as_str(),
                other => other,
            })
            .collect();
        let a = tempered(&args);
        let b = tempered(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

#[test]
fn emitted_objects_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ff.json");
    let p = path.to_str().unwrap();
    stdout(&tempered(&["fourier", &fixture("mixed.json"), "-o", p]));
    let g = SchwartzFn::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let f = SchwartzFn::from_json(&std::fs::read_to_string(fixture("mixed.json")).unwrap()).unwrap();
    assert_eq!(g, f.fourier());

    // Feeding the transform back through the inverse recovers the input.
    let back = stdout(&tempered(&["fourier", "--inverse", p]));
    assert_eq!(SchwartzFn::from_json(&back).unwrap(), f);

    let m = stdout(&tempered(&["multiplier", "laplacian_2pi", &fixture("mixed.json")]));
    let parsed = SchwartzFn::from_json(&m).unwrap();
    assert_eq!(SchwartzFn::from_json(&parsed.to_json()).unwrap(), parsed);

    let report = stdout(&tempered(&[
        "certify",
        &fixture("op_fourier.json"),
        &fixture("cert_fourier.json"),
        "--trials",
        "20",
    ]));
    let value: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(value["total_violations"], 0);
}

#[test]
fn fixture_directory_and_stdin() {
    let out = Command::new(env!("CARGO_BIN_EXE_tempered"))
        .args(["plancherel", "gaussian.json"])
        .env("TEMPERED_FIXTURE_DIR", fixtures())
        .output()
        .unwrap();
    assert!(out.status.success());

    let mut child = Command::new(env!("CARGO_BIN_EXE_tempered"))
        .args(["eval", "-", "0"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"basis":"hermite-2pi","coeffs":[[0.8408964152537145,0]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let row = csv_row(&stdout(&out), 0);
    assert!((row[1] - 1.0).abs() < 1e-15);
}

#[test]
fn distribution_transforms() {
    // (F δ)(f) = ∫ f, and ∫ e^{-πx²} = 1.
    let v = csv_row(
        &stdout(&tempered(&[
            "apply-dist",
            &fixture("dist_delta.json"),
            &fixture("gaussian.json"),
            "--transform",
            "fourier",
        ])),
        0,
    );
    assert!((v[0] - 1.0).abs() < 1e-15 && v[1].abs() < 1e-15);
    // δ'(h_0) = -h_0'(0) = 0.
    let v = csv_row(
        &stdout(&tempered(&["apply-dist", "delta", &fixture("gaussian.json"), "--transform", "derivative"])),
        0,
    );
    assert!(v[0].abs() < 1e-15);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| tempered(args).status.code().unwrap();
    assert_eq!(code(&["bogus"]), 1);
    assert_eq!(code(&["plancherel"]), 1);
    assert_eq!(code(&["plancherel", "no-such-file.json"]), 1);
    assert_eq!(code(&["plancherel", &fixture("cert_fourier.json")]), 1);
    assert_eq!(code(&["apply-dist", "heaviside", &fixture("gaussian.json")]), 1);
    assert_eq!(code(&["multiplier", "heat", &fixture("gaussian.json")]), 1);
    assert_eq!(code(&["selftest", "--only", "99"]), 1);
    assert_eq!(code(&["sobolev", &fixture("gaussian.json"), "--s", "1", "--tol", "0"]), 1);
    assert_eq!(code(&["--help"]), 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"basis":"hermite-2pi","coeffs":[[1.0]]}"#).unwrap();
    assert_eq!(code(&["eval", bad.to_str().unwrap(), "0"]), 1);

    assert_eq!(
        code(&[
            "certify",
            &fixture("op_derivative.json"),
            &fixture("cert_derivative_bad.json"),
            "--trials",
            "50"
        ]),
        2
    );
    assert_eq!(
        code(&["multiplier", "japanese_bracket:-2", &fixture("mixed.json"), "--tol", "1e-9"]),
        2
    );
    assert_eq!(code(&["sobolev", &fixture("mixed.json"), "--s", "2", "--tol", "1e-9"]), 0);
}
