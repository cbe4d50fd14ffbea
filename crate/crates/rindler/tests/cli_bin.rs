//! End-to-end checks of the installed binary: exit codes, stdout schema, and
//! byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rindler"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn helicity_sweep_prints_csv_to_stdout() {
    let out = run(&["--family", "helicity", "--q", "0.5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), rindler::cli::CSV_HEADER);
    let row = lines.next().unwrap();
    assert!(row.starts_with("helicity,5.0000000000000000e-1,"));
    assert!(lines.next().is_none());
}

#[test]
fn config_errors_exit_with_code_two() {
    for args in [
        &["--family", "number", "--q", "1.5"][..],
        &["--family", "number"][..],
        &["--family", "number", "--q", "0.5", "--accel", "1", "--energy", "1"][..],
        &["--unknown-flag"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn json_output_lands_in_file() {
    let dir = std::env::temp_dir().join(format!("rindler-bin-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.json");
    let out = run(&[
        "--family",
        "number",
        "--energy",
        "1",
        "--accel",
        "0.5,1,2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["family"], "number");
    assert_eq!(rows[0]["E"], 1.0);
    assert_eq!(rows[1]["a"], 1.0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["--family", "helicity", "--q", "0.1,0.5,0.9"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}
