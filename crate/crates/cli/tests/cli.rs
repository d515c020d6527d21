use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qmono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmono"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const W_SCENARIO: &str = r#"{
  "name": "w",
  "mode": "monogamy",
  "g": 2,
  "state": {
    "amplitudes": [[0,0],[1,0],[1,0],[0,0],[1,0],[0,0],[0,0],[0,0]],
    "normalize": true
  },
  "a": 1,
  "s": "critical",
  "exponent_range": [0.5, 2, 0.5],
  "output": "w"
}"#;

#[test]
fn measures_prints_example1() {
    let o = qmono(&["measures", "example1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("0.76376261582597"));
    assert!(text.contains("0.40824829046386"));
}

#[test]
fn bounds_lists_every_series() {
    let o = qmono(&["bounds", "example2", "--exponent", "1.2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for label in ["W1 ours", "W2 ZLJM", "W3 JFQ", "W4 ZJZ", "W2t ZLJM-t"] {
        assert!(text.contains(label), "{label} missing");
    }
    assert!(text.contains("1.2034808553"));
}

#[test]
fn bounds_s_override() {
    let o = qmono(&["bounds", "example1", "--exponent", "1.5", "--s", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let line = text
        .lines()
        .find(|l| l.trim_start().starts_with("Z1"))
        .unwrap();
    let z1: f64 = line.split_whitespace().last().unwrap().parse().unwrap();
    assert!((z1 - 0.43557334834177484).abs() < 1e-12);
}

#[test]
fn reproduce_writes_both_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmono(&[
        "--out",
        dir.path().to_str().unwrap(),
        "reproduce",
        "--figure",
        "1",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = fs::read_to_string(dir.path().join("figure1.csv")).unwrap();
    assert_eq!(csv.lines().count(), 302);
    assert!(csv.starts_with("exponent,joint_power,Z1,Z2_ZLJM,Z3_JFQ,Z4_ZJZ,flags\n"));
    let svg = fs::read_to_string(dir.path().join("figure1.svg")).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn csv_is_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = qmono(&[
            "--out",
            d.path().to_str().unwrap(),
            "--format",
            "csv",
            "sweep",
            "example2",
        ]);
        assert!(o.status.success());
        assert!(!d.path().join("figure2.svg").exists());
    }
    let x = fs::read(a.path().join("figure2.csv")).unwrap();
    let y = fs::read(b.path().join("figure2.csv")).unwrap();
    assert_eq!(x, y);
}

#[test]
fn sound_rows_satisfy_inequality() {
    let dir = tempfile::tempdir().unwrap();
    let o = qmono(&[
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "csv",
        "reproduce",
        "--figure",
        "2",
    ]);
    assert!(o.status.success());
    let csv = fs::read_to_string(dir.path().join("figure2.csv")).unwrap();
    for line in csv.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let joint: f64 = cells[1].parse().unwrap();
        let ours: f64 = cells[2].parse().unwrap();
        if !cells.last().unwrap().contains("unsound") {
            assert!(joint <= ours + 1e-9, "{line}");
        }
    }
}

#[test]
fn state_scenario_with_empty_comparisons() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "w.json",
        &W_SCENARIO.replace("\"output\"", "\"comparisons\": [],\n  \"output\""),
    );
    let o = qmono(&[
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "csv",
        "sweep",
        &path,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = fs::read_to_string(dir.path().join("w.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "exponent,joint_power,Z1,flags");
    assert_eq!(lines.count(), 4);
}

#[test]
fn malformed_json_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", "{ \"mode\": ");
    let o = qmono(&["measures", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn both_sources_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = W_SCENARIO.replace(
        "\"a\": 1,",
        "\"measure_vector\": {\"joint\": 0.9, \"parts\": [0.5, 0.4]},\n  \"a\": 1,",
    );
    let path = write(dir.path(), "both.json", &text);
    let o = qmono(&["measures", &path]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(
        qmono(&["reproduce", "--figure", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(qmono(&["--help"]).status.code(), Some(0));
}

#[test]
fn corrupted_kernel_exits_2() {
    let o = qmono(&["verify", "--corrupt-kernel", "--samples", "2000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("counterexample"));
}

#[test]
fn verify_passes() {
    let o = qmono(&["--seed", "7", "verify", "--samples", "5000"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn missing_scenario_file_exits_3() {
    assert_eq!(
        qmono(&["measures", "no_such_scenario_here.json"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let out = blocker.join("sub");
    let o = qmono(&["--out", out.to_str().unwrap(), "reproduce", "--figure", "1"]);
    assert_eq!(o.status.code(), Some(3));
}
