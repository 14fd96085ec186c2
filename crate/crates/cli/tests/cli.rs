//! End-to-end tests of the command-line interface: exit-code contract,
//! report determinism, and the documented command surfaces.

use std::path::PathBuf;
use std::process::{Command, Output};

use ambitrace::builders::{build_group_algebra, GroupTable};
use ambitrace::io::{hopf_to_file, write_hopf_file};
use ambitrace::Field;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ambitrace"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ambitrace-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_builder_reference_passes() {
    let o = run(&["validate", "builder:group:s3:f2"]);
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("[pass]"));
}

#[test]
fn validate_exported_file_passes() {
    let dir = tmp_dir("export");
    let path = dir.join("ks3.json");
    let f = Field::prime(2).unwrap();
    let alg = build_group_algebra(&f, &GroupTable::symmetric3()).unwrap();
    write_hopf_file(&path, alg.presentation()).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert!(o.status.success());
}

#[test]
fn validate_corrupted_mult_exits_one_with_witness() {
    let dir = tmp_dir("corrupt");
    let path = dir.join("bad.json");
    let f = Field::prime(2).unwrap();
    let alg = build_group_algebra(&f, &GroupTable::symmetric3()).unwrap();
    let mut file = hopf_to_file(alg.presentation());
    let (i, j, k, c) = file.mult[7].clone();
    file.mult[7] = (i, j, (k + 1) % file.dim, c);
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]"));
    assert!(stdout(&o).contains("witness"));
}

#[test]
fn validate_missing_file_exits_two() {
    let o = run(&["validate", "/nonexistent/algebra.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unimodular_routes_agree_on_ks3() {
    let o = run(&["unimodular", "builder:group:s3:f2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("unimodular: true"));
    assert!(text.contains("socle_route_unimodular: true"));
}

#[test]
fn unimodular_sweedler_is_false_but_exit_zero() {
    // Verdicts are data, not exit codes.
    let o = run(&["unimodular", "builder:sweedler:f3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("unimodular: false"));
}

#[test]
fn decompose_regular_ks3_reports_three_summands() {
    let o = run(&["decompose", "builder:group:s3:f2", "--module", "regular"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("summands: 3"));
    assert_eq!(text.matches("dim 2 (indecomposable-certified)").count(), 3);
}

#[test]
fn decompose_rational_field_exits_two() {
    let o = run(&["decompose", "builder:group:z3:q", "--module", "regular"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ambi_steinberg_usl2_both_methods() {
    let o = run(&[
        "ambi",
        "builder:usl2:3",
        "--module",
        "St",
        "--method",
        "both",
        "--format",
        "machine",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fields"]["direct"], "true");
    assert_eq!(v["fields"]["structural"], "true");
    assert_eq!(v["fields"]["j"], v["fields"]["jprime"]);
}

#[test]
fn ambi_natural_module_ks3() {
    let o = run(&["ambi", "builder:group:s3:f2", "--module", "natural"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("direct: true"));
    assert!(text.contains("structural: true"));
}

#[test]
fn ambi_trivial_usl2_reports_agreement() {
    let o = run(&["ambi", "builder:usl2:3", "--module", "trivial"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("[pass] direct and structural verdicts agree"));
}

#[test]
fn ambi_non_simple_module_exits_one() {
    let o = run(&["ambi", "builder:group:s3:f2", "--module", "regular"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not absolutely simple"));
}

#[test]
fn mdim_normalization_is_one() {
    let o = run(&[
        "mdim",
        "builder:usl2:3",
        "--ambi",
        "St",
        "--target",
        "St",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("mdim: 1"));
}

#[test]
fn mdim_machine_reports_are_byte_identical() {
    let args = [
        "mdim",
        "builder:group:s3:f2",
        "--ambi",
        "natural",
        "--target",
        "regular",
        "--format",
        "machine",
        "--seed",
        "0",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_sweedler_reports_non_unimodular() {
    let dir = tmp_dir("scan");
    let o = run(&[
        "scan",
        "--builder",
        "sweedler",
        "--params",
        "f3",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    let report = std::fs::read_to_string(dir.join("sweedler-f3.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["fields"]["unimodular"], "false");
    assert_eq!(v["fields"]["socle_route_unimodular"], "false");
}

#[test]
fn scan_usl2_p3_battery() {
    let o = run(&["scan", "--builder", "usl2", "--params", "3"]);
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("unimodular: true"));
    assert!(text.contains("ambi.St.direct: true"));
    assert!(text.contains("ambi.St.structural: true"));
    assert!(text.contains("mdim.reference_module"));
}

#[test]
fn unknown_module_reference_exits_two() {
    let o = run(&["ambi", "builder:usl2:3", "--module", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}
