mod common;

use std::process::{Command, Output};

use common::fixture_path;

fn relca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relca")).args(args).env_remove("RELCA_BUDGET").output().unwrap()
}

fn path(name: &str) -> String {
    fixture_path(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn lfp_output_reparses_as_a_solution() {
    let o = relca(&["lfp", &path("mutual.rcf")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# lattice 1 (5 concepts)\n#   ABC: E p.DEF\n#   AB: m2, E p.DEF, E p.DE\n"));
    let (_, rcf) = common::fixture("mutual.rcf");
    let parsed = relca::parse_solution(&text, &rcf).unwrap();
    assert_eq!(parsed, relca_core::engine::rca_lfp(&rcf).unwrap());
}

#[test]
fn json_fixed_point() {
    let o = relca(&["gfp", &path("cycle.rcf"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["contexts"][0];
    assert_eq!(c["id"], "0");
    assert_eq!(c["attributes"].as_array().unwrap().len(), 7);
    assert_eq!(c["concepts"].as_array().unwrap().len(), 8);
    assert_eq!(c["concepts"][1]["name"], "ABC");
    assert_eq!(c["concepts"][1]["intent"], serde_json::json!(["E r.ABCD", "E r.ABD"]));
}

#[test]
fn enumerate_report_keys_are_stable() {
    let o = relca(&["enumerate", &path("crossed.rcf"), "--no-prune"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let keys: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    assert_eq!(keys, ["interval_size", "acceptable_count", "tested", "pruned", "is_lattice", "is_complete_lattice", "lfp", "gfp", "acceptable"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["pruned"], 0);
    assert_eq!(v["tested"], 16);
    let pruned: serde_json::Value = serde_json::from_str(&stdout(&relca(&["enumerate", &path("crossed.rcf")]))).unwrap();
    assert_eq!(pruned["pruned"], 4);
    assert_eq!(pruned["acceptable"], v["acceptable"]);
}

#[test]
fn budget_from_flag_and_environment() {
    let o = relca(&["enumerate", &path("crossed.rcf"), "--budget", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"));
    let o = Command::new(env!("CARGO_BIN_EXE_relca")).args(["enumerate", &path("crossed.rcf")]).env("RELCA_BUDGET", "8").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_relca")).args(["oracle", &path("cycle.rcf")]).env("RELCA_BUDGET", "100").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_reports_witnesses() {
    let o = relca(&["check", &path("crossed.rcf"), &path("crossed_sharp.sol")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "not saturated: context 3 lacks E p.D\n\
         not saturated: context 4 lacks E q.A\n\
         not self-supported: context 3 has E p.C, but C is not a concept of context 4\n\
         not self-supported: context 4 has E q.B, but B is not a concept of context 3\n\
         not acceptable\n"
    );
    let o = relca(&["check", &path("crossed.rcf"), &path("crossed_one.sol")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "acceptable\n");
}

#[test]
fn dot_for_one_context() {
    let o = relca(&["export-dot", &path("crossed.rcf"), "--semantics", "gfp", "--context", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph \"4\" {"));
    assert_eq!(text.matches("digraph").count(), 1);
    let all = stdout(&relca(&["export-dot", &path("crossed.rcf")]));
    assert_eq!(all.matches("digraph").count(), 2);
    assert_eq!(relca(&["export-dot", &path("crossed.rcf"), "--context", "9"]).status.code(), Some(1));
}

#[test]
fn tbox_of_a_solution_file_warns_when_not_acceptable() {
    let o = relca(&["export-tbox", &path("crossed.rcf"), "--solution", &path("crossed_sharp.sol")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("not acceptable"));
    assert!(stdout(&o).starts_with("# TBox\n"));
}

#[test]
fn oracle_counts() {
    let o = relca(&["oracle", &path("crossed.rcf")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family_count"], 64);
    assert_eq!(v["acceptable_count"], 4);
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("relca-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("tbox.txt");
    let o = relca(&["export-tbox", &path("mutual.rcf"), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&out).unwrap().contains("AB ⊓ C ⊑ ⊥"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(relca(&[]).status.code(), Some(2));
    assert_eq!(relca(&["lfp"]).status.code(), Some(2));
    assert_eq!(relca(&["lfp", "x.rcf", "--bogus"]).status.code(), Some(2));
    assert_eq!(relca(&["export-dot", "x.rcf", "--semantics", "middle"]).status.code(), Some(2));
    assert_eq!(relca(&["--help"]).status.code(), Some(0));
    let o = relca(&["lfp", "does-not-exist.rcf"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: cannot read"));
    let bad = std::env::temp_dir().join(format!("relca-bad-{}.rcf", std::process::id()));
    std::fs::write(&bad, "context k\nobjects: a\nattributes: m\na: x x\nend\n").unwrap();
    let o = relca(&["gfp", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 4, column 1"), "{}", stderr(&o));
    std::fs::remove_file(&bad).unwrap();
}
