//! End-to-end checks of the binary: JSON output shapes, exit codes, the
//! size-cap environment variable and deterministic ordering.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_schurkit"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
    )
}

fn json_lines(stdout: &str) -> Vec<serde_json::Value> {
    stdout
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).expect("line is JSON"))
        .collect()
}

#[test]
fn decompose_dminus16() {
    let (code, stdout, _) = run(&["decompose", "-g", "Dminus[16]"]);
    assert_eq!(code, 0);
    let lines = json_lines(&stdout);
    assert!(lines.iter().all(|l| l["schema"] == 1));
    let components: Vec<&serde_json::Value> = lines
        .iter()
        .filter(|l| l["kind_record"] == "component")
        .collect();
    assert_eq!(components.len(), 6);
    let displays: Vec<String> = components
        .iter()
        .map(|c| c["display"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(displays.iter().filter(|d| *d == "Q").count(), 4);
    assert!(displays.contains(&"M2(Q)".to_string()));
    assert!(displays.contains(&"M2(Q(sqrt,-2))".to_string()));
    let summary = lines.last().unwrap();
    assert_eq!(summary["dimension_over_Q"], 16);
}

#[test]
fn decompose_is_deterministic() {
    let (_, first, _) = run(&["decompose", "-g", "T2[1]"]);
    let (_, second, _) = run(&["decompose", "-g", "T2[1]"]);
    assert_eq!(first, second);
}

#[test]
fn kleinian_verdicts_and_exit_codes() {
    let (code, stdout, _) = run(&["kleinian", "-g", "W", "-k", "Q(zeta,3)"]);
    assert_eq!(code, 0);
    assert_eq!(json_lines(&stdout)[0]["kleinian"], "yes");
    let (code, stdout, _) = run(&["kleinian", "-g", "W", "-k", "Q(sqrt,2)"]);
    assert_eq!(code, 0);
    let rec = &json_lines(&stdout)[0];
    assert_eq!(rec["kleinian"], "no");
    assert!(!rec["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn unit_structure_exceptional_case() {
    let (code, stdout, _) = run(&["unit-structure", "-g", "Q[8]", "-k", "Q(sqrt,-7)"]);
    assert_eq!(code, 0);
    let rec = &json_lines(&stdout)[0];
    assert_eq!(rec["exceptional_case"], 2);
    assert_eq!(rec["kleinian"], "yes");
    assert_eq!(rec["unit_class"], "beyond");
}

#[test]
fn sl2_override_flag() {
    let (_, stdout, _) = run(&[
        "unit-structure",
        "-g",
        "W1[1]",
        "-k",
        "Q(sqrt,-5)",
        "--sl2-verified",
        "-1,-2,-3,-5,-7,-11",
    ]);
    let rec = &json_lines(&stdout)[0];
    assert_eq!(rec["unit_class"], "virtually_product_of_free_by_free");
    assert_eq!(rec["conjecture_dependent"], false);
}

#[test]
fn invalid_inputs_exit_one() {
    let (code, _, stderr) = run(&["decompose", "-g", "Nope[3]"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("group_parse"));
    let (code, _, stderr) = run(&["kleinian", "-g", "W", "-k", "Q(cbrt,2)"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("field_parse"));
}

#[test]
fn unsupported_exits_two() {
    let (code, _, stderr) = run(&["cset", "-g", "W", "-k", "poly(-2,0,0,1)"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cset"));
}

#[test]
fn size_cap_env_is_honored() {
    let (code, _, stderr) = run_env(&["decompose", "-g", "U1"], &[("SCHURKIT_SIZE_CAP", "100")]);
    assert_eq!(code, 1);
    assert!(stderr.contains("cap"));
}

#[test]
fn verify_scope_runs_clean() {
    let (code, stdout, _) = run(&["verify", "cyclofield"]);
    assert_eq!(code, 0);
    let lines = json_lines(&stdout);
    let summary = lines.last().unwrap();
    assert_eq!(summary["failed"], 0);
}

#[test]
fn catalog_lists_instances() {
    let (code, stdout, _) = run(&["catalog"]);
    assert_eq!(code, 0);
    let lines = json_lines(&stdout);
    assert!(lines.iter().any(|l| l["spec"] == "W" && l["order"] == 32));
}

#[test]
fn pretty_mode_is_not_json() {
    let (code, stdout, _) = run(&["kleinian", "-g", "Q[8]", "--pretty"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<serde_json::Value>(stdout.lines().next().unwrap()).is_err());
    assert!(stdout.contains("kleinian"));
}
