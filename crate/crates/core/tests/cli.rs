//! End-to-end runs of the `renner` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn renner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_renner"))
        .args(args)
        .env_remove("RENNER_BUDGET")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn reports(v: &Value) -> &Vec<Value> {
    v["reports"].as_array().unwrap()
}

#[test]
fn cone_mbar_a1_empty_levi() {
    let out = renner(&["cone-mbar", "--type", "A1", "--levi", ""]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "renner/1");
    assert_eq!(v["results"][0]["cone"]["generators"], serde_json::json!([[1]]));
}

#[test]
fn duality_over_every_levi_of_a2() {
    let out = renner(&["verify", "--type", "A2", "--levi", "all", "--lemma", "duality"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rs = reports(&v);
    assert_eq!(rs.len(), 4);
    assert!(rs.iter().all(|r| r["pass"] == true && r["lemma"] == "duality"));
}

#[test]
fn all_lemmas_on_one_levi() {
    let out = renner(&["verify", "--type", "A2", "--levi", "1", "--lemma", "all", "--bound", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rs = reports(&v);
    assert_eq!(rs.len(), 7);
    let lemmas: Vec<&str> = rs.iter().map(|r| r["lemma"].as_str().unwrap()).collect();
    assert_eq!(
        lemmas,
        ["wthull", "posU", "duality", "saturation", "levi-restriction", "uinv", "vinberg-image"]
    );
    let sat = rs.iter().find(|r| r["lemma"] == "saturation").unwrap();
    assert_eq!(sat["level"], "hilbert-exact");
    assert!(rs.iter().all(|r| r["wall_ms"].is_null()));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "--type", "A2", "--levi", "all", "--lemma", "all"];
    let a = renner(&args);
    let b = renner(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn injected_corruption_fails_with_counterexamples() {
    let out = renner(&["verify", "--type", "A2", "--levi", "1", "--lemma", "posU", "--inject", "drop-pos-up"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let r = &reports(&v)[0];
    assert_eq!(r["pass"], false);
    let ce = r["counterexamples"].as_array().unwrap();
    assert!(!ce.is_empty());
    assert!(ce.len() <= 32);
    assert!(!ce[0]["vector"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(renner(&["verify", "--type", "A2"]).status.code(), Some(2));
    assert_eq!(renner(&["datum", "--type", "Q7"]).status.code(), Some(2));
    assert_eq!(renner(&["cone-mbar", "--type", "A2", "--levi", "5"]).status.code(), Some(2));
    assert_eq!(renner(&["project", "--type", "A2", "--pair", "1,0"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_renner"))
        .args(["datum", "--type", "A2"])
        .env("RENNER_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_renner"))
        .args(["verify", "--type", "B3", "--levi", "1,2,3", "--lemma", "duality"])
        .env("RENNER_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn table_format_has_one_line_per_report() {
    let out = renner(&["verify", "--type", "B2", "--lemma", "saturation", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 4);
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("renner-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hilbert.json");
    let args = ["hilbert", "--type", "G2", "--levi", "2"];
    let stdout = renner(&args).stdout;
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    assert_eq!(renner(&with_file).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn project_reports_epsilon_and_projection() {
    let out = renner(&["project", "--type", "A2", "--levi", "all", "--pair", "0,1;2,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    // l2 - l1 is the first simple root: supported only on node 1.
    for r in results {
        let on_one = r["instance"].as_str().unwrap().contains('1');
        assert_eq!(r["epsilon"], if on_one { 1 } else { 0 });
        let expected = if on_one { serde_json::json!([0, 1]) } else { serde_json::json!([0, 0]) };
        assert_eq!(r["projection"], expected);
    }
}
