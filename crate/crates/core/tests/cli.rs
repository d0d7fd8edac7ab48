use std::fs;
use std::process::{Command, Output};

fn msgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msgraph")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_hexagon() {
    let o = msgraph(&["build", "--family", "st", "--k", "2", "--l", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("st 2 2 6 6"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn build_then_verify_reproduces_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("st32.txt");
    let json = dir.path().join("report.json");
    let o = msgraph(&["build", "--k", "3", "--l", "2", "--out", graph.to_str().unwrap()]);
    assert!(o.status.success());

    let from_file = msgraph(&[
        "verify",
        "--suite",
        "domination",
        "--input",
        graph.to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
        "--seed",
        "7",
    ]);
    let in_memory = msgraph(&["verify", "--suite", "domination", "--k", "3", "--l", "2"]);
    assert!(from_file.status.success());
    let strip = |s: String| -> Vec<String> {
        s.lines().map(|l| l.split("ms").last().unwrap_or("").to_string()).collect()
    };
    assert_eq!(strip(stdout(&from_file)), strip(stdout(&in_memory)));

    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["seed"], 7);
    assert_eq!(report["suite"], "domination");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn full_run_on_st32_passes() {
    let o = msgraph(&["verify", "--suite", "all", "--k", "3", "--l", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn excluded_instance_reports_a_precondition() {
    let o = msgraph(&["verify", "--suite", "domination", "--k", "2", "--l", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PRECONDITION"));
}

#[test]
fn exit_codes_separate_usage_cap_and_failure() {
    assert_eq!(msgraph(&["verify", "--suite", "nope", "--k", "2", "--l", "2"]).status.code(), Some(2));
    assert_eq!(msgraph(&["build", "--k", "2", "--l", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(msgraph(&["build", "--k", "9", "--l", "3"]).status.code(), Some(3));
    assert_eq!(msgraph(&["build", "--k", "4", "--l", "2", "--cap", "100"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "st 2 2 6 1\n0011 0011 1\n").unwrap();
    assert_eq!(msgraph(&["verify", "--suite", "domination", "--input", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn search_codes_lists_the_perfect_codes() {
    let o = msgraph(&["search-codes", "--k", "2", "--l", "2", "--ell", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0011 1100\n0101 1010\n0110 1001\n");
}

#[test]
fn custom_family_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let pi = dir.path().join("pi.txt");
    fs::write(&pi, "# twist at position 3\n3 1,2\n").unwrap();
    let o = msgraph(&["build", "--family", "custom", "--k", "3", "--l", "2", "--pi", pi.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("custom 3 2 90 "));
}

#[test]
fn exports() {
    let dot = stdout(&msgraph(&["export", "--format", "dot", "--k", "2", "--l", "2"]));
    assert!(dot.contains("\"0011\" -- \"1001\" [color=\"blue\", label=\"2\"];"));

    let coloring = stdout(&msgraph(&["export", "--format", "coloring", "--k", "2", "--l", "2"]));
    assert_eq!(coloring.lines().count(), 12);
    assert!(coloring.starts_with("V 0011 1\n"));

    let pc = stdout(&msgraph(&["export", "--format", "edges", "--family", "pc", "--k", "2", "--l", "2"]));
    assert!(pc.starts_with("pc 2 2 6 6\n"));

    let torus = stdout(&msgraph(&["export", "--format", "dot", "--k", "3", "--l", "2", "--toroidal", "5"]));
    assert!(torus.starts_with("graph \"T_5(1,2,3,4)\""));
    assert!(torus.contains("color=\"black\""));

    let threads = Command::new(env!("CARGO_BIN_EXE_msgraph"))
        .env("MSGRAPH_THREADS", "1")
        .args(["export", "--format", "dot", "--k", "2", "--l", "2"])
        .output()
        .unwrap();
    assert_eq!(stdout(&threads), dot);
}
