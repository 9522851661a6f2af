use std::process::{Command, Output};

fn annsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annsub"))
        .args(args)
        .env_remove("ANNSUB_EXACT_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn z30_dot_has_six_nodes_and_edges() {
    let o = annsub(&["graph", "--ring", "30", "--module", "30", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.matches("[label=").count(), 6);
    assert_eq!(dot.matches(" -- ").count(), 6);
    assert_eq!(dot, golden("ag_z30.dot"));
}

#[test]
fn z12_params_json() {
    let o = annsub(&["params", "--ring", "12", "--module", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gamma"]["value"], 2);
    assert_eq!(v["gamma"]["status"], "exact");
    assert_eq!(stdout(&o), golden("params_z12.json"));
}

#[test]
fn star_graph_export() {
    let o = annsub(&["graph", "--ring", "2,4", "--star", "--format", "json"]);
    assert_eq!(stdout(&o), golden("ag_star_z2xz4.json"));
    let csv = stdout(&annsub(&["graph", "--ring", "2,4", "--star", "--format", "csv"]));
    assert_eq!(csv, "0,1\n0,3\n1,2\n");
}

#[test]
fn describe_reports_structure() {
    let o = annsub(&["describe", "--ring", "12"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["jacobson"], "(6)");
    assert_eq!(v["is_faithful"], true);
    assert_eq!(v["local_summands"], 2);
    let text = stdout(&annsub(&["describe", "--ring", "4", "--module", "2", "--format", "text"]));
    assert!(text.contains("is_simple            true"));
}

#[test]
fn malformed_input_exits_2_with_position() {
    let o = annsub(&["graph", "--ring", "12,x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 3"), "{err}");
    let o = annsub(&["graph", "--ring", "12", "--module", "(3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = annsub(&["graph", "--ring", "12", "--format", "svg"]);
    assert_eq!(o.status.code(), Some(2));
    let o = annsub(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn caps_exit_2() {
    let o = annsub(&["describe", "--ring", "16", "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("exceeds cap"));
}

#[test]
fn exact_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_annsub"))
        .args(["params", "--ring", "30"])
        .env("ANNSUB_EXACT_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gamma"]["status"], "bound_only");
    assert_eq!(v["chi"]["status"], "bound_only");
}

#[test]
fn suite_markdown_and_output_file() {
    let o = annsub(&["suite", "run", "--budget", "36", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    assert!(md.contains("| claim | local_chain | direct_sum_local | reduced_cyclic | product_mixed |"));
    assert!(md.contains("| Thm 2.6 |"));

    let dir = std::env::temp_dir().join(format!("annsub-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = annsub(&[
        "suite",
        "run",
        "--family",
        "local_chain",
        "--claims",
        "Thm 2.2,C-2.3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["claims"], serde_json::json!(["Thm 2.2", "Cor 2.3"]));
    assert_eq!(v["families"], serde_json::json!(["local_chain"]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn suite_rejects_unknown_claims_and_families() {
    assert_eq!(annsub(&["suite", "run", "--claims", "Thm 9.9"]).status.code(), Some(2));
    assert_eq!(annsub(&["suite", "run", "--family", "tori"]).status.code(), Some(2));
    assert_eq!(annsub(&["suite", "run", "--budget", "3"]).status.code(), Some(2));
}

#[test]
fn family_list() {
    let out = stdout(&annsub(&["family", "list", "--budget", "9"]));
    assert!(out.starts_with("local_chain"));
    assert!(out.contains("R=8 M=8; R=9 M=9"));
    assert_eq!(out.lines().count(), 8);
}
