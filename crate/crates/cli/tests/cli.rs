use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chordal-contract"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C4: &str = "0 1\n1 2\n2 3\n3 0\n";
const TWO_K4S: &str = "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn check_chordal_reports_a_chordless_cycle() {
    let o = run(&["check-chordal", "-"], C4);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("non-chordal\n"));
    let cycle_line = text.lines().nth(1).unwrap();
    assert_eq!(cycle_line.split_whitespace().count(), 2 + 4);

    let o = run(&["check-chordal", "--output", "json", "-"], TWO_K4S);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chordal"], true);
    assert_eq!(v["peo"].as_array().unwrap().len(), 5);
}

#[test]
fn dimacs_input() {
    let o = run(
        &["check-chordal", "--format", "dimacs", "-"],
        "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("non-chordal"));
}

#[test]
fn contractible_report() {
    let o = run(&["contractible", "-"], TWO_K4S);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kappa"], 3);
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), 0);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 9);
    for e in edges {
        assert_eq!(e["theorem"], e["oracle"]);
    }

    let o = run(&["contractible", "--method", "theorem", "-"], TWO_K4S);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["edges"][0]["oracle"].is_null());
}

#[test]
fn clique_tree_outputs() {
    let o = run(&["clique-tree", "-"], TWO_K4S);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graph"));

    let o = run(
        &["clique-tree", "--output", "json", "-"],
        "0 1\n1 2\n0 2\n3 4\n",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let trees = v["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 2);
    assert_eq!(trees[1]["nodes"][0], serde_json::json!([3, 4]));

    let o = run(&["clique-tree", "-"], C4);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn connectivity_and_separators() {
    let o = run(&["connectivity", "--output", "json", "-"], TWO_K4S);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kappa"], 3);
    assert_eq!(v["cutsets"], serde_json::json!([[2, 3, 4]]));

    let o = run(&["separators", "-"], TWO_K4S);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m_prime_matches_oracle"], true);
    assert_eq!(v["oracle"], serde_json::json!([[2, 3, 4]]));
}

#[test]
fn gen_is_seeded_and_parseable() {
    let args = [
        "gen", "--family", "ktree", "--n", "8", "--k", "3", "--seed", "9",
    ];
    let a = stdout(&run(&args, ""));
    let b = stdout(&run(&args, ""));
    assert_eq!(a, b);
    assert!(a.starts_with("# gen family=ktree n=8 k=3"));
    let o = run(&["connectivity", "-"], &a);
    assert!(stdout(&o).starts_with("kappa: 3\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check-chordal", "-"], "0 x\n").status.code(), Some(2));
    assert_eq!(run(&["check-chordal", "-"], "1 1\n").status.code(), Some(2));
    assert_eq!(run(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "9"], "").status.code(), Some(3));
}

#[test]
fn small_verify_run_is_deterministic() {
    let args = [
        "verify",
        "--max-n",
        "5",
        "--samples",
        "50",
        "--output",
        "json",
    ];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
}
