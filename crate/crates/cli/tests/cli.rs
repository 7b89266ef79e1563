use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const DIAMOND: &str = "4 5\n0 1\n0 2\n0 3\n1 2\n2 3\n";

fn uchord(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uchord"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(kind: &str) -> String {
    let o = uchord(&["gen", kind], "");
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

fn json_line(o: &Output, line: usize) -> Value {
    serde_json::from_str(stdout(o).lines().nth(line).unwrap()).unwrap()
}

#[test]
fn petersen_is_in_c() {
    let o = uchord(&["recognize", "-"], &gen("petersen"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("IN_C\n"));
    assert_eq!(json_line(&o, 1)["in_c"], true);
}

#[test]
fn diamond_is_rejected() {
    let o = uchord(&["recognize", "-"], DIAMOND);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NOT_IN_C\n"));
    let verdict = json_line(&o, 1);
    assert_eq!(verdict["components"][0]["in_c"], false);
    assert!(verdict["components"][0]["rejection"]["step"].is_string());
}

#[test]
fn petersen_needs_three_colors() {
    let o = uchord(&["color", "-"], &gen("petersen"));
    assert_eq!(o.status.code(), Some(0));
    let c = json_line(&o, 0);
    assert_eq!(c["num_colors"], 3);
    assert_eq!(c["color"].as_array().unwrap().len(), 10);
}

#[test]
fn coloring_refuses_graphs_outside_the_class() {
    let o = uchord(&["color", "-"], DIAMOND);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NOT_IN_C"));
}

#[test]
fn parse_errors_exit_with_two() {
    for bad in ["3 1\n0 9\n", "2 1\n0 0\n", "x\n"] {
        let o = uchord(&["recognize", "-"], bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    }
    let o = uchord(&["recognize", "/nonexistent/graph.txt"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_agrees_and_refuses_large_inputs() {
    for text in [DIAMOND.to_string(), gen("petersen"), gen("heawood")] {
        let o = uchord(&["verify", "-"], &text);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with("AGREE\n"));
    }
    let o = uchord(&["verify", "-"], &gen("fixture-no-transversal"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("refusing"));
}

#[test]
fn trees_in_json_and_dot() {
    let fixture = gen("fixture-no-transversal");
    let o = uchord(&["tree", "-"], &fixture);
    assert_eq!(o.status.code(), Some(0));
    let tree = json_line(&o, 0);
    assert_eq!(tree["root"], 0);
    assert!(tree["nodes"].as_array().unwrap().len() > 1);
    let o = uchord(&["tree", "-", "--format", "dot"], &fixture);
    assert!(stdout(&o).starts_with("digraph T {"));
    let o = uchord(&["tree", "-"], DIAMOND);
    assert_eq!(o.status.code(), Some(1));
    let o = uchord(&["tree", "-", "--format", "edgelist"], &fixture);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn disconnected_trees_are_listed_per_component() {
    let o = uchord(&["tree", "-"], "6 4\n0 1\n1 2\n3 4\n4 5\n");
    assert_eq!(o.status.code(), Some(0));
    let parts = json_line(&o, 0)["components"].as_array().unwrap().clone();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[1]["nodes"], serde_json::json!([3, 4, 5]));
}

#[test]
fn clique_of_k5_with_a_tail() {
    let mut text = String::from("8 13\n");
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    text.push_str("4 5\n5 6\n6 7\n");
    let o = uchord(&["clique", "-"], &text);
    assert_eq!(stdout(&o), "size 5\nnodes 0 1 2 3 4\n");
    let o = uchord(&["clique", "-", "--format", "json"], &text);
    assert_eq!(json_line(&o, 0)["size"], 5);
}

#[test]
fn generation_is_deterministic_per_seed() {
    let a = uchord(&["gen", "random-c", "--seed", "11", "--size", "60"], "");
    let b = uchord(&["gen", "random-c", "--seed", "11", "--size", "60"], "");
    let c = uchord(&["gen", "random-c", "--seed", "12", "--size", "60"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let o = uchord(&["recognize", "-"], &stdout(&a));
    assert_eq!(o.status.code(), Some(0));
    let j = uchord(&["gen", "random-c", "--seed", "11", "--size", "60", "--format", "json"], "");
    assert_eq!(json_line(&j, 0)["log"]["seed"], 11);
}

#[test]
fn generated_fixed_graphs() {
    let header = |text: &str| text.lines().next().unwrap().to_string();
    assert_eq!(header(&gen("petersen")), "10 15");
    assert_eq!(header(&gen("heawood")), "14 21");
    assert_eq!(header(&gen("fixture-no-transversal")), "36 84");
    let sub = uchord(&["gen", "2subdiv", "-"], &gen("petersen"));
    assert_eq!(header(&stdout(&sub)), "40 45");
    let o = uchord(&["gen", "2subdiv"], "");
    assert_eq!(o.status.code(), Some(2));
    let dot = uchord(&["gen", "petersen", "--format", "dot"], "");
    assert!(stdout(&dot).starts_with("graph G {"));
}
