//! End-to-end runs of the `frugalis` binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn frugalis(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frugalis"))
        .args(args)
        .env_remove("FRUGALIS_BUDGET_NODES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_color_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.g6");
    let coloring = dir.path().join("c.json");
    assert!(frugalis(&["gen", "random_cubic", "16", "--seed", "4", "-o", p(&graph)], "").status.success());
    let o = frugalis(&["color", "-t", "2", "-o", p(&coloring), p(&graph)], "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("palette"));
    assert_eq!(frugalis(&["verify", "-t", "2", "--coloring", p(&coloring), p(&graph)], "").status.code(), Some(0));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":16,"palette":1,"colors":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]}"#).unwrap();
    assert_eq!(frugalis(&["verify", "--coloring", p(&bad), p(&graph)], "").status.code(), Some(1));
}

#[test]
fn chi_alpha_bounds_ng_on_stdin() {
    let c5 = stdout(&frugalis(&["gen", "cycle", "5"], ""));
    assert_eq!(stdout(&frugalis(&["chi"], &c5)).trim(), "3");
    assert_eq!(stdout(&frugalis(&["alpha", "-t", "1"], &c5)).trim(), "1");
    let bounds: serde_json::Value = serde_json::from_str(&stdout(&frugalis(&["bounds", "--alpha", "2", "-"], &c5))).unwrap();
    assert!(bounds.as_array().unwrap().iter().any(|e| e["name"] == "alpha_ratio_lower"));
    let ng: serde_json::Value = serde_json::from_str(&stdout(&frugalis(&["ng"], &c5))).unwrap();
    assert_eq!(ng["sum"], 6);
}

#[test]
fn env_budget_and_strict() {
    let g = stdout(&frugalis(&["gen", "random_cubic", "40", "--seed", "9"], ""));
    let o = Command::new(env!("CARGO_BIN_EXE_frugalis"))
        .args(["chi", "--strict", "-"])
        .env("FRUGALIS_BUDGET_NODES", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(g.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "unknown");
}

#[test]
fn bad_input_is_a_one_line_diagnostic() {
    let o = frugalis(&["chi"], "D?{A\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
    assert_eq!(frugalis(&["chi", "/definitely/missing.g6"], "").status.code(), Some(2));
}

#[test]
fn reduce_x3c_writes_graph_and_roles() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    std::fs::write(&inst, r#"{"q":1,"triples":[[0,1,2]]}"#).unwrap();
    let graph = dir.path().join("gadget.g6");
    let o = frugalis(&["reduce-x3c", p(&inst), "-t", "2", "-o", p(&graph)], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "5");
    let roles: Vec<String> = serde_json::from_str(&std::fs::read_to_string(dir.path().join("gadget.g6.roles.json")).unwrap()).unwrap();
    assert_eq!(roles.len(), 9);
    let alpha = frugalis(&["alpha", p(&graph)], "");
    assert_eq!(stdout(&alpha).trim(), "5");
}

#[test]
fn batch_output_does_not_depend_on_jobs() {
    let mut input = String::new();
    for seed in 0..12 {
        input += &stdout(&frugalis(&["gen", "random_cubic", "12", "--seed", &seed.to_string()], ""));
    }
    input += &stdout(&frugalis(&["gen", "ng_exceptional"], ""));
    let runs: Vec<String> = ["1", "2", "8"].iter().map(|j| stdout(&frugalis(&["batch", "--jobs", j], &input))).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let lines: Vec<serde_json::Value> = runs[0].lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), input.lines().count());
    assert!(lines.iter().enumerate().all(|(i, r)| r["line"] == i + 1));
    let timed = stdout(&frugalis(&["batch", "--ops", "chi", "--timings"], &input));
    assert!(timed.lines().all(|l| l.contains("wall_ms")));
}
