use std::path::Path;
use std::process::{Command, Output};

use prym_core::examples;
use prym_core::json::{tableau_from_json, tableau_to_json};
use prym_core::strips::enumerate_strip_tableaux;
use prym_core::PrymParams;

fn prym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn betti_both_methods_agree() {
    let o = prym(&["betti", "--g", "7", "--r", "3", "--k", "4", "--method", "both"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "graph 29 / closed 29: AGREE");
}

#[test]
fn count_and_dim() {
    assert_eq!(stdout(&prym(&["count", "--r", "3", "--k", "0"])).trim(), "16");
    assert_eq!(stdout(&prym(&["count", "--r", "5", "--k", "6", "--method", "paths"])).trim(), "1024");
    assert_eq!(stdout(&prym(&["dim", "--g", "3", "--r", "3", "--k", "2"])).trim(), "empty");
    let o = prym(&["dim", "--g", "8", "--r", "3", "--k", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["dimension"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(prym(&["count", "--r", "6", "--k", "0", "--method", "brute"]).status.code(), Some(3));
    assert_eq!(prym(&["count", "--r", "3", "--k", "3", "--method", "det"]).status.code(), Some(2));
    assert_eq!(prym(&["count", "--r", "3", "--k", "1"]).status.code(), Some(2));
    assert_eq!(prym(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cells_stream_round_trips() {
    let o = prym(&["cells", "--g", "7", "--r", "3", "--k", "4"]);
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 24);
    let p = PrymParams::new(7, 3, 4).unwrap();
    let expected: Vec<_> = enumerate_strip_tableaux(&p, None).unwrap().iter().map(|s| s.extend()).collect();
    for (line, t) in lines.iter().zip(&expected) {
        let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
        v.as_object_mut().unwrap().remove("strip");
        let back = tableau_from_json(&v.to_string()).unwrap();
        assert_eq!(&back, t);
        assert_eq!(tableau_to_json(&back), v.to_string());
    }
    assert_eq!(stdout(&prym(&["cells", "--g", "7", "--r", "3", "--k", "4", "--count-only"])).trim(), "24");
}

#[test]
fn reflectify_trace() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "t.json", &tableau_to_json(&examples::reflection_input()));
    let o = prym(&["reflectify", "--g", "11", "--r", "4", "--k", "3", "--in", &input, "--trace"]);
    assert!(o.status.success());
    let got: Vec<_> = stdout(&o).lines().map(|l| tableau_from_json(l).unwrap()).collect();
    assert_eq!(got, examples::reflection_sequence());
}

#[test]
fn divisor_and_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = PrymParams::new(7, 3, 4).unwrap();
    let cells: Vec<_> = enumerate_strip_tableaux(&p, None).unwrap().iter().map(|s| s.extend()).collect();
    let a = write(dir.path(), "a.json", &tableau_to_json(&cells[0]));
    let b = write(dir.path(), "b.json", &tableau_to_json(&cells[23]));
    let o = prym(&["divisor", "--in", &a, "--g", "7", "--k", "4"]);
    assert!(o.status.success());
    let chips: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let chips = chips.as_array().unwrap();
    assert_eq!(chips.len(), 14);
    assert_eq!(chips.iter().filter(|c| c["free"] == true).count(), 2);
    let o = prym(&["path", "--g", "7", "--r", "3", "--k", "4", "--from", &a, "--to", &b]);
    assert!(o.status.success());
    let steps: Vec<_> = stdout(&o).lines().map(|l| tableau_from_json(l).unwrap()).collect();
    assert_eq!(steps.first(), Some(&cells[0]));
    assert_eq!(steps.last(), Some(&cells[23]));
}

#[test]
fn graph_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.dot");
    let o = prym(&["graph", "--g", "5", "--r", "3", "--k", "2", "--dot", out.to_str().unwrap()]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(out).unwrap();
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches(" -- ").count(), 6);
}

#[test]
fn census_columns() {
    let o = prym(&["census", "--r-max", "2", "--k", "0,2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "g,r,k,n,dim,C_method_det,C_method_paths,C_method_brute,cells,betti_closed,betti_graph,agree"
    );
    assert!(lines.all(|l| l.ends_with(",true")));
}

#[test]
fn selftest_runs_a_single_criterion() {
    let o = prym(&["selftest", "--only", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("[PASS] 5."));
}
