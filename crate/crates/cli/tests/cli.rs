use std::path::PathBuf;
use std::process::{Command, Output};

use cutplex::{cut_complex, family, Complex};
use serde_json::Value;

fn cutplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutplex")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = cutplex(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cutplex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn build_mobius_strip() {
    let out = cutplex(&["build", "cycle:5", "--k", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("124, 134, 135, 235, 245"), "{text}");

    let v = json(&["build", "cycle:5", "--k", "2"]);
    let facets: Vec<Vec<usize>> = serde_json::from_value(v["facets"].clone()).unwrap();
    assert_eq!(facets, vec![vec![0, 1, 3], vec![0, 2, 3], vec![0, 2, 4], vec![1, 2, 4], vec![1, 3, 4]]);
    assert_eq!(v["f_vector"], serde_json::json!([1, 5, 10, 5]));
    assert_eq!(v["mu"], -1);
}

#[test]
fn build_output_reads_back_as_the_complex() {
    for (spec, k) in [("cycle:5", 2), ("prism:3", 3), ("complete:4", 2), ("path:3", 3)] {
        let v = json(&["build", spec, "--k", &k.to_string()]);
        let parsed = Complex::from_json(&v).unwrap();
        assert_eq!(parsed, cut_complex(&family(spec).unwrap(), k), "{spec}");
    }
}

#[test]
fn shell_mobius_strip() {
    let out = cutplex(&["shell", "cycle:5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("NotShellable"));
    let v = json(&["shell", "cycle:6", "--k", "3"]);
    assert_eq!(v["certificate"]["verdict"], "shellable");
    assert_eq!(v["certificate"]["order"].as_array().unwrap().len(), 14);
}

#[test]
fn homology_with_prediction() {
    let v = json(&["homology", "petersen", "--k", "2"]);
    assert_eq!(v["matches"], true);
    assert_eq!(v["betti"][7], 6);
}

#[test]
fn morse_orders() {
    let v = json(&["morse", "prism:3", "--k", "2", "--order", "prism"]);
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["critical"], serde_json::json!([0, 0, 0, 2, 0]));
    let t = json(&["morse", "path:5", "--k", "2", "--order", "tree"]);
    assert_eq!(t["critical"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).sum::<u64>(), 0);
    let r = json(&["morse", "cycle:6", "--k", "2", "--order", "restricted"]);
    assert_eq!(r["critical_faces"].as_array().unwrap().len(), 1);
    let e = json(&["morse", "cycle:5", "--k", "2", "--order", "1,2,3,4,5"]);
    assert_eq!(e["acyclic"], true);
}

#[test]
fn realize_projective_plane() {
    let rp2 = r#"{"facets": [[0,1,3],[0,1,5],[0,2,4],[0,2,5],[0,3,4],[1,2,3],[1,2,4],[1,4,5],[2,3,5],[3,4,5]], "ambient": 6}"#;
    let path = scratch("rp2.json", rp2);
    let v = json(&["realize", path.to_str().unwrap()]);
    assert_eq!(v["k"], 13);
    assert_eq!(v["n"], 16);
    assert_eq!(v["round_trip"], true);
    // feed the realized graph back through the text format
    let graph = scratch("rp2.graph", v["graph_text"].as_str().unwrap());
    let h = json(&["homology", graph.to_str().unwrap(), "--k", "13"]);
    assert_eq!(h["homology"][2]["torsion"], serde_json::json!([2]));
}

#[test]
fn verify_corpus_is_clean_and_deterministic() {
    let a = cutplex(&["--json", "verify", "table1-small"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let b = cutplex(&["--json", "verify", "table1-small"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_statuses() {
    assert_eq!(cutplex(&["build", "nonsense:3", "--k", "2"]).status.code(), Some(2));
    assert_eq!(cutplex(&["build", "cycle:5"]).status.code(), Some(2));
    assert_eq!(cutplex(&["verify", "no-such-corpus"]).status.code(), Some(2));
    // a zero budget leaves shellability rows undecided, which counts as a mismatch
    assert_eq!(cutplex(&["verify", "table1-small", "--budget", "0"]).status.code(), Some(1));
}

#[test]
fn squared_cycle_experiment_only_prints() {
    let out = cutplex(&["experiment", "squared-cycle", "--k", "4", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("conjectured: H3 = Z and H4 = Z^3"), "{text}");
}
