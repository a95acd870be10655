use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn bcast(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcast")).args(args).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn cycle_six_bounds_from_generated_file() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("c6.txt");
    let gen = bcast(&["generate", "cycle", "6", "--output", path_str(&file)]);
    assert!(gen.status.success());
    let out = bcast(&["compute", "bounds", "--graph", path_str(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["mp"], r["gamma_b"]);
    assert_eq!(r["chain_ok"], json!(true));
    assert_eq!(r["cycle_equality"], json!(true));
    assert_eq!(r["mp_f"], json!("2/1"));
}

#[test]
fn adjacent_multipacking_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("p4.txt");
    fs::write(&graph, "vertices a b c d\na b\nb c\nc d\n").unwrap();
    // Hash is taken from a genuine certificate for the same graph.
    let good = dir.path().join("good.json");
    assert!(bcast(&["compute", "mp", "--graph", path_str(&graph), "--cert", path_str(&good)]).status.success());
    let mut cert: Value = serde_json::from_str(&fs::read_to_string(&good).unwrap()).unwrap();
    cert["payload"] = json!({ "members": ["b", "c"] });
    let bad = dir.path().join("bad.json");
    fs::write(&bad, cert.to_string()).unwrap();
    let out = bcast(&["verify", path_str(&bad), "--graph", path_str(&graph)]);
    assert_eq!(out.status.code(), Some(1));
    let r = json_of(&out);
    assert_eq!(r["valid"], json!(false));
    assert_eq!(r["violation"]["s"], json!(1));
}

#[test]
fn computed_certificates_verify() {
    let dir = TempDir::new().unwrap();
    for (param, kind) in [("gamma", "broadcast"), ("rho", "multipacking"), ("gammab", "broadcast"), ("mp", "multipacking"), ("mpf", "fractional")] {
        let cert = dir.path().join(format!("{param}.json"));
        let out = bcast(&["compute", param, "--gen", "gk:1", "--cert", path_str(&cert)]);
        assert!(out.status.success(), "{param}");
        let c: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
        assert_eq!(c["type"], json!(kind));
        let v = bcast(&["verify", path_str(&cert), "--gen", "gk:1"]);
        assert_eq!(v.status.code(), Some(0), "{param}");
        // The same certificate against another graph fails on the hash.
        let w = bcast(&["verify", path_str(&cert), "--gen", "gk:2"]);
        assert_eq!(w.status.code(), Some(1), "{param}");
    }
}

#[test]
fn hand_written_certificates() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("t.txt");
    fs::write(&graph, bcast(&["generate", "appendix-tree"]).stdout).unwrap();
    let hash = {
        let c = dir.path().join("h.json");
        bcast(&["compute", "gamma", "--graph", path_str(&graph), "--cert", path_str(&c)]);
        let v: Value = serde_json::from_str(&fs::read_to_string(&c).unwrap()).unwrap();
        v["graph_hash"].clone()
    };
    let order: Vec<String> = (1..=10).map(|i| format!("v{i}")).collect();
    let mut reversed = order.clone();
    reversed.reverse();
    let cases = [
        (json!({ "type": "strong-elim", "payload": { "ordering": order } }), 0),
        (json!({ "type": "strong-elim", "payload": { "ordering": reversed } }), 1),
        (json!({ "type": "broadcast", "payload": { "powers": { "v7": 2, "v6": 1 } } }), 0),
        (json!({ "type": "broadcast", "payload": { "powers": { "v7": 2 } } }), 1),
        (json!({ "type": "fractional", "payload": { "weights": { "v1": "1/2", "v2": "1/2", "v3": "1" } } }), 0),
        (json!({ "type": "fractional", "payload": { "weights": { "v1": "1", "v4": "1/2" } } }), 1),
        // Diameter 7 is odd; cutting v10-v8 leaves diameters 4 and 2.
        (json!({ "type": "split-set", "payload": { "edges": [] } }), 1),
        (json!({ "type": "split-set", "payload": { "edges": [["v10", "v8"]] } }), 0),
        (json!({ "type": "multipacking", "payload": { "members": ["nobody"] } }), 1),
    ];
    for (i, (mut cert, code)) in cases.into_iter().enumerate() {
        cert["graph_hash"] = hash.clone();
        let file = dir.path().join(format!("c{i}.json"));
        fs::write(&file, cert.to_string()).unwrap();
        let out = bcast(&["verify", path_str(&file), "--graph", path_str(&graph)]);
        assert_eq!(out.status.code(), Some(code), "case {i}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn output_is_deterministic() {
    let a = bcast(&["compute", "mpf", "--gen", "figure1"]);
    let b = bcast(&["compute", "mpf", "--gen", "figure1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let t1 = bcast(&["treemp", "--trace", "--gen", "random-tree:15:3"]);
    let t2 = bcast(&["treemp", "--trace", "--gen", "random-tree:15:3"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bcast(&["compute", "mp"]).status.code(), Some(2));
    assert_eq!(bcast(&["compute", "nope", "--gen", "cycle:5"]).status.code(), Some(2));
    assert_eq!(bcast(&["compute", "mp", "--gen", "cycle:5", "--graph", "x"]).status.code(), Some(2));
    assert_eq!(bcast(&["compute", "mp", "--gen", "cycle:2"]).status.code(), Some(2));
    assert_eq!(bcast(&["farber", "--broadcast", "--gen", "cycle:5"]).status.code(), Some(2));
    assert_eq!(bcast(&["facts", "--gen", "cycle:6", "--alpha", "zz"]).status.code(), Some(2));
}

#[test]
fn farber_weights_and_trace() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("w.txt");
    // Raising v4's weight moves the dominator of v1 onto v1 itself.
    fs::write(&w, "# heavier v4\nv4 5\n").unwrap();
    let out = bcast(&["farber", "--gen", "appendix-tree", "--weights", path_str(&w), "--trace"]);
    assert!(out.status.success());
    let r = json_of(&out);
    assert_eq!(r["weight"], json!(4));
    assert!(r["dominating"].as_array().unwrap().contains(&json!("v1")));
    let trace = r["trace"].as_array().unwrap();
    assert_eq!(trace.iter().filter(|s| s["stage"] == "1").count(), 10);
    assert_eq!(trace.iter().filter(|s| s["stage"] == "2").count(), 10);

    let b = json_of(&bcast(&["farber", "--broadcast", "--gen", "appendix-tree"]));
    assert_eq!(b["cost"], json!(3));
    assert_eq!(b["broadcast"], json!({ "v6": 1, "v7": 2 }));
}

#[test]
fn chordal_facts_and_dot() {
    let dir = TempDir::new().unwrap();
    let dot = dir.path().join("g.dot");
    let out = bcast(&["chordal", "--gen", "trampoline:4", "--dot", path_str(&dot)]);
    assert!(out.status.success());
    let r = json_of(&out);
    assert_eq!(r["verdict"], json!("NotStronglyChordal"));
    assert!(!r["witness"].as_array().unwrap().is_empty());
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph G {"));

    let f = json_of(&bcast(&["facts", "--gen", "gk:1", "--alpha", "a1"]));
    assert_eq!(f["facts"].as_array().unwrap().len(), 9);
    assert_eq!(f["diameter"], json!(8));
}

#[test]
fn treemp_on_big_appendix_tree() {
    let r = json_of(&bcast(&["treemp", "--gen", "appendix-big-tree"]));
    assert_eq!(r["multipacking"], json!(["d", "j", "m", "n", "t", "v"]));
    assert_eq!(r["size"], json!(6));
}

#[test]
fn reproduce_passes_and_prints_table() {
    let out = bcast(&["reproduce", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_of(&out);
    assert_eq!(r["all_passed"], json!(true));
    assert!(r["rows"].as_array().unwrap().len() > 30);
    assert!(String::from_utf8_lossy(&out.stderr).contains("instance"));
}
