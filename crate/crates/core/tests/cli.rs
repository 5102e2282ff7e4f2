use std::process::{Command, Output};

use eopack::graph::{generate, write_graph6, GeneratorSpec};

fn eopack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eopack"))
        .args(args)
        .env_remove("EOPACK_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn g6(spec: GeneratorSpec) -> String {
    write_graph6(&generate(&spec).unwrap())
}

#[test]
fn compute_prints_value_and_witness() {
    let o = eopack(&["compute", "--invariant", "rho-eo", "--g6", &g6(GeneratorSpec::Path(7))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
    let o = eopack(&["compute", "--invariant", "nu-i", "--g6", &g6(GeneratorSpec::Path(6)), "--witness"]);
    assert_eq!(stdout(&o), "2\n1-2 4-5\n");
}

#[test]
fn compute_over_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    let text = [GeneratorSpec::Path(5), GeneratorSpec::Cycle(5), GeneratorSpec::Complete(4)].map(g6).join("\n");
    std::fs::write(&path, text).unwrap();
    let o = eopack(&["compute", "--invariant", "alpha", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "3\n2\n1\n");
}

#[test]
fn product_golden() {
    // P_2 o P_3 has 6 vertices and 13 edges
    let o = eopack(&["product", "--kind", "lex", "--g", "A_", "--h", "Bg"]);
    assert_eq!(o.status.code(), Some(0));
    let g = eopack::graph::parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (6, 13));
    let o = eopack(&["product", "--kind", "rooted", "--g", "A_", "--h", "Bg", "--root", "1"]);
    let g = eopack::graph::parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (6, 5));
}

#[test]
fn witness_hypercube() {
    let o = eopack(&["witness", "--name", "hypercube-eop", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "size 8");
    assert_eq!(lines[2].split(' ').count(), 8);
    assert_eq!(lines[3], "VALID");
}

#[test]
fn check_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = eopack(&["check", "--suite", "paths", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("pass paths-formulas instances=20 failures=0"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["id"], "paths-formulas");
    assert_eq!(v[0]["status"], "pass");
    for key in ["citation", "instances_run", "failures", "wall_ms"] {
        assert!(v[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn table_rows() {
    let o = eopack(&["table", "--name", "hypercubes", "--max-n", "6"]);
    assert_eq!(
        stdout(&o),
        "n\trho_2\trho_3\trho_eo\n1\t1\t1\t1\n2\t1\t1\t2\n3\t2\t1\t3\n4\t2\t2\t8\n5\t4\t2\t>=10\n6\t8\t4\t>=24\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(eopack(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(eopack(&["compute", "--invariant", "alpha"]).status.code(), Some(2));
    assert_eq!(eopack(&["compute", "--invariant", "alpha", "--g6", "~~~"]).status.code(), Some(2));
    let q7 = g6(GeneratorSpec::Hypercube(7));
    assert_eq!(eopack(&["compute", "--invariant", "nu-i", "--g6", &q7]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_eopack"))
        .args(["compute", "--invariant", "alpha", "--g6", &g6(GeneratorSpec::Cycle(6))])
        .env("EOPACK_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    // the lexicographic equality fails for edgeless second factors
    assert_eq!(eopack(&["check", "--suite", "lex-nu-equality", "--max-n", "2"]).status.code(), Some(1));
}
