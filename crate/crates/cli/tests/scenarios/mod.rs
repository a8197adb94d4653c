use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hompoisson")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    (code(&o), serde_json::from_slice(&o.stdout).unwrap())
}

#[test]
fn hom_poisson_check_of_thp2_lists_witnesses() {
    let o = run(&["check", "--class", "hom-poisson", "catalog:THP2", "--params", "lambda=1"]);
    assert_eq!(code(&o), 1);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("hom_associativity at (1, 1, 2): [0, 2]"), "{out}");
    assert!(out.contains("hom_leibniz at (2, 1, 1): [0, -3]"), "{out}");

    // the printed table fails Hom-associativity at every λ; the corrected one
    // is Hom-Poisson exactly at λ = 0
    let o = run(&["check", "--class", "hom-poisson", "catalog:THP2", "--params", "lambda=0"]);
    assert_eq!(code(&o), 1);
    let o = run(&["check", "--class", "hom-poisson", "catalog:THP2-fix", "--params", "lambda=0"]);
    assert_eq!(code(&o), 0);
    let o = run(&["check", "--class", "hom-poisson", "catalog:THP2-fix", "--params", "lambda=1"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn printed_thp2_fails_the_transposed_checker() {
    // the printed table fails Hom-associativity, so this exits 1 rather than 0
    let (c, v) = json(&["check", "--class", "transposed-hom-poisson", "catalog:THP2", "--params", "lambda=5/2"]);
    assert_eq!(c, 1);
    let w = &v["witnesses"][0];
    assert_eq!(w["identity"], "hom_associativity");
    assert_eq!(w["tuple"], serde_json::json!([0, 0, 1]));
    assert_eq!(w["residual"], serde_json::json!(["0", "2"]));
    let (c, _) = json(&["check", "--class", "transposed-hom-poisson", "catalog:THP2-fix", "--params", "lambda=5/2"]);
    assert_eq!(c, 0);
}

#[test]
fn alpha_h_twist_output_is_accepted_by_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let out = out.to_str().unwrap();
    let o = run(&["twist", "--class", "transposed-poisson", "--alpha-h", "e1", "catalog:TP2-fix", "-o", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&run(&["check", "--class", "transposed-hom-poisson", out])), 0);
    // the printed TP2 is rejected at the input gate
    assert_eq!(code(&run(&["twist", "--class", "transposed-poisson", "--alpha-h", "e1", "catalog:TP2"])), 3);
}

#[test]
fn builder_outputs_compose_with_check() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (&["twist", "--class", "comm-hom-assoc", "--derived", "1", "--kind", "1", "catalog:CA2a"], "comm-hom-assoc"),
        (&["tensor", "--class", "transposed-hom-poisson", "catalog:TP2-fix", "catalog:TP2-fix"], "transposed-hom-poisson"),
        (&["tensor", "--class", "comm-hom-assoc", "catalog:CA2a", "catalog:CA2b"], "comm-hom-assoc"),
        (&["subadjacent", "catalog:PLP3-yau"], "transposed-hom-poisson"),
        (&["semidirect", "--class", "comm-hom-assoc", "catalog:CA3a"], "comm-hom-assoc"),
        (&["alphah", "catalog:TP2-fix", "--h", "e1+e2"], "transposed-hom-poisson"),
        (&["matched", "double", "--class", "comm-hom-assoc", "catalog:CA2a", "catalog:CA2b"], "comm-hom-assoc"),
    ];
    for (i, (args, class)) in cases.iter().enumerate() {
        let out = dir.path().join(format!("{i}.json"));
        let out = out.to_str().unwrap();
        let mut all = args.to_vec();
        all.extend(["-o", out]);
        let o = run(&all);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(code(&run(&["check", "--class", class, out])), 0, "{args:?}");
    }
}

#[test]
fn json_reports_are_byte_identical() {
    let cases: &[&[&str]] = &[
        &["check", "--class", "hom-poisson", "catalog:THP2", "--params", "lambda=1", "--json"],
        &["check", "--class", "transposed-hom-poisson", "catalog:THP3-yau", "--json"],
        &["checkrep", "--class", "transposed-hom-poisson", "catalog:THP2-fix", "--params", "lambda=1", "--json"],
        &["derivations", "catalog:CA3a", "--json"],
        &["matched", "check", "--class", "comm-hom-assoc", "catalog:CA2a", "catalog:CA2b", "--json"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        let mut seq = args.to_vec();
        seq.push("--sequential");
        let c = run(&seq);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, c.stdout, "{args:?}");
        assert_eq!(code(&a), code(&c));
    }
}

#[test]
fn json_report_schema() {
    let (c, v) = json(&["check", "--class", "hom-poisson", "catalog:THP2", "--params", "lambda=1"]);
    assert_eq!(c, 1);
    for key in ["command", "inputs", "verdict", "witnesses", "sub_reports"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "check");
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["inputs"], serde_json::json!(["catalog:THP2"]));
    let (_, v) = json(&["check", "--class", "hom-poisson", "catalog:THP2", "--params", "lambda=1", "--max-witnesses", "1"]);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn rationals_are_printed_in_lowest_terms() {
    let o = run(&["catalog", "show", "THP2", "--params", "lambda=6/4"]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("\"3/2\""), "{out}");
    assert!(!out.contains("6/4"));
}

#[test]
fn errors_go_to_stderr_with_exit_2() {
    let o = run(&["check", "--class", "comm-hom-assoc", "catalog:NOPE"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8(o.stderr).unwrap().contains("NOPE"));
    assert_eq!(code(&run(&["check", "--class", "not-a-class", "catalog:CA2a"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    // an unbound parameter is a usage error, not a failed check
    assert_eq!(code(&run(&["check", "--class", "transposed-hom-poisson", "catalog:THP2-fix"])), 2);
}

#[test]
fn precondition_failures_exit_3() {
    let o = run(&["dualrep", "catalog:THP2", "--params", "lambda=1"]);
    assert_eq!(code(&o), 3);
    let (c, v) = json(&["dualrep", "catalog:THP2", "--params", "lambda=1"]);
    assert_eq!(c, 3);
    assert_eq!(v["verdict"], "precondition-failed");
}

#[test]
fn derivations_of_thp2_contain_diag_0_1() {
    let (c, v) = json(&["derivations", "catalog:THP2", "--params", "lambda=1", "--commuting", "alpha"]);
    assert_eq!(c, 0);
    let dim = v["data"]["dimension"].as_u64().unwrap();
    assert_eq!(dim, 1);
    assert_eq!(v["data"]["basis"], serde_json::json!([[["0", "0"], ["0", "1"]]]));
    let o = run(&["derivations", "catalog:THP2", "--params", "lambda=1", "--commuting", "alpha"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains(&format!("dimension {dim}")));
}
