//! The `qknot` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qknot"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &Path, name: &str, bytes: &[u8]) -> String {
    let p = dir.join(name);
    std::fs::write(&p, bytes).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn catalog_list_and_export() {
    let o = qknot(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    let rows = json(&o);
    let ids: Vec<&str> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    for id in [
        "deg1",
        "deg2a",
        "deg3",
        "deg4a",
        "deg4b",
        "deg4-wall-1",
        "deg5-w6",
    ] {
        assert!(ids.contains(&id), "{id}");
    }
    let e = qknot(&["catalog", "export", "deg3"]);
    assert_eq!(code(&e), 0);
    let doc = json(&e);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["degree"], 3);
    assert_eq!(doc["ambient"], "RP4");
}

#[test]
fn verify_is_deterministic_and_file_equals_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "deg3.json",
        &qknot(&["catalog", "export", "deg3"]).stdout,
    );
    let a = qknot(&["verify", &f]);
    let b = qknot(&["verify", &f]);
    let c = qknot(&["verify", "catalog:deg3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let v = json(&a);
    assert_eq!(v["on_quadric"], true);
    assert_eq!(v["certificate"]["is_knot"], true);
}

#[test]
fn wall_curve_shows_its_node() {
    let v = json(&qknot(&["verify", "catalog:deg4-wall-2"]));
    assert_eq!(v["certificate"]["is_knot"], false);
    let kinds: Vec<&str> = v["singular_points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["kind"].as_str().unwrap())
        .collect();
    assert_eq!(
        kinds.iter().filter(|k| **k != "complex-node").count(),
        1,
        "{kinds:?}"
    );
}

#[test]
fn project_then_pullback() {
    let dir = tempfile::tempdir().unwrap();
    let pr = qknot(&["project", "catalog:deg2a"]);
    assert_eq!(code(&pr), 0, "{}", String::from_utf8_lossy(&pr.stderr));
    let doc = json(&pr);
    assert_eq!(doc["ambient"], "RP3");
    assert_eq!(doc["degree"], 2);
    assert_eq!(doc["metadata"]["infinity"]["all_on_conic"], true);
    let f = write(dir.path(), "slice.json", &pr.stdout);
    let pb = qknot(&["pullback", &f]);
    assert_eq!(code(&pb), 0);
    let g = write(dir.path(), "lift.json", &pb.stdout);
    let v = qknot(&["verify", &g]);
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["degree"], 2);
}

#[test]
fn project_from_a_curve_point_drops_the_degree() {
    let o = qknot(&["project", "catalog:deg3", "--param", "0"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = json(&o);
    assert_eq!(doc["degree"], 2);
    assert_eq!(doc["metadata"]["infinity"]["distinct_on_conic"], 1);
}

#[test]
fn writhe_and_jacobian() {
    let w = json(&qknot(&["writhe", "catalog:deg2a"]));
    assert_eq!(w["writhe"], 0);
    let w = json(&qknot(&["writhe", "catalog:deg3"]));
    assert_eq!(w["writhe"].as_i64().unwrap().abs(), 1);
    let j = qknot(&["jacobian", "catalog:deg4a"]);
    assert_eq!(code(&j), 0);
    assert_eq!(json(&j)["rank"], 9);
}

#[test]
fn diagram_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.svg");
    let o = qknot(&["diagram", "catalog:deg3", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(json(&o)["writhe"].as_i64().unwrap().abs(), 1);
}

#[test]
fn glue_two_slice_lines() {
    let dir = tempfile::tempdir().unwrap();
    let line = |rows: [[i64; 2]; 4]| {
        let polys: Vec<Vec<String>> = std::iter::once(["0".into(), "0".into()].to_vec())
            .chain(
                rows.iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect()),
            )
            .collect();
        serde_json::to_vec(
            &serde_json::json!({"schema": 1, "ambient": "RP3", "degree": 1, "polys": polys}),
        )
        .unwrap()
    };
    // two lines through [0:1:0:0:0]
    let a = write(
        dir.path(),
        "a.json",
        &line([[1, 0], [0, 1], [0, 0], [0, 0]]),
    );
    let b = write(
        dir.path(),
        "b.json",
        &line([[1, 0], [0, 0], [0, 1], [0, 0]]),
    );
    let o = qknot(&["glue", &a, &b]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = json(&o);
    assert_eq!(doc["degree"], 2);
    assert!(doc["metadata"]["recipe"]["lambda"].is_string());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", b"{ not json");
    let o = qknot(&["verify", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));
    assert_eq!(code(&qknot(&["verify", "missing-file.json"])), 2);
    assert_eq!(code(&qknot(&["verify", "catalog:nope"])), 2);
    assert_eq!(code(&qknot(&["frobnicate"])), 2);
    assert_eq!(code(&qknot(&["--help"])), 0);
    // not on the quadric
    assert_eq!(
        code(&qknot(&[
            "project",
            "catalog:deg3",
            "--point",
            "[1:0:0:0:0]"
        ])),
        2
    );
    // a slice curve cannot be pulled back twice
    assert_eq!(code(&qknot(&["pullback", "catalog:deg3"])), 2);
    // a claim that does not hold
    assert_eq!(code(&qknot(&["catalog", "verify", "deg4b"])), 1);
    assert_eq!(code(&qknot(&["catalog", "verify", "deg4a"])), 0);
}
