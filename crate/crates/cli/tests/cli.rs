use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn zkloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zkloop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn zkloop_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zkloop"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn text(args: &[&str]) -> String {
    let out = zkloop(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn structured(args: &[&str]) -> Value {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    serde_json::from_str(&text(&all)).unwrap()
}

#[test]
fn homology_reports_torsion() {
    let rp2 = text(&["homology", &fixture("rp2-6")]);
    assert!(rp2.contains("K: H1 = Z/2\n"), "{rp2}");
    assert!(rp2.contains("Z_K: H5 = Z^10, H6 = Z^15, H7 = Z^6, H8 = Z/2\n"), "{rp2}");
    let report = structured(&["homology", &fixture("rp2-6")]);
    assert_eq!(report["result"]["complex"][0]["torsion"], serde_json::json!([[2, 1]]));

    let sphere = text(&["homology", &fixture("boundary-simplex-3")]);
    assert!(sphere.contains("K: H2 = Z\n"), "{sphere}");
    assert!(sphere.contains("Z_K: H7 = Z\n"), "{sphere}");
}

#[test]
fn zero_vertex_index_is_rejected() {
    let doc = "{\n  \"schema_version\": 1,\n  \"name\": \"bad\",\n  \"vertex_count\": 2,\n  \"facets\": [\n    [1, 2],\n    [0, 1]\n  ]\n}\n";
    let out = zkloop_stdin(&["homology", "-"], doc);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 7") && err.contains("vertex 0"), "{err}");
}

#[test]
fn strict_mode_rejects_unknown_fields() {
    let doc = "{\"schema_version\": 1, \"name\": \"x\", \"vertex_count\": 1, \"facets\": [[1]], \"extra\": true}";
    assert!(zkloop_stdin(&["homology", "-"], doc).status.success());
    assert_eq!(zkloop_stdin(&["--strict", "homology", "-"], doc).status.code(), Some(2));
}

#[test]
fn classification_of_the_corpus() {
    let verdict = |name: &str| {
        structured(&["classify", &fixture(name)])["result"]["verdict"]
            .as_str()
            .unwrap()
            .to_owned()
    };
    assert_eq!(verdict("rp2-6"), "ProductPT");
    assert_eq!(verdict("torus-7"), "ProductP");
    assert_eq!(verdict("cycle-5"), "ProductP");

    let four = structured(&["classify", &fixture("four-dim-unknown")]);
    assert_eq!(four["result"]["verdict"], "Unknown");
    assert_eq!(four["result"]["classification"]["fired"], serde_json::json!([]));
    let reasons = four["result"]["classification"]["reasons"].as_array().unwrap();
    assert!(reasons.iter().any(|r| r["rule"] == "neighbourly_members"));
    assert!(reasons.iter().any(|r| r["rule"] == "localized_golod"));

    for name in ["rp2-6", "torus-7"] {
        let fired = structured(&["classify", &fixture(name)])["result"]["classification"]["fired"].clone();
        assert_eq!(fired[0], "neighbourly_members", "{name}");
    }
}

#[test]
fn golod_assertions_need_confirmation() {
    let plain = std::fs::read_to_string(fixture("four-dim-unknown")).unwrap();
    let members =
        "[1,2,3,4,6],\n    [1,2,3,5,6],\n    [1,2,4,5,6],\n    [1,3,4,5,6],\n    [2,3,4,5,6],\n    [1,2,3,4,5,6]";
    let doc = plain.replace(
        "  ]\n}\n",
        &format!("  ],\n  \"golod_assert\": [\n    {members}\n  ]\n}}\n"),
    );

    let refused = zkloop_stdin(&["classify", "-"], &doc);
    assert_eq!(refused.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("--i-assert-golod"));

    let out = zkloop_stdin(&["--format", "structured", "--i-assert-golod", "classify", "-"], &doc);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["verdict"], "LocalizedProductP");
    assert_eq!(report["input"]["golod_assert"].as_array().unwrap().len(), 6);
    assert!(report["command"]
        .as_array()
        .unwrap()
        .contains(&Value::from("--i-assert-golod")));
    assert!(report["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().contains("asserted")));
}

#[test]
fn excluded_primes() {
    let excluded = |report: &Value| report["result"]["excluded_primes"].clone();
    assert_eq!(
        excluded(&structured(&["primes", &fixture("rp2-6")])),
        serde_json::json!([2, 3])
    );
    assert_eq!(
        excluded(&structured(&["primes", &fixture("complete-graph-4")])),
        serde_json::json!([])
    );
    let simplex = "{\"schema_version\": 1, \"name\": \"simplex\", \"vertex_count\": 4, \"facets\": [[1,2,3,4]]}";
    let out = zkloop_stdin(&["--format", "structured", "primes", "-"], simplex);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(excluded(&report), serde_json::json!([]));
    assert_eq!(report["result"]["report"]["M"], 0);
}

#[test]
fn loop_factor_catalogs() {
    let points = structured(&["loop-factors", "--max-degree", "6", &fixture("points-5")]);
    let entries = &points["result"]["catalog"]["catalog"]["entries"];
    assert_eq!(
        entries[0]["factor"],
        serde_json::json!({"kind": "omega_sphere", "dim": 3})
    );
    assert_eq!(entries[0]["multiplicity"], "10");

    let single = structured(&["loop-factors", "--max-degree", "6", &fixture("points-1")]);
    assert_eq!(single["result"]["catalog"]["catalog"]["entries"], serde_json::json!([]));

    let rp2 = structured(&["loop-factors", "--max-degree", "9", "--field", "2", &fixture("rp2-6")]);
    let series = rp2["result"]["series"].as_array().unwrap();
    let f2 = series.iter().find(|s| s["ring"] == "F_2").expect("F_2 series present");
    assert_eq!(f2["series"]["coefficients"][7], "1");

    let bad_field = zkloop(&["loop-factors", "--field", "4", &fixture("rp2-6")]);
    assert_eq!(bad_field.status.code(), Some(2));
}

#[test]
fn certificates_build_and_verify() {
    let path = structured(&["certificate", "--verify", &fixture("path-3")]);
    assert_eq!(path["result"]["leaves"], 2);
    assert_eq!(path["result"]["verification"]["ok"], true);

    let point = structured(&["certificate", &fixture("points-1")]);
    assert_eq!(point["result"]["tree"]["kind"], "leaf");
    assert_eq!(point["result"]["tree"]["rule"], "single_vertex");
}

#[test]
fn tampered_tree_fails_verification() {
    let report = structured(&["certificate", &fixture("cycle-4")]);
    let mut tree = report["result"]["tree"].clone();
    let facets = tree["deletion"]["complex"]["facets"].as_array_mut().unwrap();
    facets.retain(|f| f != &serde_json::json!([3, 4]));
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let file = dir.join("tampered-cycle-4.json");
    std::fs::write(&file, serde_json::to_string_pretty(&tree).unwrap()).unwrap();

    let out = zkloop(&[
        "--format",
        "structured",
        "certificate",
        "--tree",
        file.to_str().unwrap(),
        &fixture("cycle-4"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let checked: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(checked["ok"], false);
    assert_eq!(checked["result"]["verification"]["ok"], false);
    let kinds: Vec<&str> = checked["result"]["verification"]["diagnostics"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["kind"]["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"union_mismatch"), "{kinds:?}");

    let honest = dir.join("cycle-4.json");
    std::fs::write(&honest, serde_json::to_string(&report["result"]["tree"]).unwrap()).unwrap();
    let out = zkloop(&["certificate", "--tree", honest.to_str().unwrap(), &fixture("cycle-4")]);
    assert!(out.status.success());
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["homology"],
        vec!["classify", "--embed-certificate"],
        vec!["primes"],
        vec!["loop-factors", "--max-degree", "9", "--field", "3"],
        vec!["certificate", "--verify"],
    ] {
        for format in ["text", "structured"] {
            for name in ["rp2-6", "torus-7", "four-dim-unknown"] {
                let mut full = vec!["--format", format];
                full.extend(args.iter().copied());
                let path = fixture(name);
                full.push(&path);
                let a = zkloop(&full);
                let b = zkloop(&full);
                assert_eq!(a.status.code(), b.status.code());
                assert_eq!(a.stdout, b.stdout, "{full:?}");
            }
        }
    }
}
