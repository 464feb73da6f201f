mod common;

use common::cli;
use scoco::{encode_graph6, families};
use serde_json::Value;

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn tmp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn k4_is_a_member() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = tmp(&dir, "k4.txt", "1111\n1111\n1111\n1111\n");
    let (code, out, _) = cli(
        &[
            "recognize",
            "--class",
            "strong-cocomparability",
            "--format",
            "matrix",
            &k4,
        ],
        b"",
    );
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["member"], true);
    assert_eq!(v["ordering"].as_array().unwrap().len(), 4);
}

#[test]
fn c5_yields_a_certificate_that_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = tmp(&dir, "c5.g6", &encode_graph6(&families::cycle(5)));
    let (code, out, _) = cli(&["recognize", "--class", "strong-cocomparability", &c5], b"");
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["member"], false);
    assert!(v["certificate"]["walk"].is_array());

    let cert = tmp(&dir, "cert.json", &out);
    let (code, out, _) = cli(&["certify", &c5, "--certificate", &cert], b"");
    assert_eq!(code, 0, "{out}");
    assert_eq!(json(&out)["valid"], true);

    // The same certificate says nothing about a different graph.
    let c6 = tmp(&dir, "c6.g6", &encode_graph6(&families::path(5)));
    let (code, _, _) = cli(&["certify", &c6, "--certificate", &cert], b"");
    assert_eq!(code, 1);
}

#[test]
fn order_then_certify() {
    let dir = tempfile::tempdir().unwrap();
    for (i, g) in [
        families::path(6),
        families::star(4),
        families::complete(3),
        families::cycle(4),
    ]
    .iter()
    .enumerate()
    {
        let f = tmp(
            &dir,
            &format!("g{i}.txt"),
            &scoco::serialize(g, scoco::GraphFormat::Matrix),
        );
        let (code, out, _) = cli(&["order", &f], b"");
        assert_eq!(code, 0);
        let ord: Vec<String> = json(&out)["ordering"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        let (code, out, _) = cli(&["certify", &f, &ord.join(",")], b"");
        assert_eq!(code, 0, "{out}");
    }
    // A bad ordering of P4 is rejected with the offending pattern.
    let p4 = tmp(&dir, "p4.txt", "1100\n1110\n0111\n0011\n");
    let (code, out, _) = cli(&["certify", &p4, "0,3,1,2"], b"");
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert!(v["pattern"].is_object());
}

#[test]
fn enumerate_minimal_six() {
    let (code, out, _) = cli(&["enumerate-minimal", "-n", "6"], b"");
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["count"], 5);
    assert_eq!(v["n"], 6);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 5);
    let (code, _, err) = cli(&["enumerate-minimal", "-n", "8"], b"");
    assert_eq!(code, 2);
    assert!(err.contains("corpus"));
}

#[test]
fn classes_and_modes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = tmp(&dir, "c4.txt", "1101\n1110\n0111\n1011\n");
    let expect = [
        ("strong-cocomparability", 0),
        ("cocomparability", 0),
        ("chordal", 1),
        ("strongly-chordal", 1),
        ("interval", 1),
        ("bipartite-scc", 0),
    ];
    for (class, want) in expect {
        let (code, out, err) = cli(&["recognize", "--class", class, &c4], b"");
        assert_eq!(code, want, "{class}: {out} {err}");
        assert_eq!(json(&out)["class"], class);
    }
    // Irreflexive defaults: the loopless C4 is a comparability graph.
    let c4_loopless = tmp(&dir, "c4l.txt", "0101\n1010\n0101\n1010\n");
    assert_eq!(cli(&["recognize", "--class", "comparability", &c4_loopless], b"").0, 0);
    assert_eq!(
        cli(&["recognize", "--class", "strong-comparability", &c4_loopless], b"").0,
        0
    );
    // A reflexive matrix under an irreflexive class is an input error.
    assert_eq!(cli(&["recognize", "--class", "comparability", &c4], b"").0, 2);
    assert_eq!(
        cli(
            &["recognize", "--class", "comparability", "--mode", "reflexive", &c4],
            b""
        )
        .0,
        0
    );
}

#[test]
fn stdin_and_formats() {
    let (code, out, _) = cli(&["recognize", "--format", "edge-list", "-"], b"4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["member"], true);
    let (code, _, _) = cli(
        &["recognize", "--format", "graph6", "-"],
        encode_graph6(&families::cycle(6)).as_bytes(),
    );
    assert_eq!(code, 1);
}

#[test]
fn oracle_patterns_and_mode_checks() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = tmp(&dir, "c4.txt", "1101\n1110\n0111\n1011\n");
    let (code, out, _) = cli(&["oracle", "--patterns", "gamma,slash", &c4], b"");
    assert_eq!(code, 1);
    assert_eq!(json(&out)["found"], false);
    let (code, out, _) = cli(&["oracle", "--patterns", "slash", &c4], b"");
    assert_eq!(code, 0);
    assert!(json(&out)["ordering"].is_array());
    // i2 needs a loopless graph.
    assert_eq!(cli(&["oracle", "--patterns", "i2,slash", &c4], b"").0, 2);
    let loopless = tmp(&dir, "l.txt", "0101\n1010\n0101\n1010\n");
    assert_eq!(cli(&["oracle", "--patterns", "pi2", &loopless], b"").0, 0);
}

#[test]
fn gen_caterpillar() {
    let (code, out, _) = cli(
        &[
            "gen",
            "caterpillar",
            "--spine",
            "3",
            "--replicate",
            "1:1",
            "--format",
            "edge-list",
        ],
        b"",
    );
    assert_eq!(code, 0);
    let (code, rec, _) = cli(
        &["recognize", "--class", "bipartite-scc", "--format", "edge-list", "-"],
        out.as_bytes(),
    );
    assert_eq!(code, 0, "{rec}");
    let (code, _, err) = cli(&["gen", "caterpillar", "--spine", "5", "--replicate", "1:1,2:1"], b"");
    assert_eq!(code, 2);
    assert!(err.contains("consecutive"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["recognize", "--bogus", "x"], b"").0, 2);
    assert_eq!(cli(&["frobnicate"], b"").0, 2);
    assert_eq!(cli(&["recognize", "/nonexistent/file.txt"], b"").0, 2);
    assert_eq!(cli(&["recognize", "--class", "perfect", "-"], b"1\n").0, 2);
    assert_eq!(cli(&["recognize", "-"], b"11\n01\n").0, 2);
    assert_eq!(cli(&["cross-validate", "-n", "12"], b"").0, 2);
    let (code, out, _) = cli(&["--help"], b"");
    assert_eq!(code, 0);
    assert!(out.contains("enumerate-minimal"));
}

#[test]
fn cross_validate_reports() {
    let (code, out, _) = cli(&["cross-validate", "-n", "5"], b"");
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["graphs"], 34);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}
