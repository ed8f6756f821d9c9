use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const ODDLY_C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";

fn skewperm(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewperm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn skewperm");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("one JSON document on stdout")
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn skew_permpoly_of_oddly_oriented_c4() {
    let out = skewperm(&["permpoly", "--skew", "--output", "json"], ODDLY_C4);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree"], 4);
    assert_eq!(v["kind"], "skew");
    assert_eq!(
        v["coefficients"],
        serde_json::json!(["1", "0", "-4", "0", "0"])
    );

    let t = skewperm(&["permpoly", "--skew"], ODDLY_C4);
    assert_eq!(text(&t), "x^4 - 4x^2\ncoefficients: 1 0 -4 0 0\n");
}

#[test]
fn ryser_on_two_by_two_skew_matrix() {
    let out = skewperm(&["permanent", "--ryser"], "2\n0 1\n-1 0\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(text(&out), "-1\n");
    let out = skewperm(
        &["permanent", "--skew-even", "--output", "json"],
        "2\n0 1\n-1 0\n",
    );
    assert_eq!(json(&out)["value"], "-1");
}

#[test]
fn verify_same_poly_refutes_c4() {
    let out = skewperm(&["verify", "same-poly", "--output", "json"], "Cl\n");
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(v["graph6"], "Cl");
    let w = &v["witness"];
    assert_eq!(w["bits_a"], 0);
    assert!(w["bits_b"].is_u64());
    assert_ne!(w["poly_a"], w["poly_b"]);
    assert!(v["seed"].is_null());
}

#[test]
fn verify_holds_exits_zero() {
    let out = skewperm(&["verify", "matching-eq", "--output", "json"], "Bw\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "holds");
}

#[test]
fn verify_several_graphs_gives_array() {
    let out = skewperm(&["verify", "same-poly", "--output", "json"], "Bw\nCl\nC~\n");
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert_eq!(reports[0]["verdict"], "holds");
    assert_eq!(reports[1]["verdict"], "refuted");
}

#[test]
fn text_and_json_agree() {
    let t = text(&skewperm(&["charpoly"], "Cl\n"));
    let j = json(&skewperm(&["charpoly", "--output", "json"], "Cl\n"));
    let coeffs: Vec<String> = j["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    assert!(t.contains(&format!("coefficients: {}", coeffs.join(" "))));

    let t = text(&skewperm(
        &["spectrum", "--input-format", "orientation"],
        ODDLY_C4,
    ));
    let j = json(&skewperm(
        &[
            "spectrum",
            "--input-format",
            "orientation",
            "--output",
            "json",
        ],
        ODDLY_C4,
    ));
    let lines: Vec<&str> = t.lines().skip(2).collect();
    let roots = j["roots"].as_array().unwrap();
    assert_eq!(lines.len(), roots.len());
    for (line, r) in lines.iter().zip(roots) {
        let parts: Vec<f64> = line.split(' ').map(|s| s.parse().unwrap()).collect();
        assert_eq!(parts[0], r["re"].as_f64().unwrap());
        assert_eq!(parts[1], r["im"].as_f64().unwrap());
    }
}

#[test]
fn spectrum_of_oddly_oriented_c4() {
    let out = skewperm(
        &[
            "spectrum",
            "--input-format",
            "orientation",
            "--output",
            "json",
        ],
        ODDLY_C4,
    );
    let v = json(&out);
    let re: Vec<f64> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["re"].as_f64().unwrap())
        .collect();
    let expected = [-2.0, 0.0, 0.0, 2.0];
    for (a, b) in re.iter().zip(expected) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn graph6_with_mask() {
    // mask 0 on C4 directs every edge low to high: 0->1, 0->3, 1->2, 2->3 (oddly oriented)
    let out = skewperm(
        &["permpoly", "--skew", "--mask", "0", "--output", "json"],
        "Cl\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json(&out)["coefficients"],
        serde_json::json!(["1", "0", "-4", "0", "0"])
    );
}

#[test]
fn classify_and_orient() {
    assert_eq!(
        text(&skewperm(&["classify", "even-cycle"], "Cl\n")),
        "true\n"
    );
    assert_eq!(text(&skewperm(&["classify", "forest"], "Bw\n")), "false\n");
    let bip = json(&skewperm(
        &["classify", "bipartite", "--output", "json"],
        "Cl\n",
    ));
    assert_eq!(bip["x"], serde_json::json!([0, 2]));
    let blocks = json(&skewperm(
        &["classify", "blocks", "--output", "json"],
        "Bw\n",
    ));
    assert_eq!(blocks["value"].as_array().unwrap().len(), 1);

    let out = skewperm(&["orient", "toward-y"], "Cl\n");
    assert_eq!(text(&out), "4 4\n0 1\n0 3\n2 1\n2 3\n");
    let out = skewperm(
        &[
            "orient",
            "reverse",
            "--edge",
            "1",
            "--input-format",
            "orientation",
        ],
        ODDLY_C4,
    );
    assert_eq!(text(&out), "4 4\n0 1\n3 0\n1 2\n2 3\n");
    let all = json(&skewperm(&["orient", "all", "--output", "json"], "Bw\n"));
    assert_eq!(all.as_array().unwrap().len(), 8);
}

#[test]
fn error_exit_codes() {
    assert_eq!(skewperm(&["frobnicate"], "").status.code(), Some(64));
    assert_eq!(skewperm(&["permpoly"], "Cl\n").status.code(), Some(64));
    assert_eq!(
        skewperm(&["verify", "bogus"], "Cl\n").status.code(),
        Some(64)
    );
    let out = skewperm(&["matchpoly"], "4 4\n0 1\n1 2\n2 3\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    assert_eq!(
        skewperm(&["permanent", "--skew-even"], "2\n1 1\n1 1\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(skewperm(&["matchpoly"], "D??x\n").status.code(), Some(2));
}

#[test]
fn identical_runs_give_identical_bytes() {
    let args = [
        "verify",
        "same-poly",
        "--output",
        "json",
        "--budget",
        "16",
        "--seed",
        "7",
    ];
    let a = skewperm(&args, "E~~w\n");
    let b = skewperm(&args, "E~~w\n");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 7);
}
