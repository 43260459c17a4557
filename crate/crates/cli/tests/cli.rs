use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gramclass::exactmat::IntMatrix;
use gramclass::io::{parse_input, parse_matrix_text};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gramclass"))
        .args(args)
        .env_remove("GRAMCLASS_SEED")
        .output()
        .expect("binary runs")
}

fn fx(name: &str) -> String {
    fixture(name).to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn matrix(name: &str) -> IntMatrix {
    parse_matrix_text(&fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

#[test]
fn classify_reports_cycle_type_and_degeneracy() {
    let o = run(&["classify", &fx("q1.json")]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("\"cycle_type\": [3]"), "{out}");
    assert!(out.contains("\"degeneracy\": 1"), "{out}");
    // The same form given as a form file or as a bare matrix.
    for args in [
        vec!["classify", &fx("q1_form.json")],
        vec!["classify", "--matrix-file", &fx("g1.txt")],
    ] {
        let o = run(&args.iter().map(|s| s.as_ref()).collect::<Vec<&str>>());
        assert!(stdout(&o).contains("\"cycle_type\": [3]"));
    }
}

#[test]
fn count_matches_small_case() {
    let o = run(&["count", "--n", "4", "--c", "2"]);
    assert!(stdout(&o).contains("\"count\": 2"));
    let o = run(&["count", "--n", "4", "--c", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_example_matrices() {
    let o = run(&[
        "verify",
        "--B",
        &fx("b1.txt"),
        &fx("q1.json"),
        &fx("q1_std.json"),
    ]);
    assert!(stdout(&o).contains("\"strong\": true"));
    let o = run(&[
        "verify",
        "--B",
        &fx("b1_prime.txt"),
        &fx("q1.json"),
        &fx("q1_std.json"),
    ]);
    let out = stdout(&o);
    assert!(out.contains("\"weak\": true") && out.contains("\"strong\": false"));
    assert!(out.contains("\"unimodular\": false"));
    let o = run(&[
        "verify",
        "--B",
        &fx("b0c.txt"),
        &fx("q0.json"),
        &fx("q0_std.json"),
    ]);
    assert!(stdout(&o).contains("\"strong\": true"));
}

#[test]
fn batch_keeps_file_order() {
    let o = run(&["verify", "--batch", &fx("batch")]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1].contains("01_b1.json") && lines[1].contains("\"strong\":true"));
    assert!(lines[2].contains("02_b1_prime.json") && lines[2].contains("\"strong\":false"));
    assert!(lines[3].contains("03_b0c.json") && lines[3].contains("\"strong\":true"));
}

#[test]
fn batch_reports_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(fixture("batch/01_b1.json"), dir.path().join("a.json")).unwrap();
    fs::write(dir.path().join("b.json"), "{\"B\": [[1]]}").unwrap();
    let o = run(&["verify", "--batch", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(
        out.contains("\"strong\":true") && out.contains("missing \\\"source\\\""),
        "{out}"
    );
}

#[test]
fn congruence_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.txt");
    let o = run(&[
        "congruence",
        &fx("q1.json"),
        "--emit-matrix",
        b.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("\"verified\": true") && out.contains("\"target_partition\": [3]"));
    let o = run(&[
        "verify",
        "--B",
        b.to_str().unwrap(),
        &fx("q1.json"),
        &fx("q1_std.json"),
    ]);
    assert!(stdout(&o).contains("\"strong\": true"));
}

#[test]
fn congruence_between_files() {
    let o = run(&[
        "congruence",
        &fx("q1_form.json"),
        "--target",
        &fx("q1_std.json"),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("\"verified\": true"));
    let o = run(&["congruence", &fx("q1.json"), "--target", &fx("q0.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Coxeter polynomials"));
}

#[test]
fn flip_and_invert() {
    let o = run(&["flip", &fx("q0_form.json")]);
    assert!(o.status.success());
    let o = run(&["invert", &fx("q1.json")]);
    assert_eq!(
        stdout(&o),
        "{\n  \"vertices\": 3,\n  \"arrows\": [[3,1],[2,1],[3,1],[2,1]]\n}\n"
    );
    let o = run(&["invert", &fx("q1_form.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn standard_and_realize_round_trip() {
    let o = run(&["standard", "--partition", "3", "--deg", "1"]);
    let std = stdout(&o);
    assert_eq!(
        parse_input(&std).unwrap(),
        parse_input(&fs::read_to_string(fixture("q1_std.json")).unwrap()).unwrap()
    );
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("s.json");
    fs::write(&f, &std).unwrap();
    let o = run(&["realize", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), std);
    let o = run(&["standard", "--partition", "2,1", "--deg", "1", "--star"]);
    assert!(
        stdout(&o).contains("[[1,2],[1,3],[1,2],[1,2],[1,2]]"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn random_is_deterministic() {
    let a = run(&["random", "--m", "5", "--n", "7", "--seed", "11"]);
    let b = run(&["random", "--m", "5", "--n", "7", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_gramclass"))
        .args(["random", "--m", "5", "--n", "7"])
        .env("GRAMCLASS_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(
        run(&["random", "--m", "5", "--n", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn text_output() {
    let o = run(&[
        "--text",
        "verify",
        "--B",
        &fx("b1.txt"),
        &fx("q1.json"),
        &fx("q1_std.json"),
    ]);
    assert_eq!(
        stdout(&o),
        "weak: true\nstrong: true\nunimodular: true\nshortcut: -\n"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["classify", "--nope", &fx("q1.json")]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["classify"]).status.code(), Some(64));
    assert_eq!(
        run(&["classify", &fx("q1.json"), "--matrix-file", &fx("g1.txt")])
            .status
            .code(),
        Some(64)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"n\": 2, \"upper\": [[2, 0], [0, 1]]}").unwrap();
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invariant"), "{}", stderr(&o));
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "2 2\n1 0\n0 z\n").unwrap();
    let o = run(&["realize", "--matrix-file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 3"), "{}", stderr(&o));
    let d4 = dir.path().join("d4.json");
    fs::write(
        &d4,
        "{\"n\":4,\"upper\":[[1,-1,-1,-1],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}",
    )
    .unwrap();
    assert_eq!(
        run(&["classify", d4.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

/// The shipped example matrices are consistent with one another.
#[test]
fn fixture_matrices_agree() {
    assert_eq!(
        &matrix("b1_prime.txt") + &matrix("m1.txt"),
        matrix("b1.txt")
    );
    assert_eq!(
        &matrix("b0_prime.txt") * &matrix("c0.txt"),
        matrix("b0c.txt")
    );
    assert!((&matrix("b0_vec.txt") * &matrix("b0_vec_inv.txt")).is_identity());
    let load = |n: &str| parse_input(&fs::read_to_string(fixture(n)).unwrap()).unwrap();
    let q1 = load("q1.json");
    assert_eq!(q1.form(), load("q1_form.json").form());
    assert_eq!(*q1.form().upper(), matrix("g1.txt"));
    assert_eq!(load("q0.json").form(), load("q0_form.json").form());
    for (q, k) in [
        ("q1.json", "k1.txt"),
        ("q0.json", "k0.txt"),
        ("q1_std.json", "k1_std.txt"),
        ("q0_std.json", "k0_std.txt"),
    ] {
        assert!((&load(q).form().symmetric() * &matrix(k)).is_zero(), "{k}");
    }
}
