//! End-to-end contract tests for the binary: output shapes, exit codes,
//! and round trips through the document formats.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use anosov_core::doc::{from_json_str, to_canonical_json, AlgebraDocument, MatrixDocument};
use anosov_core::exact::RationalMatrix;

fn anosov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anosov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf8 stderr")
}

fn code_of(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf8 path")
}

#[test]
fn catalog_export_then_inspect_prints_the_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let f3 = dir.path().join("f3.json");
    let out = anosov(&["catalog", "f3", "--out", path_str(&f3)]);
    assert_eq!(code_of(&out), 0, "stderr: {}", stderr_of(&out));

    let out = anosov(&["inspect", path_str(&f3)]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("dim 6"), "got: {text}");
    assert!(text.contains("type (3,3), m=0"), "got: {text}");
    assert!(text.contains("series 6 > 3 > 0"), "got: {text}");
    assert!(text.contains("center 3"), "got: {text}");

    let ab = dir.path().join("ab4.json");
    let out = anosov(&["catalog", "abelian(4)", "--out", path_str(&ab)]);
    assert_eq!(code_of(&out), 0);
    let out = anosov(&["inspect", path_str(&ab)]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("dim 4"), "got: {text}");
    assert!(text.contains("type (4), m=4"), "got: {text}");
}

#[test]
fn catalog_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["h3", "n_2", "h_3", "l_5", "g", "h3+h3+abelian(2)"] {
        let file = dir.path().join("alg.json");
        let out = anosov(&["catalog", name, "--out", path_str(&file)]);
        assert_eq!(code_of(&out), 0, "catalog {name}");
        let bytes = fs::read_to_string(&file).unwrap();
        assert_eq!(bytes, stdout_of(&out), "--out matches stdout for {name}");
        let doc: AlgebraDocument = from_json_str(&bytes).unwrap();
        let rebuilt = AlgebraDocument::from_algebra(&doc.to_algebra().unwrap());
        assert_eq!(to_canonical_json(&rebuilt), bytes, "round trip for {name}");
    }
}

#[test]
fn corrupted_documents_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();

    // [e1, e2] = e3 together with [e1, e3] = e1 violates the Jacobi
    // identity, so validation must reject the document.
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"schema":"anosov-lab/1","dim":3,"names":["e1","e2","e3"],
           "brackets":[{"i":1,"j":2,"terms":[{"k":3,"coeff":"1"}]},
                       {"i":1,"j":3,"terms":[{"k":1,"coeff":"1"}]}]}"#,
    )
    .unwrap();
    let out = anosov(&["inspect", path_str(&bad)]);
    assert_eq!(code_of(&out), 2);
    assert!(!stderr_of(&out).is_empty());

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "not json").unwrap();
    let out = anosov(&["pfaffian", path_str(&garbage)]);
    assert_eq!(code_of(&out), 2);

    let missing = dir.path().join("missing.json");
    let out = anosov(&["inspect", path_str(&missing)]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn verify_distinguishes_pass_fail_and_input_errors() {
    let dir = tempfile::tempdir().unwrap();

    let cons = dir.path().join("hk2.json");
    let out = anosov(&["construct", "hk", "--k", "2", "--out", path_str(&cons)]);
    assert_eq!(code_of(&out), 0, "stderr: {}", stderr_of(&out));
    let out = anosov(&["verify", path_str(&cons)]);
    assert_eq!(code_of(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("\"verdict\": \"PASS\""));

    let f3 = dir.path().join("f3.json");
    anosov(&["catalog", "f3", "--out", path_str(&f3)]);
    let id6 = dir.path().join("id6.json");
    fs::write(
        &id6,
        to_canonical_json(&MatrixDocument::from_matrix(&RationalMatrix::identity(6))),
    )
    .unwrap();
    let out = anosov(&["verify", path_str(&f3), "--matrix", path_str(&id6)]);
    assert_eq!(code_of(&out), 1, "identity map is a verified negative");
    let text = stdout_of(&out);
    assert!(text.contains("\"verdict\": \"FAIL\""), "got: {text}");
    assert!(text.contains("hyperbolic"), "got: {text}");

    let id8 = dir.path().join("id8.json");
    fs::write(
        &id8,
        to_canonical_json(&MatrixDocument::from_matrix(&RationalMatrix::identity(8))),
    )
    .unwrap();
    let out = anosov(&["verify", path_str(&f3), "--matrix", path_str(&id8)]);
    assert_eq!(code_of(&out), 2, "dimension mismatch is an input error");
}

#[test]
fn pell_prints_the_fundamental_solution_verbatim() {
    let out = anosov(&["pell", "2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "{\"a\":3,\"b\":2}\n");

    let out = anosov(&["pell", "61"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "{\"a\":1766319049,\"b\":226153980}\n");

    let out = anosov(&["pell", "4"]);
    assert_eq!(code_of(&out), 2, "square parameter is an input error");
}

#[test]
fn dual_of_the_heisenberg_sum_matches_the_quaternionic_entry() {
    let dir = tempfile::tempdir().unwrap();
    let sum = dir.path().join("h3h3.json");
    anosov(&["catalog", "h3+h3", "--out", path_str(&sum)]);
    let dual = dir.path().join("dual.json");
    let out = anosov(&["dual", path_str(&sum), "--out", path_str(&dual)]);
    assert_eq!(code_of(&out), 0, "stderr: {}", stderr_of(&out));

    let doc: AlgebraDocument = from_json_str(&fs::read_to_string(&dual).unwrap()).unwrap();
    let expected = anosov_core::construct::catalog("h").unwrap();
    assert_eq!(doc.to_algebra().unwrap(), expected);
}

#[test]
fn gate_labels_types_and_flags_the_unclassified_admissible_ones() {
    let out = anosov(&["gate", "3,3,2"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("\"admissible\": true"), "got: {text}");
    assert!(text.contains("outside the mechanized scope"), "got: {text}");

    let out = anosov(&["gate", "4,4"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("\"admissible\": true"));
    assert!(text.contains("\"note\": null"), "classified type needs no note: {text}");

    let out = anosov(&["gate", "2,1"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("\"admissible\": false"));

    let out = anosov(&["gate", "x,y"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn construct_validates_family_parameters() {
    let out = anosov(&["construct", "nk"]);
    assert_eq!(code_of(&out), 2, "missing --k");

    let out = anosov(&["construct", "nk", "--k", "12"]);
    assert_eq!(code_of(&out), 2, "12 is not square-free");

    let out = anosov(&["construct", "vortex"]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("unknown family"));

    let out = anosov(&["construct", "lk", "--k", "1"]);
    assert_eq!(code_of(&out), 1, "degenerate case is a verified negative");
    assert!(stdout_of(&out).contains("NOT-ANOSOV"));

    let out = anosov(&["construct", "h1-base"]);
    assert_eq!(code_of(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("\"name\": \"h1-base\""));
}

#[test]
fn graded_family_builds_doubles_from_a_base_and_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.json");
    fs::write(
        &b,
        to_canonical_json(&MatrixDocument::from_matrix(&RationalMatrix::from_int_rows(
            &[vec![2, 1], vec![1, 1]],
        ))),
    )
    .unwrap();
    let cons = dir.path().join("cons.json");
    let out = anosov(&[
        "construct",
        "graded",
        "h3",
        "--matrix",
        path_str(&b),
        "--out",
        path_str(&cons),
    ]);
    assert_eq!(code_of(&out), 0, "stderr: {}", stderr_of(&out));
    let out = anosov(&["verify", path_str(&cons)]);
    assert_eq!(code_of(&out), 0, "doubled Heisenberg certifies");
    assert!(stdout_of(&out).contains("\"verdict\": \"PASS\""));
}

#[test]
fn report_is_reproducible_and_certified() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let first = anosov(&["report", "--json", "--out", path_str(&file)]);
    assert_eq!(code_of(&first), 0, "stderr: {}", stderr_of(&first));
    assert_eq!(
        fs::read_to_string(&file).unwrap(),
        stdout_of(&first),
        "--out matches stdout"
    );
    let second = anosov(&["report", "--json"]);
    assert_eq!(code_of(&second), 0);
    assert_eq!(stdout_of(&first), stdout_of(&second), "byte identical reruns");

    let table = anosov(&["report"]);
    assert_eq!(code_of(&table), 0);
    assert!(stdout_of(&table).contains("all verdicts agree"));
}

#[test]
fn help_and_usage_errors_are_distinguished() {
    let out = anosov(&["--help"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("anosov"));

    let out = anosov(&["no-such-command"]);
    assert_eq!(code_of(&out), 2);
}
