use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_toric-nash");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn validate_prints_block_structure() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "a.json",
        r#"{"generators": [[1,0],[1,1],[1,2],[1,3]]}"#,
    );
    let o = run(&["validate", "--input", &input]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("l=1 m=2 n=1 N=4 r=2\n"));
}

#[test]
fn validation_failures_exit_with_two_and_name_the_condition() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            r#"{"generators": [[1,0],[2,0],[0,1]]}"#,
            "NotMinimal: generator (2,0)",
        ),
        (r#"{"generators": [[1,0]]}"#, "ConeNotTwoDimensional"),
    ];
    for (i, (text, needle)) in cases.iter().enumerate() {
        let input = write(dir.path(), &format!("{i}.json"), text);
        let o = run(&["validate", "--input", &input]);
        assert_eq!(o.status.code(), Some(2), "{text}");
        assert!(stderr(&o).contains(needle), "{}", stderr(&o));
    }
}

#[test]
fn malformed_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    for (i, text) in [
        r#"{"generators": [[1.5,0],[0,1],[1,1]]}"#,
        r#"{"generators": [[1,0],[0,1],[1,1]], "colour": 3}"#,
        r#"{"generators": [[1,0],[0,1],[1,1]], "names": ["a","b"]}"#,
        r#"{"generators": [[1,0],[0,1],[1,1]], "order": "grevlex"}"#,
        "not json",
    ]
    .iter()
    .enumerate()
    {
        let input = write(dir.path(), &format!("{i}.json"), text);
        let o = run(&["analyze", "--input", &input]);
        assert_eq!(o.status.code(), Some(1), "{text}: {}", stderr(&o));
    }
    assert_eq!(
        run(&["validate", "--input", "/nonexistent/input.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["analyze", "--jobs", "many", "--input", "x"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn analyze_reports_the_three_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            "[[1,0],[1,1],[1,2],[1,3]]",
            "never_equal",
            "never_equal",
            None,
        ),
        (
            "[[2,0],[3,0],[2,6],[0,4],[0,5]]",
            "always_equal",
            "always_equal",
            None,
        ),
        (
            "[[2,0],[1,2],[0,3],[0,5]]",
            "exists_equal",
            "exists_equal",
            Some(2),
        ),
    ];
    for (i, (gens, predicted, observed, witness_len)) in cases.iter().enumerate() {
        let input = write(
            dir.path(),
            &format!("{i}.json"),
            &format!(r#"{{"generators": {gens}}}"#),
        );
        let out = dir.path().join(format!("{i}.out.json"));
        let o = run(&["analyze", "--input", &input, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains(&format!(
            "verdict: predicted {predicted}, observed {observed}"
        )));
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["verdict"]["predicted"], *predicted);
        assert_eq!(v["verdict"]["observed"], *observed);
        assert_eq!(v["verdict"]["consistent"], true);
        assert_eq!(
            v["verdict"]["witness"].as_array().map(Vec::len),
            *witness_len
        );
        assert!(v["sigma"]["O1"].is_boolean() && v["sigma"]["O2"].is_boolean());
    }
}

#[test]
fn twisted_cubic_report_lists_three_subsets() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "a.json",
        r#"{"generators": [[1,0],[1,1],[1,2],[1,3]], "names": ["x1","x2","x3","x4"]}"#,
    );
    let out = dir.path().join("a.out.json");
    let o = run(&["analyze", "--input", &input, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["subsets"].as_array().unwrap().len(), 3);
    assert_eq!(v["semigroup"]["N"], 4);
    assert_eq!(v["ideal"]["s_min"], 3);
    let minor = &v["subsets"][0]["minors"][0];
    assert!(minor["det_rk"].is_i64());
    assert!(minor["exponent"].is_array() && minor["monomial"].is_string());
    assert!(stdout(&o).contains("x1*x3 - x2^2"));
}

#[test]
fn structured_output_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "b.json",
        r#"{"generators": [[2,0],[3,0],[2,6],[0,4],[0,5]], "family": "groebner"}"#,
    );
    let mut outputs = Vec::new();
    for jobs in ["1", "4", "4"] {
        let out = dir.path().join(format!("out{}.json", outputs.len()));
        let o = run(&[
            "analyze",
            "--jobs",
            jobs,
            "--input",
            &input,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        outputs.push((std::fs::read(&out).unwrap(), o.stdout));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn order_and_family_flags_do_not_change_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "c.json",
        r#"{"generators": [[2,0],[1,2],[0,3],[0,5]]}"#,
    );
    for (order, family) in [
        ("lex", "minimal"),
        ("degrevlex", "minimal"),
        ("lex", "groebner"),
        ("degrevlex", "groebner"),
    ] {
        let o = run(&[
            "analyze", "--input", &input, "--order", order, "--family", family,
        ]);
        assert_eq!(o.status.code(), Some(0), "{order} {family}: {}", stderr(&o));
        assert!(stdout(&o).contains("singular locus: closure(O2)"));
        assert!(stdout(&o).contains("verdict: predicted exists_equal"));
    }
}

#[test]
fn examples_pass_and_detect_corruption() {
    let o = run(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3/3 fixtures pass"));

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(
        run(&["examples", "--examples", empty.path().to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );

    let corpus = tempfile::tempdir().unwrap();
    write(
        corpus.path(),
        "wrong.json",
        r#"{"name": "wrong", "generators": [[1,0],[1,1],[1,2],[1,3]], "names": ["a","b","c","d"],
            "ideal": ["a*c - b^2", "a*d - b*c"], "s_min": 3, "complete_intersection": false,
            "sigma": {"O1": false, "O2": false, "origin": true},
            "predicted": "never_equal", "observed": "never_equal"}"#,
    );
    let o = run(&["examples", "--examples", corpus.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(
        text.contains("FAIL wrong") && text.contains("expected:") && text.contains("computed:")
    );
    assert!(text.contains("0/1 fixtures pass"));
}
