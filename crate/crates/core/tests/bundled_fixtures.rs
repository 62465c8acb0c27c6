use toric_nash::fixtures::{bundled, check_all, load_dir, parse_fixture, FixtureError};
use toric_nash::report::Prepared;

#[test]
fn every_bundled_fixture_passes() {
    let outcomes = check_all(&bundled());
    assert_eq!(outcomes.len(), 3);
    for o in &outcomes {
        assert!(o.passed(), "{o}");
    }
}

#[test]
fn dropping_a_basis_element_is_detected() {
    for fixture in bundled() {
        let p = fixture.prepare().unwrap();
        let corrupted = Prepared {
            ideal: p.ideal.with_corrupted_gb(p.ideal.gb().without_element(0)),
            semigroup: p.semigroup.clone(),
            names: p.names.clone(),
        };
        let outcome = fixture.check_against(&corrupted);
        assert!(
            !outcome.passed(),
            "{} survived a corrupted basis",
            fixture.name
        );
        assert!(outcome.to_string().contains("expected:"));
    }
}

#[test]
fn wrong_expectation_reports_a_diff() {
    let mut fixture = bundled().remove(0);
    fixture.s_min = 2;
    let outcome = fixture.check();
    assert_eq!(outcome.mismatches.len(), 1);
    assert_eq!(outcome.mismatches[0].what, "minimal number of generators");
}

#[test]
fn empty_directory_is_an_error() {
    let dir = std::env::temp_dir().join(format!("toric-nash-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    assert!(matches!(load_dir(&dir), Err(FixtureError::EmptyCorpus(_))));
    std::fs::remove_dir(&dir).unwrap();
}

#[test]
fn out_of_range_rows_are_rejected() {
    let text = r#"{"name":"bad","generators":[[1,0],[1,1],[1,2]],"names":["a","b","c"],
        "ideal":["a*c - b^2"],"s_min":1,"complete_intersection":true,
        "sigma":{"O1":false,"O2":false,"origin":true},"predicted":"out_of_scope","observed":"always_equal",
        "loci":[{"rows":[2],"equals_sigma":true}]}"#;
    assert!(matches!(
        parse_fixture("bad.json", text),
        Err(FixtureError::Parse { .. })
    ));
}
