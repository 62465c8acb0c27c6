use std::collections::BTreeSet;

use toric_nash::algebra::parse::{parse_binomial, parse_monomial};
use toric_nash::algebra::{Binomial, ExponentVector, VariableNames};
use toric_nash::nash::{
    analyze, dim1_selector, nash_ideal, singular_locus, subset_report, OrbitSet, Outcome,
};
use toric_nash::semigroup::{validate, GeneratorSet};
use toric_nash::toric::{toric_ideal_lex, Family, ToricIdeal};

fn ideal_of(pairs: &[(i64, i64)]) -> ToricIdeal {
    toric_ideal_lex(&validate(&GeneratorSet::from_pairs(pairs).unwrap()).unwrap()).unwrap()
}

fn names(list: &[&str]) -> VariableNames {
    VariableNames::custom(list.iter().map(|s| s.to_string()).collect())
}

fn reduced_set(
    ideal: &ToricIdeal,
    exps: impl IntoIterator<Item = ExponentVector>,
) -> BTreeSet<ExponentVector> {
    exps.into_iter()
        .map(|e| ideal.gb().reduce_monomial(&e))
        .collect()
}

fn minor_set(ideal: &ToricIdeal, rows: &[Binomial]) -> BTreeSet<ExponentVector> {
    let minors = nash_ideal(rows, ideal).unwrap();
    reduced_set(ideal, minors.into_iter().map(|m| m.monomial.exp))
}

#[test]
fn twisted_cubic_minor_sets() {
    let ideal = ideal_of(&[(1, 0), (1, 1), (1, 2), (1, 3)]);
    let nm = VariableNames::indexed(4);
    let rows: Vec<Binomial> = ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]
        .iter()
        .map(|s| parse_binomial(s, &nm).unwrap())
        .collect();
    let expected = [
        ((0, 1), vec!["x1^2", "x1*x2", "x1*x3", "x1*x4", "x2*x4"]),
        ((0, 2), vec!["x1*x2", "x1*x3", "x1*x4", "x2*x4", "x3*x4"]),
        ((1, 2), vec!["x1*x3", "x1*x4", "x2*x4", "x3*x4", "x4^2"]),
    ];
    for ((a, b), printed) in expected {
        let got = minor_set(&ideal, &[rows[a].clone(), rows[b].clone()]);
        let want = reduced_set(
            &ideal,
            printed.iter().map(|s| parse_monomial(s, &nm).unwrap()),
        );
        assert_eq!(got, want, "rows {{{},{}}}", a + 1, b + 1);
    }
    let analysis = analyze(&ideal, Family::Minimal).unwrap();
    assert_eq!(analysis.sigma, OrbitSet::ORIGIN);
    assert_eq!(analysis.verdict.predicted, Outcome::NeverEqual);
    assert_eq!(analysis.verdict.observed, Outcome::NeverEqual);
    assert!(analysis.verdict.consistent);
}

#[test]
fn two_orbit_surface_is_always_equal() {
    let ideal = ideal_of(&[(2, 0), (3, 0), (2, 6), (0, 4), (0, 5)]);
    let analysis = analyze(&ideal, Family::Minimal).unwrap();
    assert_eq!(
        analysis.sigma,
        OrbitSet {
            o1: true,
            o2: true,
            origin: true
        }
    );
    assert!(!analysis.ci.is_complete_intersection);
    assert_eq!(analysis.verdict.observed, Outcome::AlwaysEqual);
    assert!(analysis.verdict.consistent);
}

#[test]
fn one_orbit_surface_has_a_witness() {
    let ideal = ideal_of(&[(2, 0), (1, 2), (0, 3), (0, 5)]);
    let nm = names(&["x", "y", "z", "w"]);
    let printed: Vec<Binomial> = [
        "z^5 - w^3",
        "x*w^2 - y^2*z^2",
        "x*z^3 - y^2*w",
        "x^2*z*w - y^4",
    ]
    .iter()
    .map(|s| parse_binomial(s, &nm).unwrap())
    .collect();
    let sigma = singular_locus(&ideal, &printed).unwrap();
    assert_eq!(
        sigma,
        OrbitSet {
            o1: false,
            o2: true,
            origin: true
        }
    );
    let report = subset_report(&ideal, &printed, &[0, 1], &sigma).unwrap();
    assert!(report.equals_sigma);
    assert!(
        dim1_selector(&ideal, &printed, &sigma)
            .unwrap()
            .equals_sigma
    );
    let analysis = analyze(&ideal, Family::Minimal).unwrap();
    assert_eq!(analysis.verdict.predicted, Outcome::ExistsEqual);
    assert!(analysis.verdict.consistent, "{:?}", analysis.verdict);
}
