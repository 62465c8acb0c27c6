//! Bundled worked examples with their published ideals, minors and verdicts,
//! and the checker that compares a fresh computation against them.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::parse::{parse_binomial, parse_monomial};
use crate::algebra::{Binomial, ExponentVector, OrderKind, VariableNames};
use crate::input::InputSpec;
use crate::nash::{
    analyze, classify_ci, dim1_selector, nash_ideal, singular_locus, subset_report, OrbitSet,
    Outcome,
};
use crate::report::{prepare, PipelineError, Prepared};
use crate::toric::Family;

const BUNDLED: [(&str, &str); 3] = [
    (
        "twisted_cubic.json",
        include_str!("../fixtures/twisted_cubic.json"),
    ),
    (
        "two_orbits.json",
        include_str!("../fixtures/two_orbits.json"),
    ),
    ("one_orbit.json", include_str!("../fixtures/one_orbit.json")),
];

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}: {message}")]
    Parse { file: String, message: String },
    #[error("no fixtures found in {0}")]
    EmptyCorpus(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinorFixture {
    /// 1-based rows of the printed ideal.
    pub rows: Vec<usize>,
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocusFixture {
    pub rows: Vec<usize>,
    pub equals_sigma: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub generators: Vec<[i64; 2]>,
    /// One name per generator, in input order.
    pub names: Vec<String>,
    /// Printed generators of the ideal; minors and loci refer to these rows.
    pub ideal: Vec<String>,
    /// Exact reduced lex Gröbner basis, when one is printed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groebner_basis: Option<Vec<String>>,
    pub s_min: usize,
    pub complete_intersection: bool,
    pub sigma: OrbitSet,
    pub predicted: Outcome,
    pub observed: Outcome,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minors: Vec<MinorFixture>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub loci: Vec<LocusFixture>,
    /// A one-dimensional locus must yield a witness subset.
    #[serde(default)]
    pub witness: bool,
}

/// One expectation that the computation did not meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: String,
    pub mismatches: Vec<Mismatch>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for FixtureOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS {}", self.name);
        }
        write!(f, "FAIL {}", self.name)?;
        for m in &self.mismatches {
            write!(
                f,
                "\n  {}:\n    expected: {}\n    computed: {}",
                m.what, m.expected, m.computed
            )?;
        }
        Ok(())
    }
}

pub fn parse_fixture(file: &str, text: &str) -> Result<Fixture, FixtureError> {
    let fixture: Fixture = serde_json::from_str(text).map_err(|e| FixtureError::Parse {
        file: file.to_string(),
        message: e.to_string(),
    })?;
    let bad = |message: String| FixtureError::Parse {
        file: file.to_string(),
        message,
    };
    if fixture.names.len() != fixture.generators.len() {
        return Err(bad("names and generators differ in length".into()));
    }
    let rows = fixture.ideal.len();
    for sel in fixture
        .minors
        .iter()
        .map(|m| &m.rows)
        .chain(fixture.loci.iter().map(|l| &l.rows))
    {
        if sel.iter().any(|&r| r == 0 || r > rows) {
            return Err(bad(format!("row selection {sel:?} outside 1..={rows}")));
        }
    }
    Ok(fixture)
}

pub fn bundled() -> Vec<Fixture> {
    BUNDLED
        .iter()
        .map(|(file, text)| parse_fixture(file, text).expect("bundled fixtures parse"))
        .collect()
}

/// All `*.json` fixtures in `dir`, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>, FixtureError> {
    let io = |source| FixtureError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(FixtureError::EmptyCorpus(dir.display().to_string()));
    }
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|source| FixtureError::Io {
                path: p.display().to_string(),
                source,
            })?;
            parse_fixture(&p.display().to_string(), &text)
        })
        .collect()
}

fn orbit_text(o: &OrbitSet) -> String {
    format!("{o} (O1={}, O2={}, origin={})", o.o1, o.o2, o.origin)
}

impl Fixture {
    pub fn input(&self) -> InputSpec {
        InputSpec {
            generators: self.generators.clone(),
            order: Some(OrderKind::Lex),
            names: Some(self.names.clone()),
            family: None,
        }
    }

    pub fn prepare(&self) -> Result<Prepared, PipelineError> {
        prepare(&self.input(), OrderKind::Lex)
    }

    pub fn check(&self) -> FixtureOutcome {
        match self.prepare() {
            Ok(p) => self.check_against(&p),
            Err(e) => FixtureOutcome {
                name: self.name.clone(),
                mismatches: vec![Mismatch {
                    what: "pipeline".into(),
                    expected: "success".into(),
                    computed: e.to_string(),
                }],
            },
        }
    }

    fn rows(&self, names: &VariableNames, list: &[String]) -> Result<Vec<Binomial>, String> {
        list.iter()
            .map(|s| parse_binomial(s, names).map_err(|e| format!("{s:?}: {e}")))
            .collect()
    }

    /// Compares every recorded expectation with `prepared`, which may have been
    /// tampered with by the caller.
    pub fn check_against(&self, prepared: &Prepared) -> FixtureOutcome {
        let mut out = FixtureOutcome {
            name: self.name.clone(),
            mismatches: Vec::new(),
        };
        let mut miss = |what: &str, expected: String, computed: String| {
            out.mismatches.push(Mismatch {
                what: what.to_string(),
                expected,
                computed,
            })
        };
        if let Err(e) = self.check_inner(prepared, &mut miss) {
            miss("evaluation", "success".into(), e);
        }
        out
    }

    fn check_inner(
        &self,
        prepared: &Prepared,
        miss: &mut impl FnMut(&str, String, String),
    ) -> Result<(), String> {
        let Prepared { ideal, names, .. } = prepared;
        let render = |bs: &[Binomial]| {
            bs.iter()
                .map(|b| b.render(names))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let printed = self.rows(names, &self.ideal)?;

        if !ideal.equals_ideal_of(&printed) {
            miss("ideal", self.ideal.join(", "), render(ideal.minimal_gens()));
        }
        if let Some(gb) = &self.groebner_basis {
            let expected: BTreeSet<Binomial> = self
                .rows(names, gb)?
                .into_iter()
                .map(|b| b.oriented(ideal.order()))
                .collect();
            let computed: BTreeSet<Binomial> = ideal.gb().elements().iter().cloned().collect();
            if expected != computed {
                miss(
                    "reduced Groebner basis",
                    gb.join(", "),
                    render(ideal.gb().elements()),
                );
            }
        }
        if ideal.s_min() != self.s_min {
            miss(
                "minimal number of generators",
                self.s_min.to_string(),
                ideal.s_min().to_string(),
            );
        }
        let ci = classify_ci(ideal);
        if ci.is_complete_intersection != self.complete_intersection {
            miss(
                "complete intersection",
                self.complete_intersection.to_string(),
                ci.is_complete_intersection.to_string(),
            );
        }

        let sigma = singular_locus(ideal, &printed).map_err(|e| e.to_string())?;
        if sigma != self.sigma {
            miss(
                "singular locus",
                orbit_text(&self.sigma),
                orbit_text(&sigma),
            );
        }

        let verdict = analyze(ideal, Family::Minimal)
            .map_err(|e| e.to_string())?
            .verdict;
        if verdict.predicted != self.predicted || verdict.observed != self.observed {
            miss(
                "verdict",
                format!("predicted {}, observed {}", self.predicted, self.observed),
                format!(
                    "predicted {}, observed {}",
                    verdict.predicted, verdict.observed
                ),
            );
        }

        for m in &self.minors {
            let subset: Vec<Binomial> = m.rows.iter().map(|&r| printed[r - 1].clone()).collect();
            let reduce = |e: &ExponentVector| ideal.gb().reduce_monomial(e);
            let computed: BTreeSet<ExponentVector> = match nash_ideal(&subset, ideal) {
                Ok(entries) => entries.iter().map(|e| reduce(&e.monomial.exp)).collect(),
                Err(e) => {
                    miss(
                        &format!("minors of rows {:?}", m.rows),
                        m.monomials.join(", "),
                        e.to_string(),
                    );
                    continue;
                }
            };
            let expected: BTreeSet<ExponentVector> = m
                .monomials
                .iter()
                .map(|s| {
                    parse_monomial(s, names)
                        .map(|e| reduce(&e))
                        .map_err(|e| format!("{s:?}: {e}"))
                })
                .collect::<Result<_, _>>()?;
            if computed != expected {
                let show = |set: &BTreeSet<ExponentVector>| {
                    set.iter()
                        .map(|e| names.render_exponent(e))
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                miss(
                    &format!("minors of rows {:?}", m.rows),
                    show(&expected),
                    show(&computed),
                );
            }
        }

        for l in &self.loci {
            let idx: Vec<usize> = l.rows.iter().map(|r| r - 1).collect();
            let report = subset_report(ideal, &printed, &idx, &sigma).map_err(|e| e.to_string())?;
            if report.equals_sigma != l.equals_sigma {
                miss(
                    &format!("V(J) = Sigma for rows {:?}", l.rows),
                    l.equals_sigma.to_string(),
                    report.equals_sigma.to_string(),
                );
            }
        }

        if self.witness {
            match dim1_selector(ideal, &printed, &sigma) {
                Ok(r) if r.equals_sigma => {}
                Ok(r) => miss(
                    "witness",
                    "a subset with V(J) = Sigma".into(),
                    format!("rows {:?}", r.subset),
                ),
                Err(e) => miss(
                    "witness",
                    "a subset with V(J) = Sigma".into(),
                    e.to_string(),
                ),
            }
        }
        Ok(())
    }
}

/// Checks every fixture; the outcomes are in input order.
pub fn check_all(fixtures: &[Fixture]) -> Vec<FixtureOutcome> {
    fixtures.iter().map(Fixture::check).collect()
}
