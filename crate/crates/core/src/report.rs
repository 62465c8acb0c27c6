//! The full pipeline for one input and the report it produces.
//!
//! Human-readable text ([`std::fmt::Display`]) and JSON are both rendered from
//! the same [`RunReport`] value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{Binomial, OrderKind, TermOrder, VariableNames};
use crate::input::InputSpec;
use crate::nash::{analyze, Analysis, CiClass, NashError, OrbitSet, Outcome};
use crate::semigroup::{validate, SemigroupError, ValidatedSemigroup};
use crate::toric::{toric_ideal, Family, ToricError, ToricIdeal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("{}: {}", .0.condition(), .0)]
    Validation(#[from] SemigroupError),
    #[error(transparent)]
    Toric(#[from] ToricError),
    #[error(transparent)]
    Nash(#[from] NashError),
}

fn integer<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match value.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&value.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupSummary {
    pub l: usize,
    pub m: usize,
    pub n: usize,
    #[serde(rename = "N")]
    pub nvars: usize,
    pub r: usize,
    /// Generators in canonical order.
    pub generators: Vec<[i64; 2]>,
    /// For each canonical position, the 1-based position in the input.
    pub canonical_order: Vec<usize>,
    pub names: Vec<String>,
    pub rays: [[i64; 2]; 2],
}

impl SemigroupSummary {
    pub fn new(vs: &ValidatedSemigroup, names: &VariableNames) -> Self {
        let (a, b) = vs.rays();
        Self {
            l: vs.l(),
            m: vs.m(),
            n: vs.n(),
            nvars: vs.nvars(),
            r: vs.codim(),
            generators: vs.generators().iter().map(|g| [g.u, g.v]).collect(),
            canonical_order: vs.permutation().iter().map(|i| i + 1).collect(),
            names: names.as_slice().to_vec(),
            rays: [[a.u, a.v], [b.u, b.v]],
        }
    }
}

impl fmt::Display for SemigroupSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "l={} m={} n={} N={} r={}",
            self.l, self.m, self.n, self.nvars, self.r
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialSummary {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
    pub text: String,
}

impl BinomialSummary {
    fn new(b: &Binomial, names: &VariableNames) -> Self {
        Self {
            plus: b.plus().as_slice().to_vec(),
            minus: b.minus().as_slice().to_vec(),
            text: b.render(names),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub order: OrderKind,
    pub s_min: usize,
    pub minimal_generators: Vec<BinomialSummary>,
    pub groebner_basis: Vec<BinomialSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorSummary {
    /// The two deleted columns, 1-based.
    pub excluded: [usize; 2],
    #[serde(serialize_with = "integer")]
    pub det_rk: BigInt,
    pub exponent: Vec<u32>,
    pub monomial: String,
    pub fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetSummary {
    /// 1-based positions in the relation family.
    pub rows: Vec<usize>,
    pub rank_ok: bool,
    pub minors: Vec<MinorSummary>,
    pub zero_locus: Option<OrbitSet>,
    pub equals_sigma: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictSummary {
    pub predicted: Outcome,
    pub observed: Outcome,
    pub witness: Option<Vec<usize>>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub semigroup: SemigroupSummary,
    pub ideal: IdealSummary,
    pub family: Family,
    pub sigma: OrbitSet,
    pub ci: CiClass,
    pub subsets: Vec<SubsetSummary>,
    pub verdict: VerdictSummary,
    pub warnings: Vec<String>,
}

/// Validated semigroup, its ideal and the names to print it with.
pub struct Prepared {
    pub semigroup: ValidatedSemigroup,
    pub ideal: ToricIdeal,
    pub names: VariableNames,
}

pub fn prepare(spec: &InputSpec, order: OrderKind) -> Result<Prepared, PipelineError> {
    let gens = spec.generator_set()?;
    let vs = validate(&gens)?;
    let names = spec.variable_names(&vs);
    let ideal = toric_ideal(&vs, &TermOrder::of_kind(order, vs.nvars()))?;
    Ok(Prepared {
        semigroup: vs,
        ideal,
        names,
    })
}

/// Runs every stage for `spec`, with the order and family overridden when given.
pub fn run(
    spec: &InputSpec,
    order: Option<OrderKind>,
    family: Option<Family>,
) -> Result<RunReport, PipelineError> {
    let order = order.unwrap_or_else(|| spec.order());
    let family = family.unwrap_or_else(|| spec.family());
    let prepared = prepare(spec, order)?;
    let analysis = analyze(&prepared.ideal, family)?;
    Ok(RunReport::new(&prepared, &analysis))
}

impl RunReport {
    pub fn new(prepared: &Prepared, analysis: &Analysis) -> Self {
        let Prepared {
            semigroup,
            ideal,
            names,
        } = prepared;
        let render_all =
            |bs: &[Binomial]| bs.iter().map(|b| BinomialSummary::new(b, names)).collect();
        let subsets: Vec<SubsetSummary> = analysis
            .reports
            .iter()
            .map(|r| SubsetSummary {
                rows: r.subset.iter().map(|i| i + 1).collect(),
                rank_ok: r.rank_ok,
                minors: r
                    .minors
                    .iter()
                    .map(|m| {
                        let (a, b) = m.selection.columns();
                        MinorSummary {
                            excluded: [a + 1, b + 1],
                            det_rk: m.det_rk.clone(),
                            exponent: m.monomial.exp.as_slice().to_vec(),
                            monomial: m.monomial.render(names),
                            fallback: m.fallback,
                        }
                    })
                    .collect(),
                zero_locus: r.zero_locus,
                equals_sigma: r.equals_sigma,
            })
            .collect();
        let mut warnings = Vec::new();
        if !analysis.sigma.origin {
            warnings.push(
                "the origin is not singular, so the input lies outside the theorem's hypotheses"
                    .to_string(),
            );
        }
        let fallbacks: usize = analysis.reports.iter().map(|r| r.fallbacks()).sum();
        if fallbacks > 0 {
            warnings.push(format!(
                "{fallbacks} minors were computed by symbolic determinant"
            ));
        }
        let v = &analysis.verdict;
        Self {
            semigroup: SemigroupSummary::new(semigroup, names),
            ideal: IdealSummary {
                order: ideal.order().kind(),
                s_min: ideal.s_min(),
                minimal_generators: render_all(ideal.minimal_gens()),
                groebner_basis: render_all(ideal.gb().elements()),
            },
            family: analysis.family,
            sigma: analysis.sigma,
            ci: analysis.ci,
            subsets,
            verdict: VerdictSummary {
                predicted: v.predicted,
                observed: v.observed,
                witness: v
                    .witness
                    .as_ref()
                    .map(|w| w.iter().map(|i| i + 1).collect()),
                consistent: v.consistent,
                notes: v.notes.clone(),
            },
            warnings,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set(rows: &[usize]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sg = &self.semigroup;
        writeln!(f, "semigroup: {sg}")?;
        let gens: Vec<String> = sg
            .generators
            .iter()
            .zip(&sg.names)
            .map(|(g, name)| format!("{name}=({},{})", g[0], g[1]))
            .collect();
        writeln!(f, "generators: {}", gens.join(" "))?;
        writeln!(
            f,
            "ideal ({}, {} minimal generators):",
            self.ideal.order.as_str(),
            self.ideal.s_min
        )?;
        for b in &self.ideal.minimal_generators {
            writeln!(f, "  {}", b.text)?;
        }
        writeln!(
            f,
            "reduced Groebner basis ({} elements):",
            self.ideal.groebner_basis.len()
        )?;
        for b in &self.ideal.groebner_basis {
            writeln!(f, "  {}", b.text)?;
        }
        writeln!(f, "singular locus: {}", self.sigma)?;
        writeln!(
            f,
            "hypersurface: {}, complete intersection: {}",
            yes_no(self.ci.is_hypersurface),
            yes_no(self.ci.is_complete_intersection)
        )?;
        writeln!(
            f,
            "subsets of the {} family: {}",
            self.family.as_str(),
            self.subsets.len()
        )?;
        for s in &self.subsets {
            match s.zero_locus {
                None => writeln!(f, "  {}: rank deficient", set(&s.rows))?,
                Some(locus) => {
                    let minors: Vec<&str> = s.minors.iter().map(|m| m.monomial.as_str()).collect();
                    writeln!(
                        f,
                        "  {}: V(J) = {}{}  [{}]",
                        set(&s.rows),
                        locus,
                        if s.equals_sigma { "  = Sigma" } else { "" },
                        minors.join(", ")
                    )?;
                }
            }
        }
        let v = &self.verdict;
        writeln!(
            f,
            "verdict: predicted {}, observed {}{}",
            v.predicted,
            v.observed,
            if v.consistent { "" } else { "  MISMATCH" }
        )?;
        if let Some(w) = &v.witness {
            writeln!(f, "witness: {}", set(w))?;
        }
        for note in &v.notes {
            writeln!(f, "note: {note}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}
