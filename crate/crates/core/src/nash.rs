//! Jacobian minors of binomial families, their zero loci and the singular locus.
//!
//! For `r = N - 2` binomials with difference matrix `R`, the minor that drops
//! the columns in `K` is congruent modulo the toric ideal to
//! `det(R_K) * x^(sum of plus exponents - 1 + 1_K)`. That closed form is the
//! fast path here; the symbolic determinant reduced by the Gröbner basis is
//! the independent route it is checked against, and the fallback should the
//! closed form ever need a negative exponent.
//!
//! Zero loci of monomial ideals on the surface are unions of the four torus
//! orbit closures, so they are represented by which orbits they contain and
//! decided by evaluating at one point of each orbit.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{determinant, Binomial, ExponentVector, Monomial, Polynomial};
use crate::intmat;
use crate::semigroup::{Block, ValidatedSemigroup};
use crate::toric::{Family, ToricIdeal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NashError {
    #[error("row {row} is not a relation among the generators")]
    NotARelation { row: usize },
    #[error("reduced minor has {terms} terms, expected a single monomial")]
    NonMonomialResidue { terms: usize },
    #[error("reduced minor has coefficient {got}, the integer determinant is {expected}")]
    CoefficientMismatch { got: BigInt, expected: BigInt },
    #[error("the chosen binomials have rank {rank}, need {needed}")]
    RankDeficient { rank: usize, needed: usize },
    #[error("subset has {got} binomials, need {needed}")]
    WrongSubsetSize { got: usize, needed: usize },
    #[error("empty monomial set has no zero locus on the surface")]
    EmptyIdeal,
    #[error("Jacobian has rank below {needed} on the dense torus")]
    TorusSingular { needed: usize },
    #[error("singular locus from the Jacobian rank ({by_rank}) disagrees with the minor ideal ({by_minors})")]
    LocusMismatch {
        by_rank: OrbitSet,
        by_minors: OrbitSet,
    },
    #[error("singular locus {0} is not one-dimensional")]
    NotDimensionOne(OrbitSet),
    #[error("no subset has a minor that is a pure {0:?}-block monomial")]
    NotFound(Block),
    #[error("main theorem check failed: predicted {predicted}, observed {observed}")]
    TheoremViolation {
        predicted: Outcome,
        observed: Outcome,
    },
}

/// Exponent difference rows `plus - minus`, one per binomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl DifferenceMatrix {
    pub fn of(family: &[Binomial]) -> Self {
        Self {
            rows: family.iter().map(Binomial::difference).collect(),
        }
    }

    /// The square matrix left after deleting the two columns of `k`.
    pub fn without(&self, k: MinorSelection) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| !k.contains(c))
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect()
    }
}

/// Difference matrix, checking that every row is a relation among the generators.
pub fn difference_matrix(
    family: &[Binomial],
    vs: &ValidatedSemigroup,
) -> Result<DifferenceMatrix, NashError> {
    let m = DifferenceMatrix::of(family);
    let gens = vs.generators();
    for (row, r) in m.rows.iter().enumerate() {
        let (mut su, mut sv) = (0i128, 0i128);
        for (&x, g) in r.iter().zip(gens) {
            su += i128::from(x) * i128::from(g.u);
            sv += i128::from(x) * i128::from(g.v);
        }
        if su != 0 || sv != 0 || r.iter().all(|&x| x == 0) {
            return Err(NashError::NotARelation { row });
        }
    }
    Ok(m)
}

/// Rank of the family over the rationals; equals the generic rank of its Jacobian.
pub fn rank(family: &[Binomial]) -> usize {
    intmat::rank(&intmat::to_big(&DifferenceMatrix::of(family).rows))
}

/// The two columns left out of a maximal minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSelection {
    first: usize,
    second: usize,
}

impl MinorSelection {
    pub fn new(a: usize, b: usize) -> Option<Self> {
        (a != b).then(|| Self {
            first: a.min(b),
            second: a.max(b),
        })
    }

    pub fn columns(self) -> (usize, usize) {
        (self.first, self.second)
    }

    pub fn contains(self, c: usize) -> bool {
        c == self.first || c == self.second
    }

    /// All `N (N - 1) / 2` selections in lexicographic order.
    pub fn all(nvars: usize) -> impl Iterator<Item = MinorSelection> {
        (0..nvars)
            .tuple_combinations()
            .map(|(a, b)| MinorSelection {
                first: a,
                second: b,
            })
    }
}

impl fmt::Display for MinorSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.first + 1, self.second + 1)
    }
}

/// One maximal minor through the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaMinor {
    pub det_rk: BigInt,
    /// `None` when the minor vanishes modulo the ideal.
    pub value: Option<Monomial>,
    /// The closed form needed a negative exponent and the symbolic route was used.
    pub fallback: bool,
}

fn check_subset(subset: &[Binomial], ideal: &ToricIdeal) -> Result<usize, NashError> {
    let r = ideal.semigroup().codim();
    if subset.len() != r {
        return Err(NashError::WrongSubsetSize {
            got: subset.len(),
            needed: r,
        });
    }
    Ok(r)
}

pub fn minor_monomial_formula(
    subset: &[Binomial],
    k: MinorSelection,
    ideal: &ToricIdeal,
) -> Result<FormulaMinor, NashError> {
    check_subset(subset, ideal)?;
    let n = ideal.nvars();
    let diff = DifferenceMatrix::of(subset);
    let det_rk = intmat::determinant(&intmat::to_big(&diff.without(k)));
    if det_rk.is_zero() {
        return Ok(FormulaMinor {
            det_rk,
            value: None,
            fallback: false,
        });
    }
    if let Some(exp) = closed_form_exponent(subset, &diff, k, n) {
        return Ok(FormulaMinor {
            value: Some(Monomial::new(det_rk.clone(), exp)),
            det_rk,
            fallback: false,
        });
    }
    log::debug!("minor {k}: no nonnegative closed form, using the symbolic determinant");
    let reduced = minor_symbolic(subset, k, ideal)?;
    let value = reduced.as_monomial();
    match &value {
        Some(m) if m.coeff != det_rk => {
            return Err(NashError::CoefficientMismatch {
                got: m.coeff.clone(),
                expected: det_rk,
            })
        }
        None => {
            return Err(NashError::CoefficientMismatch {
                got: BigInt::zero(),
                expected: det_rk,
            })
        }
        _ => {}
    }
    Ok(FormulaMinor {
        det_rk,
        value,
        fallback: true,
    })
}

/// Exponent of the closed form for an orientation of the rows that keeps it
/// nonnegative.
///
/// Swapping the sides of one binomial negates its Jacobian row and its row of
/// `R`, so `det(R_K) * x^E` is the same minor whichever side of each row
/// supplies the exponents in `E`. When `det(R_K) != 0` some permutation
/// matches every row to a kept column with a nonzero entry; taking from each
/// row the side that contains its matched variable makes every exponent of a
/// kept variable at least one before the `- 1`.
fn closed_form_exponent(
    subset: &[Binomial],
    diff: &DifferenceMatrix,
    k: MinorSelection,
    n: usize,
) -> Option<ExponentVector> {
    let kept: Vec<usize> = (0..n).filter(|&c| !k.contains(c)).collect();
    let matching = perfect_matching(&diff.rows, &kept)?;
    let exps: Option<Vec<u32>> = (0..n)
        .map(|var| {
            let total: u32 = subset
                .iter()
                .zip(&diff.rows)
                .zip(&matching)
                .map(|((b, row), &col)| {
                    if row[col] > 0 {
                        b.plus().get(var)
                    } else {
                        b.minus().get(var)
                    }
                })
                .sum::<u32>()
                + u32::from(k.contains(var));
            total.checked_sub(1)
        })
        .collect();
    exps.map(ExponentVector::new)
}

/// For each row, a distinct column from `cols` with a nonzero entry, if one exists.
fn perfect_matching(rows: &[Vec<i64>], cols: &[usize]) -> Option<Vec<usize>> {
    fn augment(
        row: usize,
        rows: &[Vec<i64>],
        cols: &[usize],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for (slot, &c) in cols.iter().enumerate() {
            if rows[row][c] == 0 || seen[slot] {
                continue;
            }
            seen[slot] = true;
            if owner[slot].is_none_or(|other| augment(other, rows, cols, owner, seen)) {
                owner[slot] = Some(row);
                return true;
            }
        }
        false
    }
    let mut owner: Vec<Option<usize>> = vec![None; cols.len()];
    for row in 0..rows.len() {
        if !augment(row, rows, cols, &mut owner, &mut vec![false; cols.len()]) {
            return None;
        }
    }
    let mut matched = vec![0; rows.len()];
    for (slot, o) in owner.iter().enumerate() {
        if let Some(row) = o {
            matched[*row] = cols[slot];
        }
    }
    Some(matched)
}

/// Jacobian minor by symbolic determinant, reduced to normal form.
pub fn minor_symbolic(
    subset: &[Binomial],
    k: MinorSelection,
    ideal: &ToricIdeal,
) -> Result<Polynomial, NashError> {
    check_subset(subset, ideal)?;
    let matrix: Vec<Vec<Polynomial>> = subset
        .iter()
        .map(|b| {
            b.jacobian_row()
                .into_iter()
                .enumerate()
                .filter(|&(c, _)| !k.contains(c))
                .map(|(_, p)| p)
                .collect()
        })
        .collect();
    let det = determinant(&matrix).expect("square by construction");
    let reduced = ideal.normal_form(&det);
    if reduced.len() > 1 {
        return Err(NashError::NonMonomialResidue {
            terms: reduced.len(),
        });
    }
    Ok(reduced)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorEntry {
    pub selection: MinorSelection,
    pub det_rk: BigInt,
    pub monomial: Monomial,
    pub fallback: bool,
}

/// All nonzero maximal minors of the Jacobian of `subset`, modulo the ideal.
pub fn nash_ideal(subset: &[Binomial], ideal: &ToricIdeal) -> Result<Vec<MinorEntry>, NashError> {
    let r = check_subset(subset, ideal)?;
    let rk = rank(subset);
    if rk < r {
        return Err(NashError::RankDeficient {
            rank: rk,
            needed: r,
        });
    }
    let mut out = Vec::new();
    for k in MinorSelection::all(ideal.nvars()) {
        let minor = minor_monomial_formula(subset, k, ideal)?;
        if let Some(monomial) = minor.value {
            out.push(MinorEntry {
                selection: k,
                det_rk: minor.det_rk,
                monomial,
                fallback: minor.fallback,
            });
        }
    }
    Ok(out)
}

/// A closed torus-invariant subset of the surface, as the orbits it contains.
///
/// `o1` is the orbit along the `z` block (points `(0, 0, z)`), `o2` the orbit
/// along the `x` block (points `(x, 0, 0)`), `origin` the fixed point. The
/// dense torus is never part of a proper zero locus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitSet {
    #[serde(rename = "O1")]
    pub o1: bool,
    #[serde(rename = "O2")]
    pub o2: bool,
    pub origin: bool,
}

impl OrbitSet {
    pub const ORIGIN: OrbitSet = OrbitSet {
        o1: false,
        o2: false,
        origin: true,
    };

    pub fn dim(&self) -> Option<usize> {
        if self.o1 || self.o2 {
            Some(1)
        } else if self.origin {
            Some(0)
        } else {
            None
        }
    }

    /// Orbitwise inclusion.
    pub fn is_subset(&self, other: &OrbitSet) -> bool {
        (!self.o1 || other.o1) && (!self.o2 || other.o2) && (!self.origin || other.origin)
    }
}

impl fmt::Display for OrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.o1 {
            parts.push("closure(O1)");
        }
        if self.o2 {
            parts.push("closure(O2)");
        }
        if parts.is_empty() && self.origin {
            parts.push("{0}");
        }
        if parts.is_empty() {
            write!(f, "empty")
        } else {
            write!(f, "{}", parts.join(" ∪ "))
        }
    }
}

fn vanishes_at(exp: &ExponentVector, point: &[i64]) -> bool {
    exp.as_slice()
        .iter()
        .zip(point)
        .any(|(&e, &x)| e > 0 && x == 0)
}

/// Zero locus on the surface of the ideal generated by the given monomials.
pub fn zero_locus(
    monomials: &[ExponentVector],
    vs: &ValidatedSemigroup,
) -> Result<OrbitSet, NashError> {
    if monomials.is_empty() {
        return Err(NashError::EmptyIdeal);
    }
    let all_vanish = |point: Vec<i64>| monomials.iter().all(|m| vanishes_at(m, &point));
    Ok(OrbitSet {
        o1: all_vanish(vs.o1_point()),
        o2: all_vanish(vs.o2_point()),
        origin: all_vanish(vs.origin_point()),
    })
}

fn jacobian_rank_at(rows: &[Vec<Polynomial>], point: &[i64]) -> usize {
    let evaluated: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.evaluate_i64(point).expect("point has N coordinates"))
                .collect()
        })
        .collect();
    intmat::rank(&evaluated)
}

/// Singular locus by the Jacobian criterion alone, evaluated at one point of each orbit.
pub fn jacobian_locus(ideal: &ToricIdeal, family: &[Binomial]) -> Result<OrbitSet, NashError> {
    let vs = ideal.semigroup();
    let r = vs.codim();
    let rows: Vec<Vec<Polynomial>> = family.iter().map(Binomial::jacobian_row).collect();
    if jacobian_rank_at(&rows, &vs.torus_point()) < r {
        return Err(NashError::TorusSingular { needed: r });
    }
    Ok(OrbitSet {
        o1: jacobian_rank_at(&rows, &vs.o1_point()) < r,
        o2: jacobian_rank_at(&rows, &vs.o2_point()) < r,
        origin: jacobian_rank_at(&rows, &vs.origin_point()) < r,
    })
}

fn locus_of_reports(
    reports: &[NashReport],
    vs: &ValidatedSemigroup,
) -> Result<OrbitSet, NashError> {
    let all: Vec<ExponentVector> = reports
        .iter()
        .flat_map(|r| r.minors.iter().map(|m| m.monomial.exp.clone()))
        .collect();
    zero_locus(&all, vs)
}

fn cross_checked(
    ideal: &ToricIdeal,
    family: &[Binomial],
) -> Result<(OrbitSet, Vec<NashReport>), NashError> {
    let by_rank = jacobian_locus(ideal, family)?;
    let reports = search_family(ideal, family, &by_rank)?;
    let by_minors = locus_of_reports(&reports, ideal.semigroup())?;
    if by_minors != by_rank {
        return Err(NashError::LocusMismatch { by_rank, by_minors });
    }
    Ok((by_rank, reports))
}

/// Singular locus by the Jacobian criterion at one point of each orbit,
/// cross-checked against the zero locus of all maximal minors of `family`.
pub fn singular_locus(ideal: &ToricIdeal, family: &[Binomial]) -> Result<OrbitSet, NashError> {
    cross_checked(ideal, family).map(|(sigma, _)| sigma)
}

/// Outcome of one `r`-subset of the relation family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NashReport {
    /// Indices into the family, increasing.
    pub subset: Vec<usize>,
    pub rank_ok: bool,
    pub minors: Vec<MinorEntry>,
    pub zero_locus: Option<OrbitSet>,
    pub equals_sigma: bool,
}

impl NashReport {
    pub fn fallbacks(&self) -> usize {
        self.minors.iter().filter(|m| m.fallback).count()
    }
}

fn report_for(
    subset_idx: &[usize],
    family: &[Binomial],
    ideal: &ToricIdeal,
    sigma: &OrbitSet,
) -> Result<NashReport, NashError> {
    let r = ideal.semigroup().codim();
    let subset: Vec<Binomial> = subset_idx.iter().map(|&i| family[i].clone()).collect();
    if rank(&subset) < r {
        return Ok(NashReport {
            subset: subset_idx.to_vec(),
            rank_ok: false,
            minors: Vec::new(),
            zero_locus: None,
            equals_sigma: false,
        });
    }
    let minors = nash_ideal(&subset, ideal)?;
    let exps: Vec<ExponentVector> = minors.iter().map(|m| m.monomial.exp.clone()).collect();
    let locus = zero_locus(&exps, ideal.semigroup())?;
    Ok(NashReport {
        subset: subset_idx.to_vec(),
        rank_ok: true,
        minors,
        zero_locus: Some(locus),
        equals_sigma: locus == *sigma,
    })
}

/// Every `r`-subset of the family in lexicographic order, evaluated in parallel
/// on the current rayon pool. Rank-deficient subsets are reported and skipped.
pub fn search_all_subsets(
    ideal: &ToricIdeal,
    family: Family,
    sigma: &OrbitSet,
) -> Result<Vec<NashReport>, NashError> {
    search_family(ideal, ideal.family(family), sigma)
}

/// [`search_all_subsets`] over an explicit list of binomials of the ideal.
pub fn search_family(
    ideal: &ToricIdeal,
    family: &[Binomial],
    sigma: &OrbitSet,
) -> Result<Vec<NashReport>, NashError> {
    let r = ideal.semigroup().codim();
    let subsets: Vec<Vec<usize>> = (0..family.len()).combinations(r).collect();
    subsets
        .par_iter()
        .map(|idx| report_for(idx, family, ideal, sigma))
        .collect()
}

/// Report for one explicit subset of a family.
pub fn subset_report(
    ideal: &ToricIdeal,
    family: &[Binomial],
    subset: &[usize],
    sigma: &OrbitSet,
) -> Result<NashReport, NashError> {
    let r = ideal.semigroup().codim();
    if subset.len() != r {
        return Err(NashError::WrongSubsetSize {
            got: subset.len(),
            needed: r,
        });
    }
    report_for(subset, family, ideal, sigma)
}

/// True when `m` is a nonconstant monomial in the variables of one edge block.
fn is_pure(m: &ExponentVector, vs: &ValidatedSemigroup, block: Block) -> bool {
    !m.is_zero() && m.support().all(|v| vs.block(v) == block)
}

/// Finds `r` binomials of the family whose minor ideal cuts out exactly a
/// one-dimensional singular locus.
///
/// For a single orbit closure the witness is a subset with a minor that is a
/// pure monomial in the opposite edge block; when both closures are singular
/// any subset of full rank works.
pub fn dim1_selector(
    ideal: &ToricIdeal,
    family: &[Binomial],
    sigma: &OrbitSet,
) -> Result<NashReport, NashError> {
    if sigma.dim() != Some(1) {
        return Err(NashError::NotDimensionOne(*sigma));
    }
    let vs = ideal.semigroup();
    let r = vs.codim();
    let wanted = match (sigma.o1, sigma.o2) {
        (true, true) => None,
        (true, false) => Some(Block::X),
        _ => Some(Block::Z),
    };
    for idx in (0..family.len()).combinations(r) {
        let report = report_for(&idx, family, ideal, sigma)?;
        if !report.rank_ok {
            continue;
        }
        match wanted {
            None => return Ok(report),
            Some(block) => {
                if report
                    .minors
                    .iter()
                    .any(|m| is_pure(&m.monomial.exp, vs, block))
                {
                    return Ok(report);
                }
            }
        }
    }
    Err(NashError::NotFound(wanted.unwrap_or(Block::X)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CiClass {
    pub is_hypersurface: bool,
    pub is_complete_intersection: bool,
}

/// Hypersurface iff `N = 3`; complete intersection iff `N - 2` binomials generate.
pub fn classify_ci(ideal: &ToricIdeal) -> CiClass {
    let vs = ideal.semigroup();
    CiClass {
        is_hypersurface: vs.nvars() == 3,
        is_complete_intersection: ideal.s_min() == vs.codim(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Every full-rank subset has `V(J) = Sigma`.
    AlwaysEqual,
    /// Some full-rank subset has `V(J) = Sigma`.
    ExistsEqual,
    /// No full-rank subset has `V(J) = Sigma`.
    NeverEqual,
    OutOfScope,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::AlwaysEqual => "always_equal",
            Outcome::ExistsEqual => "exists_equal",
            Outcome::NeverEqual => "never_equal",
            Outcome::OutOfScope => "out_of_scope",
        }
    }

    /// Whether an observed outcome is what this prediction asserts.
    pub fn admits(self, observed: Outcome) -> bool {
        match self {
            Outcome::OutOfScope => true,
            Outcome::ExistsEqual => matches!(observed, Outcome::ExistsEqual | Outcome::AlwaysEqual),
            p => p == observed,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub sigma: OrbitSet,
    pub is_hypersurface: bool,
    pub is_complete_intersection: bool,
    pub predicted: Outcome,
    pub observed: Outcome,
    /// Witness subset from [`dim1_selector`] when one is predicted to exist.
    pub witness: Option<Vec<usize>>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

/// Everything computed for one ideal and one relation family.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub family: Family,
    pub sigma: OrbitSet,
    pub ci: CiClass,
    pub reports: Vec<NashReport>,
    pub verdict: TheoremVerdict,
}

fn observed_outcome(reports: &[NashReport]) -> Outcome {
    let valid: Vec<&NashReport> = reports.iter().filter(|r| r.rank_ok).collect();
    let hits = valid.iter().filter(|r| r.equals_sigma).count();
    if hits == 0 {
        Outcome::NeverEqual
    } else if hits == valid.len() {
        Outcome::AlwaysEqual
    } else {
        Outcome::ExistsEqual
    }
}

/// Singular locus, CI flags, exhaustive subset search and the main-theorem
/// prediction, in one pass.
pub fn analyze(ideal: &ToricIdeal, family: Family) -> Result<Analysis, NashError> {
    let members = ideal.family(family);
    let (sigma, reports) = cross_checked(ideal, members)?;
    let ci = classify_ci(ideal);
    let observed = observed_outcome(&reports);
    let mut notes = Vec::new();
    let mut witness = None;
    let mut consistent = true;

    let predicted = if !sigma.origin {
        notes.push("the origin is a smooth point of the surface; the standing hypotheses exclude this input".into());
        Outcome::OutOfScope
    } else {
        match sigma.dim() {
            Some(1) if sigma.o1 && sigma.o2 => Outcome::AlwaysEqual,
            Some(1) => {
                match dim1_selector(ideal, members, &sigma) {
                    Ok(report) => {
                        if !report.equals_sigma {
                            notes.push(format!(
                                "selected subset {:?} does not cut out the singular locus",
                                one_based(&report.subset)
                            ));
                            consistent = false;
                        }
                        witness = Some(report.subset);
                    }
                    Err(e) => {
                        notes.push(format!("constructive selection failed: {e}"));
                        consistent = false;
                    }
                }
                Outcome::ExistsEqual
            }
            _ if ci.is_complete_intersection => {
                if !ci.is_hypersurface {
                    notes.push(format!(
                        "isolated singularity with a complete intersection of {} equations that is not a hypersurface",
                        ideal.s_min()
                    ));
                    consistent = false;
                }
                notes.push(
                    "complete intersection: the minimal generators give V(J) = Sigma directly"
                        .into(),
                );
                Outcome::OutOfScope
            }
            _ => Outcome::NeverEqual,
        }
    };
    consistent &= predicted.admits(observed);
    Ok(Analysis {
        family,
        sigma,
        ci,
        reports,
        verdict: TheoremVerdict {
            sigma,
            is_hypersurface: ci.is_hypersurface,
            is_complete_intersection: ci.is_complete_intersection,
            predicted,
            observed,
            witness,
            consistent,
            notes,
        },
    })
}

/// The main-theorem verdict for the minimal generators; a mismatch between
/// prediction and observation is an error.
pub fn verify_main_theorem(ideal: &ToricIdeal) -> Result<TheoremVerdict, NashError> {
    verify_main_theorem_with(ideal, Family::Minimal)
}

pub fn verify_main_theorem_with(
    ideal: &ToricIdeal,
    family: Family,
) -> Result<TheoremVerdict, NashError> {
    let verdict = analyze(ideal, family)?.verdict;
    if !verdict.consistent {
        return Err(NashError::TheoremViolation {
            predicted: verdict.predicted,
            observed: verdict.observed,
        });
    }
    Ok(verdict)
}

pub(crate) fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

/// Evaluates a monomial exponent at a point, as a 0/1 vanishing pattern helper.
pub fn monomial_vanishes_at(exp: &ExponentVector, point: &[i64]) -> bool {
    vanishes_at(exp, point)
}

/// `det(R_K)` for one selection.
pub fn det_rk(subset: &[Binomial], k: MinorSelection) -> BigInt {
    intmat::determinant(&intmat::to_big(&DifferenceMatrix::of(subset).without(k)))
}

/// `c * NF(x^e)` as a polynomial.
pub fn reduced_monomial(ideal: &ToricIdeal, m: &Monomial) -> Polynomial {
    Polynomial::term(m.coeff.clone(), ideal.gb().reduce_monomial(&m.exp))
}

impl MinorEntry {
    pub fn is_unit_coefficient(&self) -> bool {
        self.monomial.coeff == BigInt::one() || self.monomial.coeff == -BigInt::one()
    }
}
