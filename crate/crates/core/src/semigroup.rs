//! Two-dimensional affine semigroups: cone rays, generator blocks, validation.
//!
//! A generator set is split into the generators on the first extreme ray of
//! its cone (the `x` block), the generators strictly inside the cone (the `y`
//! block) and the generators on the second ray (the `z` block). Validation
//! enforces the standing hypotheses of the toric surface analysis except the
//! singularity of the origin, which needs the ideal and is checked later.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intmat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub u: i64,
    pub v: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { u: 0, v: 0 };

    pub const fn new(u: i64, v: i64) -> Self {
        Self { u, v }
    }

    pub fn is_origin(self) -> bool {
        self.u == 0 && self.v == 0
    }

    pub fn cross(self, other: Self) -> i128 {
        i128::from(self.u) * i128::from(other.v) - i128::from(self.v) * i128::from(other.u)
    }

    pub fn dot(self, other: Self) -> i128 {
        i128::from(self.u) * i128::from(other.u) + i128::from(self.v) * i128::from(other.v)
    }

    /// The primitive lattice vector in the same direction.
    pub fn primitive(self) -> Self {
        let g = self.u.gcd(&self.v);
        if g == 0 {
            self
        } else {
            Self::new(self.u / g, self.v / g)
        }
    }

    pub fn norm_sq(self) -> i128 {
        self.dot(self)
    }

    fn checked_sub(self, other: Self, k: i64) -> Option<Self> {
        Some(Self::new(
            self.u.checked_sub(other.u.checked_mul(k)?)?,
            self.v.checked_sub(other.v.checked_mul(k)?)?,
        ))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((u, v): (i64, i64)) -> Self {
        Self::new(u, v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("no generators given")]
    Empty,
    #[error("generator {index} is the origin")]
    ZeroGenerator { index: usize },
    #[error("generator {point} is repeated")]
    DuplicateGenerator { index: usize, point: LatticePoint },
    #[error("all generators are collinear")]
    ConeNotTwoDimensional,
    #[error("the cone spanned by the generators contains a line")]
    ConeNotStrictlyConvex,
    #[error("no strictly positive dual vector bounds the membership search")]
    UnboundedSearch,
    #[error("generator {point} lies in the semigroup generated by the others")]
    NotMinimal { index: usize, point: LatticePoint },
    #[error("the generators span a sublattice of index {index}")]
    LatticeNotFull { index: i64 },
    #[error("one of the extreme rays carries no generator")]
    EmptyEdge,
    #[error("{count} generators give a surface of codimension 0; at least 3 are needed")]
    TooFewGenerators { count: usize },
}

impl SemigroupError {
    /// Short name of the violated condition, used in diagnostics.
    pub fn condition(&self) -> &'static str {
        match self {
            SemigroupError::Empty => "Empty",
            SemigroupError::ZeroGenerator { .. } => "ZeroGenerator",
            SemigroupError::DuplicateGenerator { .. } => "DuplicateGenerator",
            SemigroupError::ConeNotTwoDimensional => "ConeNotTwoDimensional",
            SemigroupError::ConeNotStrictlyConvex => "ConeNotStrictlyConvex",
            SemigroupError::UnboundedSearch => "UnboundedSearch",
            SemigroupError::NotMinimal { .. } => "NotMinimal",
            SemigroupError::LatticeNotFull { .. } => "LatticeNotFull",
            SemigroupError::EmptyEdge => "EmptyEdge",
            SemigroupError::TooFewGenerators { .. } => "TooFewGenerators",
        }
    }
}

/// The input generator list: nonzero, pairwise distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet(Vec<LatticePoint>);

impl GeneratorSet {
    pub fn new(points: Vec<LatticePoint>) -> Result<Self, SemigroupError> {
        if points.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let mut seen = HashSet::new();
        for (index, &p) in points.iter().enumerate() {
            if p.is_origin() {
                return Err(SemigroupError::ZeroGenerator { index });
            }
            if !seen.insert(p) {
                return Err(SemigroupError::DuplicateGenerator { index, point: p });
            }
        }
        Ok(Self(points))
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, SemigroupError> {
        Self::new(pairs.iter().map(|&p| p.into()).collect())
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Which block of variables a generator (and its coordinate) belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    /// First extreme ray.
    X,
    /// Interior of the cone.
    Y,
    /// Second extreme ray.
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeClassification {
    /// Primitive generator of the first ray; the second ray is counterclockwise from it.
    pub ray1: LatticePoint,
    pub ray2: LatticePoint,
    pub edge1: Vec<usize>,
    pub interior: Vec<usize>,
    pub edge2: Vec<usize>,
}

impl ConeClassification {
    pub fn l(&self) -> usize {
        self.edge1.len()
    }

    pub fn m(&self) -> usize {
        self.interior.len()
    }

    pub fn n(&self) -> usize {
        self.edge2.len()
    }
}

fn half_plane(p: LatticePoint) -> u8 {
    if p.v > 0 || (p.v == 0 && p.u > 0) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: LatticePoint, b: LatticePoint) -> Ordering {
    half_plane(a)
        .cmp(&half_plane(b))
        .then_with(|| b.cross(a).cmp(&0))
}

fn rays_of(points: &[LatticePoint]) -> Result<(LatticePoint, LatticePoint), SemigroupError> {
    let first = *points.first().ok_or(SemigroupError::Empty)?;
    if points.iter().all(|&p| first.cross(p) == 0) {
        return Err(SemigroupError::ConeNotTwoDimensional);
    }
    let mut dirs: Vec<LatticePoint> = points.iter().map(|p| p.primitive()).collect();
    dirs.sort_by(|&a, &b| angle_cmp(a, b));
    dirs.dedup();
    for (i, &a) in dirs.iter().enumerate() {
        let b = dirs[(i + 1) % dirs.len()];
        // the angular gap from a to b exceeds a half turn
        if a.cross(b) < 0 {
            return Ok((b, a));
        }
    }
    Err(SemigroupError::ConeNotStrictlyConvex)
}

/// The two primitive extreme rays of the cone spanned by the generators,
/// ordered counterclockwise.
pub fn compute_cone_rays(
    gens: &GeneratorSet,
) -> Result<(LatticePoint, LatticePoint), SemigroupError> {
    rays_of(gens.points())
}

pub fn classify_generators(gens: &GeneratorSet) -> Result<ConeClassification, SemigroupError> {
    let (ray1, ray2) = compute_cone_rays(gens)?;
    let mut out = ConeClassification {
        ray1,
        ray2,
        edge1: Vec::new(),
        interior: Vec::new(),
        edge2: Vec::new(),
    };
    for (i, &p) in gens.points().iter().enumerate() {
        if ray1.cross(p) == 0 {
            out.edge1.push(i);
        } else if p.cross(ray2) == 0 {
            out.edge2.push(i);
        } else {
            out.interior.push(i);
        }
    }
    Ok(out)
}

/// True iff the generators span all of `Z^2`.
pub fn check_generates_z2(gens: &GeneratorSet) -> bool {
    lattice_index(gens.points()) == 1
}

fn lattice_index(points: &[LatticePoint]) -> i64 {
    let pairs: Vec<(i64, i64)> = points.iter().map(|p| (p.u, p.v)).collect();
    intmat::gcd_of_two_minors(&pairs)
}

/// An integer vector `w` with `w . g > 0` for every generator, if one exists.
///
/// For a two-dimensional cone this is the sum of the inward normals of the two
/// rays; a cone that is a single ray uses the ray itself.
pub fn positive_dual(points: &[LatticePoint]) -> Option<LatticePoint> {
    match rays_of(points) {
        Ok((r1, r2)) => Some(LatticePoint::new(r2.v - r1.v, r1.u - r2.u)),
        Err(SemigroupError::ConeNotTwoDimensional) => {
            let d = points.first()?.primitive();
            points.iter().all(|p| p.dot(d) > 0).then_some(d)
        }
        Err(_) => None,
    }
}

/// Decides `p in N gens` by bounded enumeration.
pub fn semigroup_membership(p: LatticePoint, gens: &GeneratorSet) -> Result<bool, SemigroupError> {
    let w = positive_dual(gens.points()).ok_or(SemigroupError::UnboundedSearch)?;
    Ok(member_with_dual(p, gens.points(), w))
}

/// Membership with an explicit dual vector `w`, which must satisfy `w . g > 0`
/// for all `gens`. Each coefficient is bounded by `w . p / w . g`.
pub fn member_with_dual(p: LatticePoint, gens: &[LatticePoint], w: LatticePoint) -> bool {
    debug_assert!(gens.iter().all(|g| w.dot(*g) > 0));
    let mut failed = HashSet::new();
    member_rec(p, gens, w, &mut failed)
}

fn member_rec(
    target: LatticePoint,
    gens: &[LatticePoint],
    w: LatticePoint,
    failed: &mut HashSet<(usize, LatticePoint)>,
) -> bool {
    if target.is_origin() {
        return true;
    }
    let Some((&g, rest)) = gens.split_first() else {
        return false;
    };
    let budget = w.dot(target);
    if budget <= 0 || failed.contains(&(gens.len(), target)) {
        return false;
    }
    let bound = i64::try_from(budget / w.dot(g)).unwrap_or(i64::MAX);
    for k in (0..=bound).rev() {
        let Some(next) = target.checked_sub(g, k) else {
            continue;
        };
        if member_rec(next, rest, w, failed) {
            return true;
        }
    }
    failed.insert((gens.len(), target));
    false
}

/// A generator set that satisfies the standing hypotheses, in canonical order:
/// the `x` block, then the `y` block, then the `z` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedSemigroup {
    gens: Vec<LatticePoint>,
    /// `permutation[k]` is the input index of canonical generator `k`.
    permutation: Vec<usize>,
    ray1: LatticePoint,
    ray2: LatticePoint,
    l: usize,
    m: usize,
    n: usize,
    dual: LatticePoint,
}

pub fn validate(gens: &GeneratorSet) -> Result<ValidatedSemigroup, SemigroupError> {
    let points = gens.points();
    let class = classify_generators(gens)?;
    if class.l() == 0 || class.n() == 0 {
        return Err(SemigroupError::EmptyEdge);
    }
    let index = lattice_index(points);
    if index != 1 {
        return Err(SemigroupError::LatticeNotFull { index });
    }
    let dual = LatticePoint::new(class.ray2.v - class.ray1.v, class.ray1.u - class.ray2.u);
    for (i, &p) in points.iter().enumerate() {
        let others: Vec<LatticePoint> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &q)| q)
            .collect();
        if member_with_dual(p, &others, dual) {
            return Err(SemigroupError::NotMinimal { index: i, point: p });
        }
    }
    if points.len() < 3 {
        return Err(SemigroupError::TooFewGenerators {
            count: points.len(),
        });
    }

    let by_norm = |idx: &Vec<usize>| {
        let mut v = idx.clone();
        v.sort_by_key(|&i| (points[i].norm_sq(), points[i]));
        v
    };
    let mut interior = class.interior.clone();
    interior.sort_by_key(|&i| points[i]);
    let permutation: Vec<usize> = by_norm(&class.edge1)
        .into_iter()
        .chain(interior)
        .chain(by_norm(&class.edge2))
        .collect();
    Ok(ValidatedSemigroup {
        gens: permutation.iter().map(|&i| points[i]).collect(),
        permutation,
        ray1: class.ray1,
        ray2: class.ray2,
        l: class.l(),
        m: class.m(),
        n: class.n(),
        dual,
    })
}

impl ValidatedSemigroup {
    pub fn generators(&self) -> &[LatticePoint] {
        &self.gens
    }

    pub fn generator_set(&self) -> GeneratorSet {
        GeneratorSet(self.gens.clone())
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn rays(&self) -> (LatticePoint, LatticePoint) {
        (self.ray1, self.ray2)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of variables `N = l + m + n`.
    pub fn nvars(&self) -> usize {
        self.gens.len()
    }

    /// Codimension `r = N - 2` of the surface.
    pub fn codim(&self) -> usize {
        self.gens.len() - 2
    }

    pub fn block(&self, var: usize) -> Block {
        if var < self.l {
            Block::X
        } else if var < self.l + self.m {
            Block::Y
        } else {
            Block::Z
        }
    }

    pub fn block_range(&self, block: Block) -> std::ops::Range<usize> {
        match block {
            Block::X => 0..self.l,
            Block::Y => self.l..self.l + self.m,
            Block::Z => self.l + self.m..self.nvars(),
        }
    }

    /// Strictly positive dual vector of the cone.
    pub fn dual(&self) -> LatticePoint {
        self.dual
    }

    /// Degrees `w . gamma_i` of a positive grading under which every binomial
    /// of the toric ideal is homogeneous.
    pub fn grading(&self) -> Vec<u64> {
        self.gens
            .iter()
            .map(|&g| u64::try_from(self.dual.dot(g)).expect("dual vector is positive on the cone"))
            .collect()
    }

    /// `pi(alpha) = sum alpha_i gamma_i`.
    pub fn image(&self, alpha: &[u32]) -> (i128, i128) {
        alpha
            .iter()
            .zip(&self.gens)
            .fold((0, 0), |(a, b), (&k, g)| {
                (
                    a + i128::from(k) * i128::from(g.u),
                    b + i128::from(k) * i128::from(g.v),
                )
            })
    }

    /// Orbit representatives, as points of `C^N`.
    pub fn torus_point(&self) -> Vec<i64> {
        vec![1; self.nvars()]
    }

    /// `(0_l, 0_m, 1_n)`, a point of the orbit along the `z` block.
    pub fn o1_point(&self) -> Vec<i64> {
        (0..self.nvars())
            .map(|v| i64::from(self.block(v) == Block::Z))
            .collect()
    }

    /// `(1_l, 0_m, 0_n)`, a point of the orbit along the `x` block.
    pub fn o2_point(&self) -> Vec<i64> {
        (0..self.nvars())
            .map(|v| i64::from(self.block(v) == Block::X))
            .collect()
    }

    pub fn origin_point(&self) -> Vec<i64> {
        vec![0; self.nvars()]
    }
}
