//! The toric ideal of a validated semigroup.
//!
//! Pipeline: integer kernel of the generator matrix, the binomials of a
//! kernel basis, saturation by the product of all variables, a reduced
//! Gröbner basis in the requested order, and an irredundant generating set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Binomial, ExponentVector, OrderKind, Polynomial, TermOrder};
use crate::groebner::{self, GroebnerBasis, GroebnerError};
use crate::intmat;
use crate::semigroup::{Block, ValidatedSemigroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("generators {i} and {j} are not distinct members of the same edge block")]
    NotSameEdge { i: usize, j: usize },
    #[error("edge relation {0} is not in the ideal")]
    RelationNotInIdeal(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Integer basis of `ker pi`, one vector per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub vectors: Vec<Vec<i64>>,
}

pub fn lattice_kernel(vs: &ValidatedSemigroup) -> LatticeBasis {
    let gens = vs.generators();
    let matrix = vec![
        gens.iter().map(|g| g.u).collect::<Vec<_>>(),
        gens.iter().map(|g| g.v).collect::<Vec<_>>(),
    ];
    LatticeBasis {
        vectors: intmat::kernel_basis(&matrix),
    }
}

/// Which binomials feed the minor search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    #[default]
    Minimal,
    Groebner,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Minimal => "minimal",
            Family::Groebner => "groebner",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minimal" => Ok(Family::Minimal),
            "groebner" => Ok(Family::Groebner),
            other => Err(format!(
                "unknown relation family `{other}` (expected minimal or groebner)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ToricIdeal {
    semigroup: ValidatedSemigroup,
    gb: GroebnerBasis,
    minimal_gens: Vec<Binomial>,
}

impl ToricIdeal {
    pub fn semigroup(&self) -> &ValidatedSemigroup {
        &self.semigroup
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn order(&self) -> &TermOrder {
        self.gb.order()
    }

    pub fn minimal_gens(&self) -> &[Binomial] {
        &self.minimal_gens
    }

    /// Number of minimal generators.
    pub fn s_min(&self) -> usize {
        self.minimal_gens.len()
    }

    pub fn nvars(&self) -> usize {
        self.semigroup.nvars()
    }

    pub fn family(&self, family: Family) -> &[Binomial] {
        match family {
            Family::Minimal => &self.minimal_gens,
            Family::Groebner => self.gb.elements(),
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.gb.normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.gb.contains(p)
    }

    pub fn contains_binomial(&self, b: &Binomial) -> bool {
        self.gb.contains_binomial(b)
    }

    /// Same ideal as `gens`, compared through reduced bases in this ideal's order.
    pub fn equals_ideal_of(&self, gens: &[Binomial]) -> bool {
        groebner::buchberger(gens, self.order()) == self.gb
    }

    /// Edge relation of two generators on the same ray, checked against the ideal.
    pub fn edge_relation(&self, block: Block, i: usize, j: usize) -> Result<Binomial, ToricError> {
        let rel = edge_relation(&self.semigroup, block, i, j)?.oriented(self.order());
        if !self.contains_binomial(&rel) {
            return Err(ToricError::RelationNotInIdeal(format!("{rel:?}")));
        }
        Ok(rel)
    }

    /// Replaces the basis; only meant for fault-injection tests.
    #[doc(hidden)]
    pub fn with_corrupted_gb(&self, gb: GroebnerBasis) -> Self {
        Self { gb, ..self.clone() }
    }
}

/// Lattice-basis binomials `x^v+ - x^v-`.
pub fn lattice_basis_ideal(basis: &LatticeBasis) -> Vec<Binomial> {
    basis
        .vectors
        .iter()
        .map(|v| Binomial::from_signed(v).expect("kernel vectors are nonzero"))
        .collect()
}

pub fn toric_ideal(vs: &ValidatedSemigroup, order: &TermOrder) -> Result<ToricIdeal, ToricError> {
    let basis = lattice_kernel(vs);
    let gens = lattice_basis_ideal(&basis);
    let grading = vs.grading();
    let n = vs.nvars();
    let graded =
        TermOrder::weighted_revlex(grading.clone(), (0..n).collect()).expect("grading is positive");
    let start = groebner::buchberger(&gens, &graded);
    let saturated = groebner::saturate_all(&start, &grading)?;
    let gb = groebner::buchberger(saturated.elements(), order);
    let minimal_gens = minimal_generators(&gb);
    Ok(ToricIdeal {
        semigroup: vs.clone(),
        gb,
        minimal_gens,
    })
}

/// Toric ideal in the default order: lex with `x1 > ... > xl > y1 > ... > zn`.
pub fn toric_ideal_lex(vs: &ValidatedSemigroup) -> Result<ToricIdeal, ToricError> {
    toric_ideal(vs, &TermOrder::of_kind(OrderKind::Lex, vs.nvars()))
}

/// Irredundant generators: walk the basis by increasing leading term and drop
/// an element whenever the remaining ones already generate it.
pub fn minimal_generators(gb: &GroebnerBasis) -> Vec<Binomial> {
    let membership_order = TermOrder::degrevlex(gb.nvars());
    let mut kept: Vec<Binomial> = gb.elements().to_vec();
    let mut idx = 0;
    while idx < kept.len() {
        let others: Vec<Binomial> = kept
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, b)| b.clone())
            .collect();
        if !others.is_empty()
            && groebner::buchberger(&others, &membership_order).contains_binomial(&kept[idx])
        {
            kept.remove(idx);
        } else {
            idx += 1;
        }
    }
    kept
}

/// `x_i^a - x_j^b` with `a gamma_i = b gamma_j` and the smallest such exponents.
///
/// `i` and `j` index into the named edge block.
pub fn edge_relation(
    vs: &ValidatedSemigroup,
    block: Block,
    i: usize,
    j: usize,
) -> Result<Binomial, ToricError> {
    let range = match block {
        Block::X | Block::Z => vs.block_range(block),
        Block::Y => return Err(ToricError::NotSameEdge { i, j }),
    };
    if i == j || i >= range.len() || j >= range.len() {
        return Err(ToricError::NotSameEdge { i, j });
    }
    let (vi, vj) = (range.start + i, range.start + j);
    let gens = vs.generators();
    // multiples of the primitive ray
    let mult = |g: crate::semigroup::LatticePoint| num_integer::Integer::gcd(&g.u, &g.v);
    let (ai, aj) = (mult(gens[vi]), mult(gens[vj]));
    let g = num_integer::Integer::gcd(&ai, &aj);
    let n = vs.nvars();
    let mut plus = vec![0u32; n];
    let mut minus = vec![0u32; n];
    plus[vi] = u32::try_from(aj / g).expect("small exponent");
    minus[vj] = u32::try_from(ai / g).expect("small exponent");
    Ok(
        Binomial::new(ExponentVector::new(plus), ExponentVector::new(minus))
            .expect("distinct variables"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_binomial;
    use crate::algebra::VariableNames;
    use crate::semigroup::{validate, GeneratorSet};

    fn vs(p: &[(i64, i64)]) -> ValidatedSemigroup {
        validate(&GeneratorSet::from_pairs(p).unwrap()).unwrap()
    }

    fn bins(src: &[&str], names: &VariableNames) -> Vec<Binomial> {
        src.iter()
            .map(|s| parse_binomial(s, names).unwrap())
            .collect()
    }

    #[test]
    fn kernel_vectors_are_relations() {
        let v = vs(&[(1, 0), (1, 1), (1, 2), (1, 3)]);
        let k = lattice_kernel(&v);
        assert_eq!(k.vectors.len(), 2);
        assert_eq!(
            intmat::hermite_rows(&k.vectors),
            intmat::hermite_rows(&[vec![1, -2, 1, 0], vec![0, 1, -2, 1]])
        );
        let v = vs(&[(1, 0), (1, 2), (1, 1)]);
        let k = lattice_kernel(&v);
        // canonical order is (1,0), (1,1), (1,2)
        assert_eq!(intmat::hermite_rows(&k.vectors), vec![vec![1, -2, 1]]);
    }

    #[test]
    fn twisted_cubic() {
        let v = vs(&[(1, 0), (1, 1), (1, 2), (1, 3)]);
        let ideal = toric_ideal_lex(&v).unwrap();
        let names = VariableNames::indexed(4);
        let expected = bins(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"], &names);
        assert!(ideal.equals_ideal_of(&expected));
        assert_eq!(ideal.s_min(), 3);
    }

    #[test]
    fn principal_ideal_has_one_generator() {
        let v = vs(&[(1, 0), (1, 1), (1, 2)]);
        let ideal = toric_ideal_lex(&v).unwrap();
        assert_eq!(ideal.s_min(), 1);
        assert_eq!(
            ideal.minimal_gens()[0].render(&VariableNames::blocks(1, 1, 1)),
            "x1*z1 - y1^2"
        );
    }

    #[test]
    fn edge_relations() {
        let v = vs(&[(2, 0), (3, 0), (2, 6), (0, 4), (0, 5)]);
        let ideal = toric_ideal_lex(&v).unwrap();
        let names = VariableNames::blocks(2, 1, 2);
        assert_eq!(
            ideal.edge_relation(Block::X, 0, 1).unwrap().render(&names),
            "x1^3 - x2^2"
        );
        assert_eq!(
            ideal.edge_relation(Block::Z, 0, 1).unwrap().render(&names),
            "z1^5 - z2^4"
        );
        assert!(ideal.edge_relation(Block::X, 0, 0).is_err());
        assert!(ideal.edge_relation(Block::Y, 0, 1).is_err());
        assert!(ideal.edge_relation(Block::Z, 0, 2).is_err());
    }
}
