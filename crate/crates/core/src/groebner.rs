//! Gröbner bases of binomial ideals.
//!
//! Every polynomial handled here is a pure difference of monomials. An
//! S-polynomial of two such binomials is again one, and reducing a monomial
//! by a binomial yields a single monomial, so the whole Buchberger loop runs on
//! pairs of exponent vectors without coefficients.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use thiserror::Error;

use crate::algebra::{Binomial, ExponentVector, Polynomial, TermOrder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("binomial {0:?} is not homogeneous for the grading")]
    NotHomogeneous(Binomial),
    #[error("grading has {got} weights for {nvars} variables")]
    GradingLength { got: usize, nvars: usize },
}

/// A reduced Gröbner basis, elements sorted by increasing leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    /// Normal form of the monomial `x^exp`, itself a monomial.
    pub fn reduce_monomial(&self, exp: &ExponentVector) -> ExponentVector {
        reduce_monomial(exp, &self.elements)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(p.nvars());
        for (e, c) in p.terms() {
            out.add_term(self.reduce_monomial(e), c.clone());
        }
        out
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_binomial(&self, b: &Binomial) -> bool {
        self.reduce_monomial(b.plus()) == self.reduce_monomial(b.minus())
    }

    /// Drops a basis element; only meant for fault-injection tests.
    #[doc(hidden)]
    pub fn without_element(&self, idx: usize) -> Self {
        let mut elements = self.elements.clone();
        elements.remove(idx);
        Self {
            order: self.order.clone(),
            elements,
        }
    }
}

fn reduce_monomial(exp: &ExponentVector, basis: &[Binomial]) -> ExponentVector {
    let mut m = exp.clone();
    while let Some(g) = basis.iter().find(|g| g.plus().divides(&m)) {
        m = m.replace(g.plus(), g.minus());
    }
    m
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest lcm first; pairs with coprime leading terms
/// and pairs covered by a chain through a third element are skipped.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> GroebnerBasis {
    let mut state = State {
        basis: Vec::new(),
        queue: BinaryHeap::new(),
        pending: HashSet::new(),
        order,
    };
    for g in gens {
        let a = reduce_monomial(g.plus(), &state.basis);
        let b = reduce_monomial(g.minus(), &state.basis);
        if let Some(new) = Binomial::ordered(a, b, order) {
            state.push(new);
        }
    }

    while let Some(Reverse((_, i, j))) = state.queue.pop() {
        state.pending.remove(&(i, j));
        let (gi, gj) = (&state.basis[i], &state.basis[j]);
        let lcm = gi.plus().lcm(gj.plus());
        if state.chain_criterion(i, j, &lcm) {
            continue;
        }
        let left = lcm.replace(gi.plus(), gi.minus());
        let right = lcm.replace(gj.plus(), gj.minus());
        let a = reduce_monomial(&left, &state.basis);
        let b = reduce_monomial(&right, &state.basis);
        if let Some(new) = Binomial::ordered(a, b, order) {
            state.push(new);
        }
    }
    interreduce(state.basis, order)
}

struct State<'a> {
    basis: Vec<Binomial>,
    queue: BinaryHeap<Reverse<(Vec<i64>, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
    order: &'a TermOrder,
}

impl State<'_> {
    fn push(&mut self, new: Binomial) {
        let k = self.basis.len();
        for (i, g) in self.basis.iter().enumerate() {
            if g.plus().is_coprime(new.plus()) {
                continue;
            }
            let key = self.order.sort_key(&g.plus().lcm(new.plus()));
            self.queue.push(Reverse((key, i, k)));
            self.pending.insert((i, k));
        }
        self.basis.push(new);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    // Buchberger's second criterion: S(i,j) reduces to zero when some third
    // leading term divides lcm(i,j) and both S(i,k) and S(j,k) are already handled.
    fn chain_criterion(&self, i: usize, j: usize, lcm: &ExponentVector) -> bool {
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.plus().divides(lcm)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }
}

fn interreduce(mut basis: Vec<Binomial>, order: &TermOrder) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(a.plus(), b.plus()));
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.plus().divides(g.plus())) {
            minimal.push(g);
        }
    }
    let leads: Vec<Binomial> = minimal.clone();
    let mut elements: Vec<Binomial> = minimal
        .into_iter()
        .map(|g| {
            let tail = reduce_monomial(g.minus(), &leads);
            Binomial::new(g.plus().clone(), tail).expect("tail is smaller than the leading term")
        })
        .collect();
    elements.sort_by(|a, b| order.cmp(a.plus(), b.plus()));
    GroebnerBasis {
        order: order.clone(),
        elements,
    }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

pub fn ideal_member(p: &Polynomial, gb: &GroebnerBasis) -> bool {
    gb.contains(p)
}

fn check_homogeneous(gens: &[Binomial], grading: &[u64]) -> Result<(), GroebnerError> {
    let degree = |e: &ExponentVector| -> u128 {
        e.as_slice()
            .iter()
            .zip(grading)
            .map(|(&k, &w)| u128::from(k) * u128::from(w))
            .sum()
    };
    for g in gens {
        if g.nvars() != grading.len() {
            return Err(GroebnerError::GradingLength {
                got: grading.len(),
                nvars: g.nvars(),
            });
        }
        if degree(g.plus()) != degree(g.minus()) {
            return Err(GroebnerError::NotHomogeneous(g.clone()));
        }
    }
    Ok(())
}

/// Generators of `I : x_var^inf` from a basis of `I`.
///
/// The ideal must be homogeneous for the positive `grading`. Under the graded
/// reverse lexicographic order with `x_var` last, `x_var` divides a basis
/// element as soon as it divides its leading term; dividing each element by
/// its common power of `x_var` therefore gives generators of the saturation.
fn saturation_generators(
    gens: &[Binomial],
    var: usize,
    grading: &[u64],
) -> Result<Vec<Binomial>, GroebnerError> {
    check_homogeneous(gens, grading)?;
    let n = grading.len();
    let ranking: Vec<usize> = (0..n).filter(|&v| v != var).chain([var]).collect();
    let revlex = TermOrder::weighted_revlex(grading.to_vec(), ranking).map_err(|_| {
        GroebnerError::GradingLength {
            got: grading.len(),
            nvars: n,
        }
    })?;
    let last = buchberger(gens, &revlex);
    Ok(last
        .elements()
        .iter()
        .map(|g| {
            let k = g.plus().get(var).min(g.minus().get(var));
            let common = ExponentVector::unit(n, var).scaled(k);
            let plus = g.plus().checked_sub(&common).expect("common factor");
            let minus = g.minus().checked_sub(&common).expect("common factor");
            Binomial::new(plus, minus).expect("sides stay distinct")
        })
        .collect())
}

/// Gröbner basis of `I : x_var^inf`, in the order of `gb`.
pub fn saturate_variable(
    gb: &GroebnerBasis,
    var: usize,
    grading: &[u64],
) -> Result<GroebnerBasis, GroebnerError> {
    Ok(buchberger(
        &saturation_generators(gb.elements(), var, grading)?,
        gb.order(),
    ))
}

/// Saturation by the product of all variables.
///
/// `(I : x_1^inf) : x_2^inf = I : (x_1 x_2)^inf`, so one pass over the
/// variables suffices.
pub fn saturate_all(gb: &GroebnerBasis, grading: &[u64]) -> Result<GroebnerBasis, GroebnerError> {
    let mut gens = gb.elements().to_vec();
    for var in 0..gb.nvars() {
        gens = saturation_generators(&gens, var, grading)?;
    }
    Ok(buchberger(&gens, gb.order()))
}

/// Ideal equality through reduced Gröbner bases in a common order.
pub fn same_ideal(a: &[Binomial], b: &[Binomial], order: &TermOrder) -> bool {
    buchberger(a, order) == buchberger(b, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_binomial;
    use crate::algebra::VariableNames;

    fn bins(src: &[&str], n: usize) -> Vec<Binomial> {
        let names = VariableNames::indexed(n);
        src.iter()
            .map(|s| parse_binomial(s, &names).unwrap())
            .collect()
    }

    fn render(gb: &GroebnerBasis) -> Vec<String> {
        let names = VariableNames::indexed(gb.nvars());
        gb.elements().iter().map(|b| b.render(&names)).collect()
    }

    #[test]
    fn twisted_cubic_is_already_a_basis() {
        let gens = bins(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"], 4);
        let gb = buchberger(&gens, &TermOrder::lex(4));
        assert_eq!(
            render(&gb),
            vec!["x2*x4 - x3^2", "x1*x4 - x2*x3", "x1*x3 - x2^2"]
        );
    }

    #[test]
    fn single_binomial_and_linear_chain() {
        let gb = buchberger(&bins(&["x1^2 - x2^3"], 2), &TermOrder::lex(2));
        assert_eq!(render(&gb), vec!["x1^2 - x2^3"]);
        let gb = buchberger(&bins(&["x1 - x2", "x2 - x3"], 3), &TermOrder::lex(3));
        assert_eq!(render(&gb), vec!["x2 - x3", "x1 - x3"]);
    }

    #[test]
    fn normal_forms() {
        let gens = bins(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"], 4);
        let gb = buchberger(&gens, &TermOrder::lex(4));
        let names = VariableNames::indexed(4);
        let p = crate::algebra::parse::parse_polynomial("x1*x3", &names).unwrap();
        assert_eq!(gb.normal_form(&p).render(&names), "x2^2");
        for g in &gens {
            assert!(gb.contains(&g.to_polynomial()));
        }
        assert_eq!(gb.normal_form(&Polynomial::one(4)), Polynomial::one(4));
        assert!(!gb.contains(&Polynomial::variable(4, 0)));
        assert!(gb.contains(&Polynomial::zero(4)));
    }

    #[test]
    fn saturation_removes_common_factor() {
        let gens = bins(&["x1*x2 - x1*x3"], 3);
        let gb = buchberger(&gens, &TermOrder::lex(3));
        let sat = saturate_variable(&gb, 0, &[1, 1, 1]).unwrap();
        assert_eq!(render(&sat), vec!["x2 - x3"]);
        let again = saturate_variable(&sat, 0, &[1, 1, 1]).unwrap();
        assert_eq!(again, sat);
        assert!(saturate_variable(&gb, 0, &[1, 2, 1]).is_err());
    }

    #[test]
    fn lattice_basis_ideal_saturates_to_the_twisted_cubic() {
        let lattice = bins(&["x1*x3 - x2^2", "x2*x4 - x3^2"], 4);
        let gb = buchberger(&lattice, &TermOrder::degrevlex(4));
        let sat = saturate_all(&gb, &[1, 1, 1, 1]).unwrap();
        let expected = bins(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"], 4);
        assert!(same_ideal(sat.elements(), &expected, &TermOrder::lex(4)));
        assert!(!same_ideal(gb.elements(), &expected, &TermOrder::lex(4)));
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let a = bins(&["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"], 4);
        let b = bins(
            &[
                "x1*x3 - x2^2",
                "x1*x4 - x2*x3",
                "x2*x4 - x3^2",
                "x1^2*x4 - x2^3",
            ],
            4,
        );
        assert_eq!(
            buchberger(&a, &TermOrder::lex(4)),
            buchberger(&b, &TermOrder::lex(4))
        );
    }
}
