use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, ExponentVector, TermOrder, VariableNames};

/// A single nonzero term `coeff * x^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: BigInt,
    pub exp: ExponentVector,
}

impl Monomial {
    pub fn new(coeff: BigInt, exp: ExponentVector) -> Self {
        assert!(!coeff.is_zero(), "monomial coefficient must be nonzero");
        Self { coeff, exp }
    }

    pub fn render(&self, names: &VariableNames) -> String {
        Polynomial::from_monomial(self.clone()).render(names)
    }
}

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored; the empty map is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::zeros(nvars), c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn term(coeff: impl Into<BigInt>, exp: ExponentVector) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m.coeff, m.exp)
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        Self::term(1, ExponentVector::unit(nvars, var))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Adds `coeff * x^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: ExponentVector, coeff: BigInt) {
        assert_eq!(
            exp.len(),
            self.nvars,
            "term has the wrong number of variables"
        );
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }

    /// Partial derivative with respect to `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        let unit = ExponentVector::unit(self.nvars, var);
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k == 0 {
                continue;
            }
            let lowered = e.checked_sub(&unit).expect("exponent is positive");
            out.add_term(lowered, c * BigInt::from(k));
        }
        out
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::LengthMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    value *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Evaluation at a point with small integer entries.
    pub fn evaluate_i64(&self, point: &[i64]) -> Result<BigInt, AlgebraError> {
        let pt: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        self.evaluate(&pt)
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// The polynomial as a single monomial, if it has exactly one term.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Monomial::new(c.clone(), e.clone()))
    }

    /// Renders with terms in decreasing lex order of the raw exponent vectors.
    pub fn render(&self, names: &VariableNames) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let body = names.render_exponent(e);
            if body.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{abs}*{body}"));
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&VariableNames::indexed(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::from(v)
    }

    fn twisted_cubic_rel() -> Polynomial {
        // x1*x3 - x2^2
        Polynomial::term(1, ev(&[1, 0, 1, 0])).sub(&Polynomial::term(1, ev(&[0, 2, 0, 0])))
    }

    #[test]
    fn evaluation_on_the_surface_vanishes() {
        let f = twisted_cubic_rel();
        assert_eq!(f.evaluate_i64(&[1, 1, 1, 1]).unwrap(), BigInt::zero());
        assert_eq!(f.evaluate_i64(&[0, 0, 0, 1]).unwrap(), BigInt::zero());
        let g = Polynomial::term(2, ev(&[0, 1, 0, 1]));
        assert_eq!(g.evaluate_i64(&[0, 1, 0, 1]).unwrap(), BigInt::from(2));
        assert!(g.evaluate_i64(&[0, 1]).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = twisted_cubic_rel();
        assert!(f.sub(&f).is_zero());
        let mut p = Polynomial::zero(2);
        p.add_term(ev(&[1, 0]), BigInt::from(3));
        p.add_term(ev(&[1, 0]), BigInt::from(-3));
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn derivative_of_power() {
        let p = Polynomial::term(5, ev(&[3, 1]));
        let d = p.derivative(0);
        assert_eq!(d, Polynomial::term(15, ev(&[2, 1])));
        assert!(p
            .derivative(0)
            .derivative(0)
            .derivative(0)
            .derivative(0)
            .is_zero());
    }

    #[test]
    fn render_default_names() {
        let names = VariableNames::indexed(4);
        assert_eq!(twisted_cubic_rel().render(&names), "x1*x3 - x2^2");
        assert_eq!(
            Polynomial::term(-2, ev(&[0, 1, 0, 0])).render(&names),
            "-2*x2"
        );
        assert_eq!(Polynomial::constant(4, 7).render(&names), "7");
        assert_eq!(Polynomial::zero(4).render(&names), "0");
    }
}
