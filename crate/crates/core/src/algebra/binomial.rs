use std::cmp::Ordering;

use num_bigint::BigInt;

use super::{AlgebraError, ExponentVector, Polynomial, TermOrder, VariableNames};

/// The binomial `x^plus - x^minus`.
///
/// Binomials built by the Gröbner machinery are oriented so that `plus` is the
/// leading exponent of the active order; [`Binomial::oriented`] restores that
/// invariant after a change of order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Binomial {
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Result<Self, AlgebraError> {
        if plus.len() != minus.len() {
            return Err(AlgebraError::LengthMismatch {
                left: plus.len(),
                right: minus.len(),
            });
        }
        if plus == minus {
            return Err(AlgebraError::DegenerateBinomial);
        }
        Ok(Self { plus, minus })
    }

    /// `x^v+ - x^v-` for an integer vector `v`.
    pub fn from_signed(v: &[i64]) -> Result<Self, AlgebraError> {
        let (plus, minus) = ExponentVector::from_signed(v);
        Self::new(plus, minus)
    }

    /// Oriented binomial `x^a - x^b` with the larger side first, `None` if `a == b`.
    pub fn ordered(a: ExponentVector, b: ExponentVector, order: &TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Self { plus: a, minus: b }),
            Ordering::Less => Some(Self { plus: b, minus: a }),
            Ordering::Equal => None,
        }
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    pub fn nvars(&self) -> usize {
        self.plus.len()
    }

    /// Swaps the sides, which negates the polynomial.
    pub fn flipped(&self) -> Self {
        Self {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn is_oriented(&self, order: &TermOrder) -> bool {
        order.cmp(&self.plus, &self.minus) == Ordering::Greater
    }

    pub fn oriented(&self, order: &TermOrder) -> Self {
        if self.is_oriented(order) {
            self.clone()
        } else {
            self.flipped()
        }
    }

    /// Row of exponent differences `plus - minus`.
    pub fn difference(&self) -> Vec<i64> {
        self.plus.signed_diff(&self.minus)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars());
        p.add_term(self.plus.clone(), BigInt::from(1));
        p.add_term(self.minus.clone(), BigInt::from(-1));
        p
    }

    /// `d/dx_var (x^plus - x^minus)`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let n = self.nvars();
        let unit = ExponentVector::unit(n, var);
        let mut out = Polynomial::zero(n);
        if let Some(e) = self.plus.checked_sub(&unit) {
            out.add_term(e, BigInt::from(self.plus.get(var)));
        }
        if let Some(e) = self.minus.checked_sub(&unit) {
            out.add_term(e, -BigInt::from(self.minus.get(var)));
        }
        out
    }

    pub fn jacobian_row(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|v| self.derivative(v)).collect()
    }

    pub fn render(&self, names: &VariableNames) -> String {
        let side = |e: &ExponentVector| {
            let s = names.render_exponent(e);
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        format!("{} - {}", side(&self.plus), side(&self.minus))
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            plus: self.plus.permuted(perm),
            minus: self.minus.permuted(perm),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(p: &[u32], m: &[u32]) -> Binomial {
        Binomial::new(p.into(), m.into()).unwrap()
    }

    #[test]
    fn derivatives_match_the_printed_jacobian() {
        let n = 4;
        let f = bin(&[1, 0, 1, 0], &[0, 2, 0, 0]);
        assert_eq!(
            f.derivative(1),
            Polynomial::term(-2, ExponentVector::unit(n, 1))
        );
        assert!(f.derivative(3).is_zero());
        let g = bin(&[1, 0, 0, 1], &[0, 1, 1, 0]);
        assert_eq!(g.derivative(0), Polynomial::variable(n, 3));
    }

    #[test]
    fn degenerate_binomial_rejected() {
        assert!(Binomial::new([1u32, 1].as_slice().into(), [1u32, 1].as_slice().into()).is_err());
    }

    #[test]
    fn orientation_is_idempotent() {
        let o = TermOrder::lex(4);
        let f = bin(&[0, 2, 0, 0], &[1, 0, 1, 0]);
        let once = f.oriented(&o);
        assert_eq!(once.plus().as_slice(), &[1, 0, 1, 0]);
        assert_eq!(once.oriented(&o), once);
        assert_eq!(once.flipped().oriented(&o), once);
    }

    #[test]
    fn render_uses_names() {
        let f = bin(&[1, 0, 1, 0], &[0, 2, 0, 0]);
        assert_eq!(f.render(&VariableNames::indexed(4)), "x1*x3 - x2^2");
    }
}
