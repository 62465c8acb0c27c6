//! Exact arithmetic on monomials, binomials and integer polynomials.

mod binomial;
mod determinant;
mod exponent;
mod names;
mod order;
pub mod parse;
mod polynomial;

pub use binomial::Binomial;
pub use determinant::determinant;
pub use exponent::ExponentVector;
pub use names::VariableNames;
pub use order::{OrderKind, TermOrder};
pub use polynomial::{Monomial, Polynomial};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("binomial with identical sides")]
    DegenerateBinomial,
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("matrix of size {0} is too large for cofactor expansion")]
    MatrixTooLarge(usize),
    #[error("variable ranking is not a permutation")]
    InvalidRanking,
    #[error("order weights must be positive")]
    ZeroWeight,
}

/// `d/dx_var f` for a binomial `f`.
pub fn derivative(f: &Binomial, var: usize) -> Polynomial {
    f.derivative(var)
}

/// Exact evaluation of `p` at an integer point.
pub fn evaluate(p: &Polynomial, point: &[i64]) -> Result<num_bigint::BigInt, AlgebraError> {
    p.evaluate_i64(point)
}
