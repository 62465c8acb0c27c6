use std::fmt;

use serde::Serialize;

use super::AlgebraError;

/// Exponent vector of a monomial in `N` variables.
///
/// Exponents are fixed width; every sum goes through a checked add and an
/// overflow aborts with a diagnostic rather than wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn zeros(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// The exponent vector of the single variable `var`.
    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        Self(exps)
    }

    /// Splits an integer vector into its positive and negative parts.
    pub fn from_signed(v: &[i64]) -> (Self, Self) {
        let to_exp = |x: i64| u32::try_from(x).expect("exponent does not fit in u32");
        let plus = v.iter().map(|&x| to_exp(x.max(0))).collect();
        let minus = v.iter().map(|&x| to_exp((-x).max(0))).collect();
        (Self(plus), Self(minus))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when this is `e_i` for some variable `i`.
    pub fn is_unit(&self) -> bool {
        self.degree() == 1
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.len() != other.len() {
            return Err(AlgebraError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    /// Sum that aborts on overflow.
    pub fn add(&self, other: &Self) -> Self {
        match self.checked_add(other) {
            Ok(v) => v,
            Err(e) => panic!("exponent arithmetic failed: {e}"),
        }
    }

    /// `self - other`, or `None` when `other` does not divide `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// `self - divisor + addend`, the exponent left after one reduction step.
    pub fn replace(&self, divisor: &Self, addend: &Self) -> Self {
        let quotient = self
            .checked_sub(divisor)
            .expect("replace requires the divisor to divide the monomial");
        quotient.add(addend)
    }

    /// `k * self`, panicking on overflow.
    pub fn scaled(&self, k: u32) -> Self {
        Self(
            self.0
                .iter()
                .map(|&e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Componentwise difference as signed integers.
    pub fn signed_diff(&self, other: &Self) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    /// Support of the vector: indices with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self(perm.iter().map(|&p| self.0[p]).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl From<&[u32]> for ExponentVector {
    fn from(v: &[u32]) -> Self {
        Self(v.to_vec())
    }
}
