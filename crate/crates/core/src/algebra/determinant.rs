use std::collections::HashMap;

use super::{AlgebraError, Polynomial};

/// Exact determinant of a square matrix of polynomials.
///
/// Cofactor expansion row by row, memoized on the set of columns already used,
/// so an `n x n` matrix costs `O(n 2^n)` polynomial products instead of `n!`.
/// Zero entries are skipped and cancelled terms are dropped as they appear.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial, AlgebraError> {
    let n = m.len();
    if n == 0 {
        return Err(AlgebraError::EmptyMatrix);
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::NotSquare {
            rows: n,
            cols: m.iter().map(Vec::len).find(|&c| c != n).unwrap_or(n),
        });
    }
    if n > 24 {
        return Err(AlgebraError::MatrixTooLarge(n));
    }
    let nvars = m[0][0].nvars();

    // partial[mask] = signed sum over injective choices of columns in `mask`
    // for the first popcount(mask) rows.
    let mut partial: HashMap<u32, Polynomial> = HashMap::new();
    partial.insert(0, Polynomial::one(nvars));
    for row in m {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (&mask, acc) in &partial {
            for (col, entry) in row.iter().enumerate() {
                let bit = 1u32 << col;
                if mask & bit != 0 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let mut prod = acc.mul(entry);
                if inversions % 2 == 1 {
                    prod = prod.neg();
                }
                let slot = next
                    .entry(mask | bit)
                    .or_insert_with(|| Polynomial::zero(nvars));
                *slot = slot.add(&prod);
            }
        }
        next.retain(|_, p| !p.is_zero());
        partial = next;
    }
    let full = (1u32 << n) - 1;
    Ok(partial
        .remove(&full)
        .unwrap_or_else(|| Polynomial::zero(nvars)))
}
