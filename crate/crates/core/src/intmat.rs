//! Small exact integer linear algebra: kernels, Hermite forms, rank, determinant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn checked(x: Option<i128>) -> i128 {
    x.expect("integer overflow in lattice arithmetic")
}

fn to_i64(x: i128) -> i64 {
    i64::try_from(x).expect("lattice entry does not fit in i64")
}

/// Integer kernel basis of an `m x s` matrix.
///
/// Unimodular column operations bring the matrix to column echelon form while
/// the same operations are applied to the identity; the columns of the
/// transform past the last pivot span the full integer kernel.
pub fn kernel_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(s) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    // u[c] is column c of the transform
    let mut u: Vec<Vec<i128>> = (0..s)
        .map(|c| (0..s).map(|r| i128::from(r == c)).collect())
        .collect();
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == s {
            break;
        }
        // smallest nonzero entry of row r among the unreduced columns
        while let Some(best) = (pivot..s)
            .filter(|&c| a[r][c] != 0)
            .min_by_key(|&c| a[r][c].abs())
        {
            swap_cols(&mut a, &mut u, pivot, best);
            let mut done = true;
            for c in pivot + 1..s {
                if a[r][c] == 0 {
                    continue;
                }
                let q = a[r][c].div_euclid(a[r][pivot]);
                for row in a.iter_mut() {
                    row[c] = checked(row[c].checked_sub(checked(q.checked_mul(row[pivot]))));
                }
                let (lo, hi) = u.split_at_mut(c);
                for (x, y) in hi[0].iter_mut().zip(&lo[pivot]) {
                    *x = checked(x.checked_sub(checked(q.checked_mul(*y))));
                }
                if a[r][c] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][pivot] != 0 {
            pivot += 1;
        }
    }
    u[pivot..]
        .iter()
        .map(|col| {
            let g = col.iter().fold(0i128, |g, &x| g.gcd(&x));
            let sign = col.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
            col.iter().map(|&x| to_i64(x / g * sign)).collect()
        })
        .collect()
}

fn swap_cols(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    u.swap(i, j);
}

/// Row Hermite normal form of an integer matrix, zero rows dropped.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`, so two
/// matrices span the same lattice iff their Hermite forms are equal.
pub fn hermite_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(s) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut top = 0;
    for col in 0..s {
        while let Some(best) = (top..a.len())
            .filter(|&r| a[r][col] != 0)
            .min_by_key(|&r| a[r][col].abs())
        {
            a.swap(top, best);
            let mut done = true;
            for r in top + 1..a.len() {
                if a[r][col] == 0 {
                    continue;
                }
                let q = a[r][col].div_euclid(a[top][col]);
                let (hi, lo) = a.split_at_mut(r);
                for (x, y) in lo[0].iter_mut().zip(&hi[top]) {
                    *x = checked(x.checked_sub(checked(q.checked_mul(*y))));
                }
                if a[r][col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < a.len() && a[top][col] != 0 {
            if a[top][col] < 0 {
                for x in a[top].iter_mut() {
                    *x = -*x;
                }
            }
            let p = a[top][col];
            for r in 0..top {
                let q = a[r][col].div_euclid(p);
                if q != 0 {
                    let (hi, lo) = a.split_at_mut(top);
                    for (x, y) in hi[r].iter_mut().zip(&lo[0]) {
                        *x = checked(x.checked_sub(checked(q.checked_mul(*y))));
                    }
                }
            }
            top += 1;
        }
    }
    a.truncate(top);
    a.into_iter()
        .map(|r| r.into_iter().map(to_i64).collect())
        .collect()
}

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Rank over the rationals, by fraction-free elimination.
pub fn rank(mat: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[col] - &factor * y;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix (Bareiss).
pub fn determinant(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::from(1);
    }
    assert!(
        mat.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    let mut a = mat.to_vec();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Gcd of all `2 x 2` minors of the matrix with the given columns.
pub fn gcd_of_two_minors(points: &[(i64, i64)]) -> i64 {
    let mut g: i128 = 0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let d = i128::from(p.0) * i128::from(q.1) - i128::from(p.1) * i128::from(q.0);
            g = g.gcd(&d);
        }
    }
    to_i64(g.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_vec(rows: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
        rows.iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn kernel_of_the_rational_normal_curve_matrix() {
        let a = vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]];
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(mat_vec(&a, v), vec![0, 0]);
        }
        let expected = vec![vec![1, -2, 1, 0], vec![0, 1, -2, 1]];
        assert_eq!(hermite_rows(&k), hermite_rows(&expected));
    }

    #[test]
    fn kernel_of_full_rank_square_is_empty() {
        assert!(kernel_basis(&[vec![1, 1], vec![0, 1]]).is_empty());
    }

    #[test]
    fn hermite_is_canonical() {
        let a = vec![vec![1, -2, 1, 0], vec![0, 1, -2, 1]];
        let b = vec![vec![1, -1, -1, 1], vec![0, 1, -2, 1]];
        assert_eq!(hermite_rows(&a), hermite_rows(&b));
        assert_eq!(hermite_rows(&a), vec![vec![1, 0, -3, 2], vec![0, 1, -2, 1]]);
    }

    #[test]
    fn rank_and_determinant() {
        let m = to_big(&[vec![1, -2, 1, 0], vec![1, -1, -1, 1], vec![0, 1, -2, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&to_big(&[vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(rank(&to_big(&[vec![0, 2], vec![0, 3]])), 1);
        assert_eq!(
            determinant(&to_big(&[vec![1, -2], vec![1, -1]])),
            BigInt::from(1)
        );
        assert_eq!(
            determinant(&to_big(&[vec![0, 1], vec![1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&to_big(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]])),
            BigInt::from(0)
        );
    }

    #[test]
    fn minors_gcd() {
        assert_eq!(gcd_of_two_minors(&[(1, 0), (1, 3)]), 3);
        assert_eq!(gcd_of_two_minors(&[(1, 0), (1, 1)]), 1);
        assert_eq!(gcd_of_two_minors(&[(2, 0), (0, 2)]), 4);
        assert_eq!(
            gcd_of_two_minors(&[(2, 0), (3, 0), (2, 6), (0, 4), (0, 5)]),
            1
        );
    }
}
