use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, ExponentVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Degrevlex,
}

impl OrderKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Degrevlex => "degrevlex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" => Ok(OrderKind::Degrevlex),
            other => Err(format!(
                "unknown term order `{other}` (expected lex or degrevlex)"
            )),
        }
    }
}

/// A monomial order on exponent vectors of a fixed length.
///
/// `ranking[0]` is the largest variable. Degree-based orders carry a weight per
/// variable; the usual degrevlex has all weights equal to one, and the
/// saturation step uses the weights of a positive grading so that the
/// binomials it works with stay homogeneous.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
    weights: Vec<u64>,
}

impl TermOrder {
    /// Lex with `x_0 > x_1 > ... > x_{n-1}`.
    pub fn lex(nvars: usize) -> Self {
        Self {
            kind: OrderKind::Lex,
            ranking: (0..nvars).collect(),
            weights: vec![1; nvars],
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self {
            kind: OrderKind::Degrevlex,
            ranking: (0..nvars).collect(),
            weights: vec![1; nvars],
        }
    }

    pub fn of_kind(kind: OrderKind, nvars: usize) -> Self {
        match kind {
            OrderKind::Lex => Self::lex(nvars),
            OrderKind::Degrevlex => Self::degrevlex(nvars),
        }
    }

    /// Same kind and weights, new variable ranking (largest first).
    pub fn with_ranking(self, ranking: Vec<usize>) -> Result<Self, AlgebraError> {
        check_permutation(&ranking, self.ranking.len())?;
        Ok(Self { ranking, ..self })
    }

    /// Weighted reverse lexicographic order with the given ranking.
    pub fn weighted_revlex(weights: Vec<u64>, ranking: Vec<usize>) -> Result<Self, AlgebraError> {
        check_permutation(&ranking, weights.len())?;
        if weights.contains(&0) {
            return Err(AlgebraError::ZeroWeight);
        }
        Ok(Self {
            kind: OrderKind::Degrevlex,
            ranking,
            weights,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weighted_degree(&self, a: &ExponentVector) -> u64 {
        a.as_slice()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum()
    }

    /// A key whose lexicographic order agrees with [`TermOrder::cmp`].
    pub fn sort_key(&self, a: &ExponentVector) -> Vec<i64> {
        let a = a.as_slice();
        match self.kind {
            OrderKind::Lex => self.ranking.iter().map(|&v| i64::from(a[v])).collect(),
            OrderKind::Degrevlex => {
                let deg: u64 = a
                    .iter()
                    .zip(&self.weights)
                    .map(|(&e, &w)| u64::from(e) * w)
                    .sum();
                std::iter::once(deg as i64)
                    .chain(self.ranking.iter().rev().map(|&v| -i64::from(a[v])))
                    .collect()
            }
        }
    }

    pub fn compare(
        &self,
        a: &ExponentVector,
        b: &ExponentVector,
    ) -> Result<Ordering, AlgebraError> {
        if a.len() != b.len() || a.len() != self.nvars() {
            return Err(AlgebraError::LengthMismatch {
                left: a.len(),
                right: if a.len() == b.len() {
                    self.nvars()
                } else {
                    b.len()
                },
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Infallible comparison for vectors already known to have the right length.
    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        let (a, b) = (a.as_slice(), b.as_slice());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.ranking {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Degrevlex => {
                let da: u64 = a
                    .iter()
                    .zip(&self.weights)
                    .map(|(&e, &w)| u64::from(e) * w)
                    .sum();
                let db: u64 = b
                    .iter()
                    .zip(&self.weights)
                    .map(|(&e, &w)| u64::from(e) * w)
                    .sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &v in self.ranking.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        // smaller power of the smallest variable wins
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

fn check_permutation(ranking: &[usize], n: usize) -> Result<(), AlgebraError> {
    let mut seen = vec![false; n];
    if ranking.len() != n {
        return Err(AlgebraError::InvalidRanking);
    }
    for &v in ranking {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(AlgebraError::InvalidRanking);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn lex_prefers_first_variable() {
        let o = TermOrder::lex(2);
        assert_eq!(
            o.compare(&ev(&[1, 0]), &ev(&[0, 5])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        let o = TermOrder::degrevlex(2);
        assert_eq!(o.cmp(&ev(&[1, 1]), &ev(&[2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&ev(&[0, 3]), &ev(&[2, 0])), Ordering::Greater);
        // x1*x3 vs x2^2 in three variables
        let o3 = TermOrder::degrevlex(3);
        assert_eq!(o3.cmp(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn sort_key_agrees_with_cmp() {
        let vs: Vec<ExponentVector> = (0..27u32)
            .map(|k| ev(&[k % 3, (k / 3) % 3, k / 9]))
            .collect();
        let orders = [
            TermOrder::lex(3),
            TermOrder::degrevlex(3),
            TermOrder::weighted_revlex(vec![2, 3, 5], vec![2, 0, 1]).unwrap(),
        ];
        for o in &orders {
            for a in &vs {
                for b in &vs {
                    assert_eq!(o.sort_key(a).cmp(&o.sort_key(b)), o.cmp(a, b));
                }
            }
        }
    }

    #[test]
    fn equal_vectors_compare_equal() {
        for o in [TermOrder::lex(2), TermOrder::degrevlex(2)] {
            assert_eq!(
                o.compare(&ev(&[0, 0]), &ev(&[0, 0])).unwrap(),
                Ordering::Equal
            );
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let o = TermOrder::lex(2);
        assert!(matches!(
            o.compare(&ev(&[1, 0]), &ev(&[1, 0, 0])),
            Err(AlgebraError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ranking_must_be_a_permutation() {
        assert!(TermOrder::lex(3).with_ranking(vec![0, 0, 1]).is_err());
        assert!(TermOrder::lex(3).with_ranking(vec![2, 0, 1]).is_ok());
        assert!(TermOrder::weighted_revlex(vec![1, 0], vec![0, 1]).is_err());
    }

    #[test]
    fn ranking_changes_lex() {
        let o = TermOrder::lex(2).with_ranking(vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&ev(&[1, 0]), &ev(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn weighted_revlex_uses_weights() {
        let o = TermOrder::weighted_revlex(vec![3, 2], vec![0, 1]).unwrap();
        // x^2 (weight 6) vs y^3 (weight 6): tie broken on y, smaller y power wins
        assert_eq!(o.cmp(&ev(&[2, 0]), &ev(&[0, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[1, 0]), &ev(&[0, 1])), Ordering::Greater);
    }
}
