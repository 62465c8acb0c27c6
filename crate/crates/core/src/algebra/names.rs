use super::ExponentVector;

/// Names used when printing monomials.
///
/// The engine always works with indices; names only affect rendering and
/// parsing. The default follows the block structure of the generators:
/// `x1..xl`, `y1..ym`, `z1..zn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableNames(Vec<String>);

impl VariableNames {
    pub fn indexed(nvars: usize) -> Self {
        Self((1..=nvars).map(|i| format!("x{i}")).collect())
    }

    pub fn blocks(l: usize, m: usize, n: usize) -> Self {
        let x = (1..=l).map(|i| format!("x{i}"));
        let y = (1..=m).map(|i| format!("y{i}"));
        let z = (1..=n).map(|i| format!("z{i}"));
        Self(x.chain(y).chain(z).collect())
    }

    pub fn custom(names: Vec<String>) -> Self {
        Self(names)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, var: usize) -> &str {
        &self.0[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Product of variable powers, e.g. `x1*x3^2`; empty for the unit monomial.
    pub fn render_exponent(&self, exp: &ExponentVector) -> String {
        exp.as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    self.0[i].clone()
                } else {
                    format!("{}^{}", self.0[i], k)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
