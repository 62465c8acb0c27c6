//! The JSON input document accepted by the command-line front end.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{OrderKind, VariableNames};
use crate::semigroup::{GeneratorSet, LatticePoint, SemigroupError, ValidatedSemigroup};
use crate::toric::Family;

/// Largest accepted absolute value of a generator coordinate.
pub const MAX_COORDINATE: i64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("invalid input document at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("generator {index} has coordinate {value} outside ±{MAX_COORDINATE}")]
    CoordinateRange { index: usize, value: i64 },
    #[error("{names} variable names given for {generators} generators")]
    NameCount { names: usize, generators: usize },
    #[error("invalid variable name {0:?}")]
    BadName(String),
    #[error("variable name {0:?} is used twice")]
    DuplicateName(String),
}

/// A run request: generators plus optional order, names and relation family.
///
/// ```
/// use toric_nash::input::InputSpec;
/// let spec = InputSpec::from_json(r#"{"generators": [[1,0],[1,1],[1,2],[1,3]]}"#).unwrap();
/// assert_eq!(spec.generators.len(), 4);
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub generators: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl InputSpec {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        let spec: InputSpec = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        spec.check()?;
        Ok(spec)
    }

    pub fn from_generators(pairs: &[(i64, i64)]) -> Self {
        Self {
            generators: pairs.iter().map(|&(u, v)| [u, v]).collect(),
            order: None,
            names: None,
            family: None,
        }
    }

    fn check(&self) -> Result<(), InputError> {
        for (index, g) in self.generators.iter().enumerate() {
            if let Some(&value) = g.iter().find(|c| c.abs() > MAX_COORDINATE) {
                return Err(InputError::CoordinateRange { index, value });
            }
        }
        if let Some(names) = &self.names {
            if names.len() != self.generators.len() {
                return Err(InputError::NameCount {
                    names: names.len(),
                    generators: self.generators.len(),
                });
            }
            let mut seen = std::collections::HashSet::new();
            for n in names {
                if !valid_name(n) {
                    return Err(InputError::BadName(n.clone()));
                }
                if !seen.insert(n.as_str()) {
                    return Err(InputError::DuplicateName(n.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, SemigroupError> {
        GeneratorSet::new(
            self.generators
                .iter()
                .map(|&[u, v]| LatticePoint::new(u, v))
                .collect(),
        )
    }

    pub fn order(&self) -> OrderKind {
        self.order.unwrap_or(OrderKind::Lex)
    }

    pub fn family(&self) -> Family {
        self.family.unwrap_or_default()
    }

    /// Names in canonical variable order; block names when none were given.
    pub fn variable_names(&self, vs: &ValidatedSemigroup) -> VariableNames {
        match &self.names {
            Some(names) => {
                VariableNames::custom(vs.permutation().iter().map(|&i| names[i].clone()).collect())
            }
            None => VariableNames::blocks(vs.l(), vs.m(), vs.n()),
        }
    }
}
