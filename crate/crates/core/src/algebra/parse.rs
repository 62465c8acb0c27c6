//! Text syntax for polynomials and binomials.
//!
//! ```text
//! poly   := ['+' | '-'] term (('+' | '-') term)*
//! term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor := name ['^' digits]
//! ```
//!
//! Names are resolved against a [`VariableNames`] table. Whitespace is free.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::{Binomial, ExponentVector, Polynomial, VariableNames};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character `{ch}` at offset {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent `{0}` out of range")]
    ExponentRange(String),
    #[error("`{0}` is not a pure difference of two monomials")]
    NotABinomial(String),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn error(&self) -> ParseError {
        match self.peek() {
            Some(ch) => ParseError::UnexpectedChar { ch, pos: self.pos },
            None => ParseError::UnexpectedEnd,
        }
    }
}

pub fn parse_polynomial(src: &str, names: &VariableNames) -> Result<Polynomial, ParseError> {
    let nvars = names.len();
    let mut cur = Cursor { src, pos: 0 };
    let mut poly = Polynomial::zero(nvars);
    let mut first = true;
    loop {
        cur.skip_ws();
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            break;
        };
        first = false;
        let (coeff, exp) = parse_term(&mut cur, names)?;
        poly.add_term(exp, if negative { -coeff } else { coeff });
    }
    cur.skip_ws();
    if cur.pos != src.len() {
        return Err(cur.error());
    }
    if first {
        return Err(ParseError::UnexpectedEnd);
    }
    Ok(poly)
}

fn parse_term(
    cur: &mut Cursor<'_>,
    names: &VariableNames,
) -> Result<(BigInt, ExponentVector), ParseError> {
    let nvars = names.len();
    let mut coeff = BigInt::one();
    let mut exp = ExponentVector::zeros(nvars);
    cur.skip_ws();
    let digits = cur.take_while(|c| c.is_ascii_digit());
    let mut need_factor = true;
    if !digits.is_empty() {
        coeff = digits
            .parse::<BigInt>()
            .map_err(|_| ParseError::ExponentRange(digits.into()))?;
        if !cur.eat('*') {
            return Ok((coeff, exp));
        }
    }
    while need_factor {
        cur.skip_ws();
        let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() || name.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(cur.error());
        }
        let var = names
            .index_of(name)
            .ok_or_else(|| ParseError::UnknownVariable(name.to_string()))?;
        let mut power = 1u32;
        if cur.eat('^') {
            cur.skip_ws();
            let p = cur.take_while(|c| c.is_ascii_digit());
            if p.is_empty() {
                return Err(cur.error());
            }
            power = p
                .parse::<u32>()
                .map_err(|_| ParseError::ExponentRange(p.to_string()))?;
        }
        let mut step = vec![0u32; nvars];
        step[var] = power;
        exp = exp
            .checked_add(&ExponentVector::new(step))
            .map_err(|_| ParseError::ExponentRange(name.to_string()))?;
        need_factor = cur.eat('*');
    }
    Ok((coeff, exp))
}

/// Parses `m1 - m2` where both sides are monomials with coefficient one.
pub fn parse_binomial(src: &str, names: &VariableNames) -> Result<Binomial, ParseError> {
    let poly = parse_polynomial(src, names)?;
    let not_binomial = || ParseError::NotABinomial(src.trim().to_string());
    if poly.len() != 2 {
        return Err(not_binomial());
    }
    let mut plus = None;
    let mut minus = None;
    for (e, c) in poly.terms() {
        if *c == BigInt::one() {
            plus = Some(e.clone());
        } else if *c == -BigInt::one() {
            minus = Some(e.clone());
        }
    }
    match (plus, minus) {
        (Some(p), Some(m)) => Binomial::new(p, m).map_err(|_| not_binomial()),
        _ => Err(not_binomial()),
    }
}

/// Parses a single monomial such as `x1^2*x3` (coefficient allowed).
pub fn parse_monomial(src: &str, names: &VariableNames) -> Result<ExponentVector, ParseError> {
    let poly = parse_polynomial(src, names)?;
    match poly.as_monomial() {
        Some(m) => Ok(m.exp),
        None => Err(ParseError::NotABinomial(src.trim().to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names5() -> VariableNames {
        VariableNames::custom(
            ["x", "y", "z", "w", "t"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        )
    }

    #[test]
    fn parses_paper_style_binomials() {
        let names = names5();
        let b = parse_binomial("y^2*t^6 - z^3*w^3", &names).unwrap();
        assert_eq!(b.plus().as_slice(), &[0, 2, 0, 0, 6]);
        assert_eq!(b.minus().as_slice(), &[0, 0, 3, 3, 0]);
        let b = parse_binomial("x^3-y^2", &names).unwrap();
        assert_eq!(b.render(&names), "x^3 - y^2");
    }

    #[test]
    fn parses_coefficients_and_signs() {
        let names = VariableNames::indexed(4);
        let p = parse_polynomial("-x3^2 + 2*x2*x4", &names).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.render(&names), "2*x2*x4 - x3^2");
        let c = parse_polynomial(" 3 ", &names).unwrap();
        assert_eq!(c, Polynomial::constant(4, 3));
    }

    #[test]
    fn rejects_garbage() {
        let names = VariableNames::indexed(2);
        assert!(parse_polynomial("", &names).is_err());
        assert!(parse_polynomial("x1 +", &names).is_err());
        assert!(parse_polynomial("x3", &names).is_err());
        assert!(parse_polynomial("x1^", &names).is_err());
        assert!(parse_polynomial("x1^99999999999", &names).is_err());
        assert!(parse_polynomial("x1^4000000000*x1^4000000000", &names).is_err());
        assert!(parse_binomial("x1 - x1", &names).is_err());
        assert!(parse_binomial("2*x1 - x2", &names).is_err());
        assert!(parse_binomial("x1 + x2", &names).is_err());
    }
}
