//! Text formats: comma-separated integer lists, exact rationals and edge lists.

use std::path::Path;

use catermin_core::{Caterpillar, DegreeSequence, MatchingPolynomial, Rational, ReducedDegreeSequence, Tree};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot parse `{token}`: {reason}")]
    Token { token: String, reason: String },
    #[error("{path}: line {line}: cannot parse `{token}`: {reason}")]
    Line {
        path: String,
        line: usize,
        token: String,
        reason: String,
    },
    #[error("{0}")]
    Invalid(#[from] catermin_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn bad(token: &str, reason: impl Into<String>) -> FormatError {
    FormatError::Token {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// `4,2,3` → `[4, 2, 3]`. Whitespace around entries is ignored.
pub fn parse_usize_list(text: &str) -> Result<Vec<usize>, FormatError> {
    if text.trim().is_empty() {
        return Err(bad(text, "empty list"));
    }
    text.split(',')
        .map(|token| {
            let token = token.trim();
            token.parse::<usize>().map_err(|_| bad(token, "expected a non-negative integer"))
        })
        .collect()
}

pub fn parse_spine(text: &str) -> Result<Caterpillar, FormatError> {
    Ok(Caterpillar::from_spine(&parse_usize_list(text)?)?)
}

pub fn parse_reduced(text: &str) -> Result<ReducedDegreeSequence, FormatError> {
    Ok(ReducedDegreeSequence::new(parse_usize_list(text)?)?)
}

pub fn parse_full(text: &str) -> Result<DegreeSequence, FormatError> {
    Ok(DegreeSequence::new(parse_usize_list(text)?)?)
}

/// `p/q` or an integer. Decimal notation is rejected so every sample stays exact.
pub fn parse_rational(token: &str) -> Result<Rational, FormatError> {
    let token = token.trim();
    let int = |s: &str| -> Result<BigInt, FormatError> {
        if s.contains(['.', 'e', 'E']) {
            return Err(bad(token, "decimal numbers are not accepted; write p/q"));
        }
        s.trim().parse::<BigInt>().map_err(|_| bad(token, "expected an integer or p/q"))
    };
    match token.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(bad(token, "zero denominator"));
            }
            Ok(Rational::new(int(p)?, q))
        }
        None => Ok(Rational::from_integer(int(token)?)),
    }
}

/// Comma-separated positive rationals.
pub fn parse_x_list(text: &str) -> Result<Vec<Rational>, FormatError> {
    text.split(',')
        .map(|token| {
            let x = parse_rational(token)?;
            if !x.is_positive() {
                return Err(bad(token.trim(), "sample points must be positive"));
            }
            Ok(x)
        })
        .collect()
}

/// One edge `u v` (or `u,v`) per line with 0-based labels; `#` starts a
/// comment. The vertex count is one more than the largest label.
pub fn parse_edge_list(text: &str, path: &str) -> Result<Tree, FormatError> {
    let mut edges = Vec::new();
    let mut max_label = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
        let fail = |token: &str, reason: &str| FormatError::Line {
            path: path.to_string(),
            line: index + 1,
            token: token.to_string(),
            reason: reason.to_string(),
        };
        if tokens.len() != 2 {
            return Err(fail(line, "expected exactly two vertex labels"));
        }
        let mut ends = [0usize; 2];
        for (slot, token) in ends.iter_mut().zip(&tokens) {
            *slot = token.parse().map_err(|_| fail(token, "expected a non-negative integer label"))?;
        }
        max_label = max_label.max(ends[0]).max(ends[1]);
        edges.push((ends[0], ends[1]));
    }
    let n = if edges.is_empty() { 1 } else { max_label + 1 };
    Ok(Tree::new(n, edges)?)
}

pub fn read_edge_list(path: &Path) -> Result<Tree, FormatError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_edge_list(&text, &shown)
}

/// Coefficients as decimal strings, lowest degree first: `["1","7","11"]`.
pub fn poly_json(p: &MatchingPolynomial) -> serde_json::Value {
    serde_json::Value::from(p.to_decimal_strings())
}

/// Decimal expansion of `x` rounded to `digits` places after the point.
pub fn rational_decimal(x: &Rational, digits: usize) -> String {
    let negative = x.is_negative();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.abs() * Rational::from_integer(scale.clone())).round().to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if negative && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>digits$}")
    }
}
