//! The multiplication-table text format.
//!
//! ```text
//! # subsets of {x1, x2} under intersection
//! order 4
//! 0 a1 a2 1
//! 0 0  0  0
//! 0 a1 0  a1
//! 0 0  a2 a2
//! 0 a1 a2 1
//! ```
//!
//! The first significant token pair is `order <n>`, followed by `n` unique
//! element labels, followed by `n` rows of `n` labels giving the table
//! row-major.  Whitespace (including line breaks) is insignificant beyond
//! separating tokens, and `#` starts a comment that runs to the end of the
//! line.  Two labels are reserved: `0` must appear and names the zero, and
//! `1`, when present, must name a unity.  The declared zero may sit at any
//! position; the parsed semigroup is re-indexed so it lands at element `0`.

use super::{CayleySemigroup, ValidationError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expected `order <n>` at the start, found `{found}`")]
    MissingOrderHeader { found: String },
    #[error("order `{found}` is not a positive integer")]
    BadOrder { found: String },
    #[error("expected {expected} tokens ({context}), found {found}")]
    TooFewTokens {
        expected: usize,
        found: usize,
        context: &'static str,
    },
    #[error("{extra} unexpected trailing tokens after the table, starting with `{first}`")]
    TrailingTokens { extra: usize, first: String },
    #[error("label `{label}` is declared twice")]
    DuplicateLabel { label: String },
    #[error("no element is labeled `0`; the zero label is required")]
    MissingZeroLabel,
    #[error("table entry `{label}` at row {row}, column {column} is not a declared label")]
    UnknownLabel {
        label: String,
        row: usize,
        column: usize,
    },
    #[error("the element labeled `1` is not a unity")]
    UnityNotIdentity,
    #[error("table violates the semigroup axioms: {}", format_violations(.0))]
    Invalid(Vec<ValidationError>),
}

fn format_violations(errors: &[ValidationError]) -> String {
    let mut out = errors
        .iter()
        .take(5)
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("; ");
    if errors.len() > 5 {
        out.push_str(&format!("; and {} more", errors.len() - 5));
    }
    out
}

/// Strips comments and splits the input into significant tokens.
fn tokenize(input: &str) -> Vec<&str> {
    input
        .lines()
        .map(|line| match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        })
        .flat_map(str::split_whitespace)
        .collect()
}

/// Parses and validates a multiplication table in the text format.
pub fn parse_cayley_table(input: &str) -> Result<CayleySemigroup, ParseError> {
    let tokens = tokenize(input);
    if tokens.first() != Some(&"order") {
        return Err(ParseError::MissingOrderHeader {
            found: tokens.first().unwrap_or(&"<end of input>").to_string(),
        });
    }
    let order_token = tokens.get(1).ok_or(ParseError::BadOrder {
        found: "<end of input>".to_owned(),
    })?;
    let order: usize =
        order_token
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| ParseError::BadOrder {
                found: order_token.to_string(),
            })?;

    let expected = 2 + order + order * order;
    if tokens.len() < expected {
        let context = if tokens.len() < 2 + order {
            "order header plus one label per element"
        } else {
            "order header, labels, and one full table row per element"
        };
        return Err(ParseError::TooFewTokens {
            expected,
            found: tokens.len(),
            context,
        });
    }
    if tokens.len() > expected {
        return Err(ParseError::TrailingTokens {
            extra: tokens.len() - expected,
            first: tokens[expected].to_string(),
        });
    }

    let labels: Vec<String> = tokens[2..2 + order].iter().map(|t| t.to_string()).collect();
    let mut index_of = std::collections::HashMap::new();
    for (i, label) in labels.iter().enumerate() {
        if index_of.insert(label.as_str(), i).is_some() {
            return Err(ParseError::DuplicateLabel {
                label: label.clone(),
            });
        }
    }
    let zero_index = *index_of.get("0").ok_or(ParseError::MissingZeroLabel)?;

    let mut table = vec![vec![0usize; order]; order];
    for (pos, token) in tokens[2 + order..].iter().enumerate() {
        let (row, column) = (pos / order, pos % order);
        table[row][column] =
            index_of
                .get(token)
                .copied()
                .ok_or_else(|| ParseError::UnknownLabel {
                    label: token.to_string(),
                    row,
                    column,
                })?;
    }

    let s =
        CayleySemigroup::validate(&table, zero_index, Some(labels)).map_err(ParseError::Invalid)?;
    // `1` is reserved for a unity; validation already located the identity
    // (if any), so the check is a straight comparison.
    if let Some(one) = (0..s.order()).find(|&i| s.label(i) == Some("1")) {
        if s.identity_index() != Some(one) {
            return Err(ParseError::UnityNotIdentity);
        }
    }
    Ok(s)
}

/// Renders a semigroup in the text format.
///
/// Uses the attached labels when present; otherwise synthesizes `0` for the
/// zero, `1` for the unity and `e<i>` for everything else, so the output is
/// always re-parseable.
pub fn write_cayley_table(s: &CayleySemigroup) -> String {
    let label = |i: usize| match s.label(i) {
        Some(l) => l.to_owned(),
        None if i == 0 => "0".to_owned(),
        None if s.identity_index() == Some(i) => "1".to_owned(),
        None => format!("e{i}"),
    };
    let order = s.order();
    let mut out = format!("order {order}\n");
    let header: Vec<String> = (0..order).map(label).collect();
    out.push_str(&header.join(" "));
    out.push('\n');
    for i in 0..order {
        let row: Vec<String> = (0..order).map(|j| label(s.product(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
