//! The `nary v1` algebra file format.
//!
//! ```text
//! nary v1
//! arity 3
//! dim 5
//! symmetry skew
//! # relations: [indices] = coeff*basis + ...
//! [1 2 3] = 1*4
//! [1 2 4] = 1*5
//! ```
//!
//! Lines are UTF-8 with LF endings; `#` starts a comment; whitespace within
//! a line is free. Indices are 1-based; coefficients are integers or `a/b`
//! fractions. Duplicate keys are summed. Serialization writes canonical
//! keys in sorted order, so `parse(serialize(x)) == x` field for field.

use crate::product::{NAryProduct, ProductError, Symmetry};
use crate::rational::{is_zero_vector, parse_rational, Rational};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        message: message.into(),
    })
}

struct Lines<'a> {
    content: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            content: text.lines().enumerate(),
        }
    }

    /// Next line that is not blank after comment stripping, with its 1-based
    /// number.
    fn next_significant(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.content.by_ref() {
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            if !stripped.trim().is_empty() {
                return Some((idx + 1, stripped));
            }
        }
        None
    }
}

fn expect_header(
    line_no: usize,
    line: &str,
    keyword: &str,
) -> Result<String, ParseError> {
    let mut parts = line.split_whitespace();
    match parts.next() {
        Some(k) if k == keyword => {}
        _ => return err(line_no, 1, format!("expected `{keyword} ...`")),
    }
    let value = match parts.next() {
        Some(v) => v.to_string(),
        None => return err(line_no, 1, format!("`{keyword}` needs a value")),
    };
    if parts.next().is_some() {
        return err(line_no, 1, format!("trailing tokens after `{keyword}`"));
    }
    Ok(value)
}

/// Parses an algebra file into a product, canonicalizing via the symmetry's
/// constructor. Index and alternation violations surface with the line they
/// came from.
pub fn parse(text: &str) -> Result<NAryProduct, ParseError> {
    let mut lines = Lines::new(text);

    let (ln, line) = match lines.next_significant() {
        Some(x) => x,
        None => return err(1, 1, "empty file; expected `nary v1`"),
    };
    if line.trim() != "nary v1" {
        return err(ln, 1, "expected `nary v1`");
    }

    let (ln, line) = lines
        .next_significant()
        .ok_or(ParseError {
            line: ln,
            col: 1,
            message: "missing `arity` line".into(),
        })?;
    let arity: usize = expect_header(ln, line, "arity")?
        .parse()
        .map_err(|_| ParseError {
            line: ln,
            col: 1,
            message: "arity must be an integer >= 2".into(),
        })?;
    if arity < 2 {
        return err(ln, 1, "arity must be at least 2");
    }

    let (ln, line) = lines.next_significant().ok_or(ParseError {
        line: ln,
        col: 1,
        message: "missing `dim` line".into(),
    })?;
    let dim: usize = expect_header(ln, line, "dim")?
        .parse()
        .map_err(|_| ParseError {
            line: ln,
            col: 1,
            message: "dim must be an integer >= 1".into(),
        })?;
    if dim == 0 {
        return err(ln, 1, "dim must be at least 1");
    }

    let (ln, line) = lines.next_significant().ok_or(ParseError {
        line: ln,
        col: 1,
        message: "missing `symmetry` line".into(),
    })?;
    let symmetry_word = expect_header(ln, line, "symmetry")?;
    let symmetry = Symmetry::parse(&symmetry_word).ok_or(ParseError {
        line: ln,
        col: 1,
        message: format!("unknown symmetry `{symmetry_word}`"),
    })?;

    let mut raw: Vec<(Vec<usize>, Vec<Rational>)> = Vec::new();
    while let Some((ln, line)) = lines.next_significant() {
        raw.push(parse_relation(ln, line, arity, dim)?);
    }

    NAryProduct::make(arity, dim, symmetry, &raw).map_err(|e| {
        // locate the offending relation for index/alternation errors
        let line = match &e {
            ProductError::RepeatedIndexNonzero(tuple) => relation_line(text, tuple),
            ProductError::IndexOutOfRange { .. } => 1,
            _ => 1,
        };
        ParseError {
            line,
            col: 1,
            message: e.to_string(),
        }
    })
}

/// Best-effort: the 1-based line number of the first relation mentioning
/// exactly this tuple (for error reporting after canonicalization).
fn relation_line(text: &str, tuple: &[usize]) -> usize {
    for (idx, raw) in text.lines().enumerate() {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if let Some(rest) = stripped.trim_start().strip_prefix('[') {
            if let Some(end) = rest.find(']') {
                let indices: Vec<usize> = rest[..end]
                    .split_whitespace()
                    .filter_map(|t| t.parse().ok())
                    .collect();
                if indices == tuple {
                    return idx + 1;
                }
            }
        }
    }
    1
}

fn parse_relation(
    ln: usize,
    line: &str,
    arity: usize,
    dim: usize,
) -> Result<(Vec<usize>, Vec<Rational>), ParseError> {
    let trimmed = line.trim_start();
    let offset = line.len() - trimmed.len();
    if !trimmed.starts_with('[') {
        return err(ln, offset + 1, "relation must start with `[`");
    }
    let close = match trimmed.find(']') {
        Some(c) => c,
        None => return err(ln, offset + 1, "unclosed `[`"),
    };
    let mut indices = Vec::new();
    for tok in trimmed[1..close].split_whitespace() {
        let i: usize = tok.parse().map_err(|_| ParseError {
            line: ln,
            col: offset + 2,
            message: format!("bad index `{tok}`"),
        })?;
        indices.push(i);
    }
    if indices.len() != arity {
        return err(
            ln,
            offset + 1,
            format!("bracket has {} indices, arity is {arity}", indices.len()),
        );
    }
    let after = trimmed[close + 1..].trim_start();
    let Some(rhs) = after.strip_prefix('=') else {
        return err(ln, offset + close + 2, "expected `=` after bracket");
    };
    let mut coeffs = vec![Rational::zero(); dim];
    let rhs = rhs.trim();
    if !rhs.is_empty() && rhs != "0" {
        for term in rhs.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return err(ln, offset + close + 2, "empty term in linear combination");
            }
            let (coeff_str, basis_str) = match term.split_once('*') {
                Some((c, b)) => (c.trim(), b.trim()),
                None => return err(ln, offset + close + 2, format!("term `{term}` needs the form coeff*basis")),
            };
            let coeff = parse_rational(coeff_str).ok_or(ParseError {
                line: ln,
                col: offset + close + 2,
                message: format!("bad coefficient `{coeff_str}`"),
            })?;
            let basis: usize = basis_str.parse().map_err(|_| ParseError {
                line: ln,
                col: offset + close + 2,
                message: format!("bad basis index `{basis_str}`"),
            })?;
            if basis == 0 || basis > dim {
                return err(
                    ln,
                    offset + close + 2,
                    format!("basis index {basis} out of range 1..={dim}"),
                );
            }
            coeffs[basis - 1] += coeff;
        }
    }
    Ok((indices, coeffs))
}

/// Serializes a product in the canonical key order of its storage.
pub fn serialize(prod: &NAryProduct) -> String {
    let mut out = String::new();
    out.push_str("nary v1\n");
    out.push_str(&format!("arity {}\n", prod.arity()));
    out.push_str(&format!("dim {}\n", prod.dim()));
    out.push_str(&format!("symmetry {}\n", prod.symmetry()));
    for (key, value) in prod.constants() {
        if is_zero_vector(value) {
            continue;
        }
        let indices = key
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let terms = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("{c}*{}", j + 1))
            .collect::<Vec<_>>()
            .join(" + ");
        out.push_str(&format!("[{indices}] = {terms}\n"));
    }
    out
}
