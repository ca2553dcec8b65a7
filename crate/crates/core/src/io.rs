//! Text formats for systems and generator lists.
//!
//! A system file has four rows of `n` tokens: `A` row 1, `A` row 2, `B` row 1,
//! `B` row 2. A token is an integer, a rational `p/q`, or `-inf`. Lines
//! starting with `#` and blank lines are ignored.

use thiserror::Error;

use crate::system::TwoRowSystem;
use crate::tropical::{Number, TropScalar, TropVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// Positions are 1-based.
    #[error("line {line}, column {column}: bad token `{token}`")]
    BadToken {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("expected 4 rows, found {found}")]
    RowCount { found: usize },
    #[error("line {line}: expected {expected} tokens, found {found}")]
    RowLengthMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no data")]
    Empty,
}

pub fn parse_scalar<T: Number>(tok: &str) -> Option<TropScalar<T>> {
    if tok == "-inf" {
        Some(TropScalar::Bottom)
    } else {
        tok.parse().ok().map(TropScalar::Finite)
    }
}

/// Non-comment lines with their 1-based line numbers and tokens (with
/// 1-based columns).
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(ln, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        Some((ln + 1, tokens(line)))
    })
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..pos]));
                start = None;
            }
            (false, None) => start = Some(pos),
            _ => {}
        }
    }
    out
}

fn parse_row<T: Number>(line: usize, toks: &[(usize, &str)]) -> Result<Vec<TropScalar<T>>, ParseError> {
    toks.iter()
        .map(|&(column, tok)| {
            parse_scalar(tok).ok_or_else(|| ParseError::BadToken {
                line,
                column,
                token: tok.to_string(),
            })
        })
        .collect()
}

pub fn parse_system<T: Number>(text: &str) -> Result<TwoRowSystem<T>, ParseError> {
    let lines: Vec<_> = data_lines(text).collect();
    if lines.is_empty() {
        return Err(ParseError::Empty);
    }
    if lines.len() != 4 {
        return Err(ParseError::RowCount { found: lines.len() });
    }
    let n = lines[0].1.len();
    let mut rows = Vec::with_capacity(4);
    for (line, toks) in &lines {
        let row = parse_row(*line, toks)?;
        if row.len() != n {
            return Err(ParseError::RowLengthMismatch {
                line: *line,
                expected: n,
                found: row.len(),
            });
        }
        rows.push(row);
    }
    let [a1, a2, b1, b2]: [Vec<TropScalar<T>>; 4] = rows.try_into().expect("four rows");
    TwoRowSystem::from_rows(a1, a2, b1, b2).map_err(|_| ParseError::Empty)
}

pub fn render_system<T: Number>(sys: &TwoRowSystem<T>) -> String {
    let mut out = String::new();
    for m in [sys.a_matrix(), sys.b_matrix()] {
        for r in 0..2 {
            out.push_str(&TropVector::new(m.row(r).to_vec()).to_string());
            out.push('\n');
        }
    }
    out
}

/// Vectors of length `n`, one per line, with their line numbers.
///
/// Accepts bare token rows and `solve` output: on a line containing `vec=`
/// only the tokens after it count, and `basis size` lines are skipped.
pub fn parse_vectors<T: Number>(text: &str, n: usize) -> Result<Vec<(usize, TropVector<T>)>, ParseError> {
    let mut out = Vec::new();
    for (line, toks) in data_lines(text) {
        let body = match toks.iter().position(|t| t.1.starts_with("vec=")) {
            Some(p) => {
                let rest = &toks[p].1["vec=".len()..];
                let mut v: Vec<(usize, &str)> = Vec::new();
                if !rest.is_empty() {
                    v.push((toks[p].0 + 4, rest));
                }
                v.extend_from_slice(&toks[p + 1..]);
                v
            }
            None if toks.first().is_some_and(|t| t.1 == "basis") => continue,
            None => toks,
        };
        let row = parse_row(line, &body)?;
        if row.len() != n {
            return Err(ParseError::RowLengthMismatch {
                line,
                expected: n,
                found: row.len(),
            });
        }
        out.push((line, TropVector::new(row)));
    }
    Ok(out)
}
