//! Text and JSON formats for tables and phase rules.
//!
//! Table text format:
//!
//! ```text
//! # comment
//! quandle 3
//! 1 3 2
//! 3 2 1
//! 2 1 3
//! ```
//!
//! Phase text format: a `phase` line, then three rows of three entries in
//! `0..=2` (row `a`, column `b`).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::PhaseRule;
use crate::table::Magma;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Structured mirror of the text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl From<&Magma> for TableJson {
    fn from(m: &Magma) -> Self {
        TableJson {
            order: m.order(),
            table: m.rows(),
        }
    }
}

/// Significant lines with their one-based line numbers and tokens with
/// one-based columns.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in line.char_indices() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push((s + 1, &line[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            tokens.push((s + 1, &line[s..]));
        }
        Some((i + 1, tokens))
    })
}

fn parse_grid(
    text: &str,
    keyword: &str,
    fixed_order: Option<usize>,
    range: std::ops::RangeInclusive<usize>,
) -> Result<(usize, Vec<Vec<usize>>), ParseError> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::at(1, 1, format!("missing `{keyword}` header")))?;
    if header.first().map(|t| t.1) != Some(keyword) {
        let col = header.first().map_or(1, |t| t.0);
        return Err(ParseError::at(
            hline,
            col,
            format!("expected `{keyword}` header"),
        ));
    }
    let n = match (fixed_order, header.get(1)) {
        (Some(n), None) => n,
        (_, Some(&(col, tok))) => {
            let n: usize = tok
                .parse()
                .map_err(|_| ParseError::at(hline, col, format!("invalid order `{tok}`")))?;
            if n == 0 || fixed_order.is_some_and(|f| f != n) {
                return Err(ParseError::at(hline, col, format!("unsupported order {n}")));
            }
            if header.len() > 2 {
                return Err(ParseError::at(
                    hline,
                    header[2].0,
                    "unexpected token after order",
                ));
            }
            n
        }
        (None, None) => return Err(ParseError::at(hline, 1, "missing order after header")),
    };
    let (lo, hi) = (*range.start(), *range.end());
    let hi = if hi == usize::MAX { n } else { hi };
    let mut rows = Vec::with_capacity(n);
    let mut last_line = hline;
    for (lnum, tokens) in lines {
        last_line = lnum;
        if rows.len() == n {
            return Err(ParseError::at(lnum, tokens[0].0, "unexpected extra row"));
        }
        if tokens.len() != n {
            let col = tokens
                .get(n)
                .map_or(tokens.last().map_or(1, |t| t.0), |t| t.0);
            return Err(ParseError::at(
                lnum,
                col,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in tokens {
            let v: usize = tok
                .parse()
                .map_err(|_| ParseError::at(lnum, col, format!("invalid entry `{tok}`")))?;
            if v < lo || v > hi {
                return Err(ParseError::at(
                    lnum,
                    col,
                    format!("entry {v} outside {lo}..={hi}"),
                ));
            }
            row.push(v);
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::at(
            last_line + 1,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok((n, rows))
}

/// Parses the text table format.
pub fn parse_table(text: &str) -> Result<Magma, ParseError> {
    let (n, rows) = parse_grid(text, "quandle", None, 1..=usize::MAX)?;
    Magma::from_table(n, &rows).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Parses the structured `{"order": n, "table": [[...]]}` format.
pub fn parse_table_json(text: &str) -> Result<Magma, ParseError> {
    let t: TableJson = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), e.column(), e.to_string()))?;
    Magma::from_table(t.order, &t.table).map_err(|e| ParseError::at(1, 1, e.to_string()))
}

/// Dispatches on the first significant character: `{` selects JSON.
pub fn parse_any(text: &str) -> Result<Magma, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_table_json(text)
    } else {
        parse_table(text)
    }
}

/// Renders the text format; entries right-aligned to a common width.
pub fn emit_table(m: &Magma) -> String {
    let n = m.order();
    let width = n.to_string().len();
    let mut out = format!("quandle {n}\n");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn emit_table_json(m: &Magma) -> String {
    serde_json::to_string(&TableJson::from(m)).expect("table serializes")
}

pub fn parse_phase(text: &str) -> Result<PhaseRule, ParseError> {
    let (_, rows) = parse_grid(text, "phase", Some(3), 0..=2)?;
    let mut table = [[0u8; 3]; 3];
    for (a, row) in rows.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            table[a][b] = v as u8;
        }
    }
    PhaseRule::new(table, "custom")
        .map(PhaseRule::named)
        .map_err(|e| ParseError::at(1, 1, e.to_string()))
}

pub fn emit_phase(rule: &PhaseRule) -> String {
    let mut out = String::from("phase\n");
    for row in rule.table() {
        out.push_str(&format!("{} {} {}\n", row[0], row[1], row[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::dihedral;

    #[test]
    fn parses_with_comments() {
        let text = "# dihedral\nquandle 3\n1 3 2\n  # inner comment\n3 2 1\n2 1 3\n";
        let m = parse_table(text).unwrap();
        assert!(m.same_table(&dihedral(3).unwrap()));
    }

    #[test]
    fn errors_cite_position() {
        let err = parse_table("quandle 2\n1 2\n1 5\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        let err = parse_table("quandle 2\n1 2\n1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_table("quandel 2\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 1));
        let err = parse_table("quandle 2\n1 x\n2 2\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = parse_table("quandle 2\n1 1\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn emits_aligned_rows() {
        let m = Magma::from_fn(10, |x, _| x).unwrap();
        let text = emit_table(&m);
        assert!(text.starts_with("quandle 10\n 1  1"));
        assert_eq!(parse_table(&text).unwrap(), m);
    }

    #[test]
    fn json_round_trip() {
        let m = dihedral(4).unwrap().into_magma();
        let j = emit_table_json(&m);
        assert!(parse_any(&j).unwrap().same_table(&m));
        assert!(parse_any("{\"order\": 2, \"table\": [[1,2]]}").is_err());
    }

    #[test]
    fn phase_format() {
        let r = parse_phase("phase\n0 0 1\n1 1 0\n2 2 2\n").unwrap();
        assert_eq!(r.name(), "swap01");
        assert_eq!(emit_phase(&r), "phase\n0 0 1\n1 1 0\n2 2 2\n");
        let err = parse_phase("phase\n0 0 3\n1 1 0\n2 2 2\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 5));
    }
}
