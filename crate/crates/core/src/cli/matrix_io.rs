//! Matrix files: `{"rows": [[int, ...], ...]}` with integers as JSON numbers
//! or decimal strings.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::matcore::IntMatrix;

use super::report::int_json;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatrixFileError {
    #[error("cannot read {path}: {reason}")]
    Unreadable { path: String, reason: String },
    #[error("malformed JSON: {0}")]
    Malformed(String),
    #[error("malformed matrix: {0}")]
    Shape(String),
    #[error("ragged rows: row {row} has {len} entries, row 0 has {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("non-square matrix: {rows} rows of length {cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("non-integer entry at ({row}, {col}): {text}")]
    NonInteger { row: usize, col: usize, text: String },
}

fn entry(v: &Value, row: usize, col: usize) -> Result<BigInt, MatrixFileError> {
    let bad = |text: String| MatrixFileError::NonInteger { row, col, text };
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(bad(other.to_string())),
    };
    let digits = text.strip_prefix('-').unwrap_or(&text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(text));
    }
    BigInt::from_str(&text).map_err(|_| bad(text))
}

/// Parses the matrix format from a string.
pub fn parse_matrix_str(text: &str) -> Result<IntMatrix, MatrixFileError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| MatrixFileError::Malformed(e.to_string()))?;
    let rows = doc
        .get("rows")
        .ok_or_else(|| MatrixFileError::Shape("missing \"rows\"".into()))?
        .as_array()
        .ok_or_else(|| MatrixFileError::Shape("\"rows\" is not an array".into()))?;
    if rows.is_empty() {
        return Err(MatrixFileError::Shape("no rows".into()));
    }
    let mut out = Vec::with_capacity(rows.len());
    let mut expected = None;
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| MatrixFileError::Shape(format!("row {i} is not an array")))?;
        let exp = *expected.get_or_insert(row.len());
        if row.len() != exp {
            return Err(MatrixFileError::Ragged {
                row: i,
                len: row.len(),
                expected: exp,
            });
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(j, v)| entry(v, i, j))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let cols = expected.unwrap_or(0);
    if cols != out.len() {
        return Err(MatrixFileError::NonSquare { rows: out.len(), cols });
    }
    IntMatrix::from_rows(out).map_err(|e| MatrixFileError::Shape(e.to_string()))
}

/// Reads and parses a matrix file.
pub fn parse_matrix(path: &Path) -> Result<IntMatrix, MatrixFileError> {
    let text = std::fs::read_to_string(path).map_err(|e| MatrixFileError::Unreadable {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_matrix_str(&text)
}

/// The matrix file format as a JSON value.
pub fn matrix_json(m: &IntMatrix) -> Value {
    let rows = m
        .rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(int_json).collect()))
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("rows".into(), Value::Array(rows));
    Value::Object(obj)
}
