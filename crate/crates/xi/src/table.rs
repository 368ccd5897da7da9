//! Table-provider files: linking blocks given as data.
//!
//! ```json
//! {"blocks": [{"row": "A", "col": "B", "values": [[0, 0, 0], [0, 0, 0], [0, 0, 0]]}]}
//! ```
//!
//! A block with row X and column Z holds lk(Xᵃ, Z^{b,+}) at `values[a-1][b-1]`.
//! Entries are integers or strings such as `"-3/2"`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use xi_core::linking::TableProvider;
use xi_core::matrix::Matrix;
use xi_core::Rat;

use crate::error::AppError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub blocks: Vec<TableBlock>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableBlock {
    pub row: String,
    pub col: String,
    pub values: Vec<Vec<Value>>,
}

pub fn parse_rational(v: &Value) -> Result<Rat, AppError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from_integer(i.into()))
            .ok_or_else(|| {
                AppError::schema(format!("{n} is not an integer; write fractions as strings"))
            }),
        Value::String(s) => Rat::from_str(s.trim())
            .map_err(|_| AppError::schema(format!("{s:?} is not a rational"))),
        other => Err(AppError::schema(format!("{other} is not a rational"))),
    }
}

pub fn rational_json(r: &Rat) -> Value {
    if r.is_integer() {
        if let Ok(i) = i64::try_from(r.numer()) {
            return Value::from(i);
        }
    }
    Value::String(r.to_string())
}

pub fn parse_table(text: &str) -> Result<TableProvider, AppError> {
    let file: TableFile = serde_json::from_str(text).map_err(AppError::Json)?;
    let mut t = TableProvider::new();
    for b in &file.blocks {
        let rows = b
            .values
            .iter()
            .map(|r| r.iter().map(parse_rational).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let m = Matrix::from_rows(rows)?;
        t.insert(&b.row, &b.col, m)?;
    }
    Ok(t)
}

pub fn table_to_file(t: &TableProvider) -> TableFile {
    TableFile {
        blocks: t
            .iter()
            .map(|((row, col), m)| TableBlock {
                row: row.clone(),
                col: col.clone(),
                values: m
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(rational_json).collect())
                    .collect(),
            })
            .collect(),
    }
}
