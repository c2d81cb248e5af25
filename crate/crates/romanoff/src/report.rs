//! CSV and JSONL emission for report rows.
//!
//! Every row type derives `Serialize`; column order is the struct field
//! order, and JSONL keys mirror the CSV header one-to-one. Output is
//! byte-deterministic for fixed inputs: floats print in shortest
//! round-trip form and no timestamps appear in data rows.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" => Ok(OutputFormat::Jsonl),
            other => Err(Error::domain(format!("unknown output format {other:?}"))),
        }
    }
}

/// Render rows as CSV (LF line endings). `header` controls the single
/// leading header line.
pub fn to_csv<T: Serialize>(rows: &[T], header: bool) -> Result<String> {
    let mut wtr = csv::WriterBuilder::new()
        .has_headers(header)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        wtr.serialize(row)
            .map_err(|e| Error::domain(format!("csv serialization: {e}")))?;
    }
    let bytes = wtr
        .into_inner()
        .map_err(|e| Error::domain(format!("csv flush: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::domain(format!("csv not utf-8: {e}")))
}

/// Render rows as JSON Lines, one object per row.
pub fn to_jsonl<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut out = String::new();
    for row in rows {
        let line = serde_json::to_string(row)
            .map_err(|e| Error::domain(format!("json serialization: {e}")))?;
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

/// Render rows in the requested format.
pub fn render<T: Serialize>(rows: &[T], format: OutputFormat, header: bool) -> Result<String> {
    match format {
        OutputFormat::Csv => to_csv(rows, header),
        OutputFormat::Jsonl => to_jsonl(rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        x: u64,
        #[serde(rename = "M1")]
        m1: u64,
        value: f64,
    }

    #[test]
    fn csv_and_jsonl_mirror_columns() {
        let rows = vec![Row {
            x: 10,
            m1: 3,
            value: 0.5,
        }];
        let csv = to_csv(&rows, true).unwrap();
        assert_eq!(csv, "x,M1,value\n10,3,0.5\n");
        let jsonl = to_jsonl(&rows).unwrap();
        assert_eq!(jsonl, "{\"x\":10,\"M1\":3,\"value\":0.5}\n");
    }

    #[test]
    fn header_flag_suppresses_header() {
        let rows = vec![Row {
            x: 1,
            m1: 2,
            value: 1.25,
        }];
        assert_eq!(to_csv(&rows, false).unwrap(), "1,2,1.25\n");
    }
}
