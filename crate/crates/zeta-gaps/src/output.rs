//! Machine-readable result records. A record carries the command that
//! produced it, its parameters, a uniform table of rows, and run
//! metadata; it serializes to JSON in full and to CSV as rows only, and
//! parses back from both.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Run metadata attached to every record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    /// Solver tolerances in effect, keyed by name.
    pub tolerances: BTreeMap<String, String>,
}

/// A command result: parameters plus a uniform table.
///
/// All cell values are stored pre-formatted (numerics at 9 significant
/// digits), which makes JSON and CSV carry identical values and makes
/// serialization byte-deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub metadata: Metadata,
}

impl OutputRecord {
    pub fn new(command: &str, version: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            metadata: Metadata {
                version: version.to_string(),
                tolerances: BTreeMap::new(),
            },
        }
    }

    pub fn parameter(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn tolerance(&mut self, key: &str, value: f64) -> &mut Self {
        self.metadata
            .tolerances
            .insert(key.to_string(), format_number(value));
        self
    }

    pub fn columns(&mut self, columns: &[&str]) -> &mut Self {
        self.columns = columns.iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn row(&mut self, cells: Vec<String>) -> &mut Self {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record is serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format {
            line: e.line(),
            message: e.to_string(),
        })
    }

    /// CSV payload: header row of column names, then the data rows.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            writer.write_record(row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    /// Parses a CSV payload back into `(columns, rows)`.
    pub fn rows_from_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>)> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(text.as_bytes());
        let columns = reader
            .headers()
            .map_err(|e| Error::Format {
                line: 1,
                message: e.to_string(),
            })?
            .iter()
            .map(|c| c.to_string())
            .collect();
        let mut rows = Vec::new();
        for (idx, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::Format {
                line: idx + 2,
                message: e.to_string(),
            })?;
            rows.push(record.iter().map(|c| c.to_string()).collect());
        }
        Ok((columns, rows))
    }
}

/// Formats a float with 9 significant digits, using plain decimal notation
/// in a comfortable exponent range and scientific notation outside it.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let mut s = if (-4..9).contains(&exponent) {
        format!("{:.*}", (8 - exponent).max(0) as usize, x)
    } else {
        format!("{:.8e}", x)
    };
    if s.contains('.') {
        // trim trailing zeros in the mantissa, keeping any exponent suffix
        let (mantissa, exp_suffix) = match s.find('e') {
            Some(pos) => (s[..pos].to_string(), s[pos..].to_string()),
            None => (s.clone(), String::new()),
        };
        let trimmed = mantissa.trim_end_matches('0').trim_end_matches('.');
        s = format!("{trimmed}{exp_suffix}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_record() -> OutputRecord {
        let mut rec = OutputRecord::new("table2", "0.1.0");
        rec.parameter("r_min", "1").parameter("r_max", "2");
        rec.tolerance("bisection", 1e-7);
        rec.columns(&["r", "theta_sup", "theta_inf"]);
        rec.row(vec!["1".into(), format_number(0.394255664), format_number(0.308149772)]);
        rec.row(vec!["2".into(), format_number(0.402631444), format_number(0.363309024)]);
        rec
    }

    #[test]
    fn json_round_trip() {
        let rec = sample_record();
        let json = rec.to_json();
        let back = OutputRecord::from_json(&json).unwrap();
        assert_eq!(rec, back);
        assert!(OutputRecord::from_json("{ not json").is_err());
    }

    #[test]
    fn csv_round_trip_carries_the_rows() {
        let rec = sample_record();
        let csv = rec.to_csv();
        let (columns, rows) = OutputRecord::rows_from_csv(&csv).unwrap();
        assert_eq!(columns, rec.columns);
        assert_eq!(rows, rec.rows);
    }

    #[test]
    fn formatting_examples() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(12.0), "12");
        assert_eq!(format_number(0.394255664), "0.394255664");
        assert_eq!(format_number(-1.5), "-1.5");
        assert_eq!(format_number(0.906_499_716_837_5), "0.906499717");
        assert_eq!(format_number(1.234_567_891e12), "1.23456789e12");
        assert_eq!(format_number(3e-9), "3e-9");
    }

    proptest! {
        #[test]
        fn formatted_numbers_parse_back_to_nine_digits(x in -1e12f64..1e12) {
            let s = format_number(x);
            let back: f64 = s.parse().unwrap();
            let tol = 1e-8 * x.abs().max(1e-300);
            prop_assert!((back - x).abs() <= tol, "{} -> {} -> {}", x, s, back);
        }
    }
}
