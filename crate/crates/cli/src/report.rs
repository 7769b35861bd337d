use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Version tag written into every report; bumped whenever
/// `report.schema.json` changes shape.
pub const SCHEMA_VERSION: &str = "minda-report/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
    pub provenance: Vec<String>,
    /// Wall time, only filled in with `--timing` so that reports stay
    /// byte-identical across runs.
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, results: Value) -> Self {
        Self {
            schema: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
            provenance: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn provenance(mut self, label: impl Into<String>) -> Self {
        self.provenance.push(label.into());
        self
    }
}

/// `x` to 12 significant digits.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=11).contains(&exp) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Aligned `key  value` lines.
pub fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Right-aligned table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig12(0.312_478_123_456_789), "0.312478123457");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(0.5), "0.5");
        assert_eq!(sig12(1234.5), "1234.5");
        assert_eq!(sig12(1.5e-9), "1.50000000000e-9");
        assert_eq!(sig12(0.0), "0");
    }

    #[test]
    fn tables_align() {
        let t = table(&["r", "value"], &[vec!["0.5".into(), "1".into()]]);
        assert_eq!(t, "  r  value\n0.5      1\n");
    }
}
