//! Deterministic JSON and CSV serialization of reports.
//!
//! Keys appear in a fixed order and floats are printed with 17 significant
//! digits, so equal reports serialize to identical bytes. Non-finite floats
//! become `null` in JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::asymquad::AsymptoticReport;
use crate::error::{Error, Result};
use crate::hcfun::QInvarianceReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown format `{s}` (json|csv)"))),
        }
    }
}

/// A float with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_float(x: f64) -> String {
    if x.is_finite() { format_float(x) } else { "null".to_string() }
}

fn json_floats(xs: &[f64]) -> String {
    let items: Vec<String> = xs.iter().map(|&x| json_float(x)).collect();
    format!("[{}]", items.join(","))
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Builds a JSON object with keys in insertion order.
#[derive(Default)]
pub struct JsonObject {
    body: String,
}

impl JsonObject {
    pub fn new() -> Self {
        Self::default()
    }

    fn raw(mut self, key: &str, value: String) -> Self {
        if !self.body.is_empty() {
            self.body.push(',');
        }
        let _ = write!(self.body, "{}:{value}", json_string(key));
        self
    }

    pub fn string(self, key: &str, value: &str) -> Self {
        self.raw(key, json_string(value))
    }

    pub fn float(self, key: &str, value: f64) -> Self {
        self.raw(key, json_float(value))
    }

    pub fn floats(self, key: &str, values: &[f64]) -> Self {
        self.raw(key, json_floats(values))
    }

    pub fn integer(self, key: &str, value: u64) -> Self {
        self.raw(key, value.to_string())
    }

    pub fn integers(self, key: &str, values: &[u32]) -> Self {
        let items: Vec<String> = values.iter().map(u32::to_string).collect();
        self.raw(key, format!("[{}]", items.join(",")))
    }

    pub fn boolean(self, key: &str, value: bool) -> Self {
        self.raw(key, value.to_string())
    }

    pub fn optional_float(self, key: &str, value: Option<f64>) -> Self {
        match value {
            Some(v) => self.float(key, v),
            None => self.raw(key, "null".into()),
        }
    }

    pub fn finish(self) -> String {
        format!("{{{}}}\n", self.body)
    }
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("writing to memory cannot fail");
    for row in rows {
        writer.write_record(&row).expect("writing to memory cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv output is UTF-8")
}

pub fn emit_q_report(report: &QInvarianceReport, format: Format) -> String {
    match format {
        Format::Json => {
            let weights: Vec<String> = report
                .weights
                .iter()
                .map(|w| format!("[{}]", w.coeffs().iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            JsonObject::new()
                .raw("weights", format!("[{}]", weights.join(",")))
                .floats("q_values", &report.q_values)
                .float("max_rel_deviation", report.max_rel_deviation)
                .float("tolerance", report.tolerance)
                .boolean("is_constant", report.is_constant)
                .boolean("group_manifold_predicted", report.group_manifold_predicted)
                .finish()
        }
        Format::Csv => {
            let rows = report
                .weights
                .iter()
                .zip(&report.q_values)
                .map(|(w, q)| {
                    let coeffs: Vec<String> = w.coeffs().iter().map(u32::to_string).collect();
                    vec![coeffs.join(","), format_float(*q)]
                })
                .collect();
            csv_text(&["weight", "q_value"], rows)
        }
    }
}

pub fn emit_asymptotic_report(report: &AsymptoticReport, format: Format) -> String {
    match format {
        Format::Json => JsonObject::new()
            .string("regime", report.regime.as_str())
            .floats("tau_grid", &report.tau_grid)
            .floats("log_q", &report.log_q)
            .floats("log_predicted", &report.log_predicted)
            .float("fitted_A", report.fitted_a)
            .float("fitted_B", report.fitted_b)
            .float("expected_A", report.expected_a)
            .float("expected_B", report.expected_b)
            .boolean("passed", report.passed)
            .finish(),
        Format::Csv => {
            let rows = (0..report.tau_grid.len())
                .map(|i| {
                    vec![
                        format_float(report.tau_grid[i]),
                        format_float(report.log_q[i]),
                        format_float(report.log_predicted[i]),
                    ]
                })
                .collect();
            csv_text(&["tau", "log_q", "log_predicted"], rows)
        }
    }
}
