//! Output documents in text, JSON and CSV.
//!
//! Every number is written as a decimal integer string or a `p/q` fraction
//! string. JSON documents use sorted keys, so parsing and re-serializing a
//! document reproduces it byte for byte.

use clap::ValueEnum;
use qpcert_core::{Poly, QuasiPoly, Rational};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One command's output, pre-rendered for every format.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub csv: Csv,
}

impl Report {
    pub fn document(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => ensure_newline(self.text.clone()),
            Format::Json => render_json(&self.document()),
            Format::Csv => self.csv.render(),
        }
    }
}

pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values always serialize");
    s.push('\n');
    s
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

#[derive(Debug, Clone, Default)]
pub struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        Csv {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let row: Vec<String> = cells.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = line.iter().map(|c| escape(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// `p/q`, or just `p` for integers.
pub fn fraction(r: &Rational) -> String {
    r.to_string()
}

/// Low-to-high coefficient strings; the zero polynomial is `["0"]`.
pub fn coeff_strings(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(fraction).collect()
}

pub fn quasi_poly_json(q: &QuasiPoly) -> Value {
    json!({
        "period": q.period().to_string(),
        "degree": q.degree().map(|d| d.to_string()),
        "constituents": q.constituents().iter().map(coeff_strings).collect::<Vec<_>>(),
    })
}

pub fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|v| v.to_string()).collect()
}
