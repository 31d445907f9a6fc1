//! Deterministic JSON / CSV / plain-text rendering of results.

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::series::SeriesSpec;
use serde_json::{json, Value};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "pretty" => Ok(Format::Pretty),
            _ => Err(Error::InvalidParameters(format!("unknown format {s}"))),
        }
    }
}

/// Exact coefficients on the power basis of Q(ζ_order), plus a floating companion.
pub fn cyc(v: &CycNum) -> Value {
    let c = v.approx();
    json!({
        "order": v.order(),
        "coeffs": v.coeffs().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "approx": [round(c.re), round(c.im)],
    })
}

fn round(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 { 0.0 } else { r }
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn spec(spec: &SeriesSpec) -> Value {
    let (n, k) = spec.display_nk();
    let ls = spec.label_sets();
    json!({
        "series": spec.display_series(),
        "n": n,
        "k": k,
        "l": spec.l,
        "M": spec.order,
        "root": spec.root,
        "s": cyc(spec.s()),
        "alpha": cyc(spec.alpha()),
        "gamma": ls.gamma.iter().map(partition).collect::<Vec<_>>(),
        "gamma_bar": ls.gamma_bar.iter().map(partition).collect::<Vec<_>>(),
    })
}

/// A header row plus string cells; used for CSV and plain-text output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Table {
        Table { headers: headers.iter().map(|s| s.to_string()).collect(), rows: vec![] }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        for r in std::iter::once(&self.headers).chain(&self.rows) {
            out.push_str(&r.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn pretty(&self) -> String {
        let w: Vec<usize> = (0..self.headers.len())
            .map(|i| {
                std::iter::once(&self.headers)
                    .chain(&self.rows)
                    .map(|r| r.get(i).map_or(0, |c| c.chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for r in std::iter::once(&self.headers).chain(&self.rows) {
            let cells: Vec<String> =
                r.iter().enumerate().map(|(i, c)| format!("{c}{}", " ".repeat(w[i] - c.chars().count()))).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// A result ready for output in any of the three formats.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub table: Table,
}

impl Report {
    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.table.csv(),
            Format::Pretty => self.table.pretty(),
        }
    }
}

/// Write to `path`, or to standard output when `path` is `None`.
pub fn export(report: &Report, format: Format, path: Option<&Path>) -> Result<()> {
    let text = report.render(format);
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            }
            std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
        }
    }
}
