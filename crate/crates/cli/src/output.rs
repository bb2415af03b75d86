use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Rows for CSV output; the first line is always the header.
#[derive(Debug, Clone, Default)]
pub struct Csv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        Csv {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn render(&self) -> String {
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

/// Everything a subcommand produced, renderable in any [`Format`].
#[derive(Debug, Clone)]
pub struct Output {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub csv: Csv,
    pub table: String,
    /// Set when a mathematical contract failed; the output is still printed.
    pub failure: Option<String>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    params: &'a Value,
    result: &'a Value,
    version: &'a str,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut s = self.table.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Csv => self.csv.render(),
            Format::Json => {
                let envelope = Envelope {
                    command: self.command,
                    params: &self.params,
                    result: &self.result,
                    version: VERSION,
                };
                let mut s = serde_json::to_string_pretty(&envelope).expect("JSON values always serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}
