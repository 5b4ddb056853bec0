//! Tabular run reports with deterministic table/CSV/JSON rendering.
//!
//! Every numeric cell is a decimal string (30 significant digits for
//! double-word values), so no precision is lost at the serialization
//! boundary and identical flags produce byte-identical output.

use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

/// One check row; the JSON field names are the documented schema.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub status: Status,
    pub margin: String,
    pub paper_value: String,
    pub computed_value: String,
}

impl CheckRow {
    pub fn new(
        check: impl Into<String>,
        status: Status,
        margin: impl Into<String>,
        paper_value: impl Into<String>,
        computed_value: impl Into<String>,
    ) -> Self {
        CheckRow {
            check: check.into(),
            status,
            margin: margin.into(),
            paper_value: paper_value.into(),
            computed_value: computed_value.into(),
        }
    }
}

/// A full command report: fixed column schema plus string-valued rows.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub config: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn from_checks(command: &str, config: &str, checks: &[CheckRow]) -> Report {
        Report {
            command: command.to_string(),
            config: config.to_string(),
            columns: vec!["check", "status", "margin", "paper_value", "computed_value"],
            rows: checks
                .iter()
                .map(|c| {
                    vec![
                        c.check.clone(),
                        c.status.label().to_string(),
                        c.margin.clone(),
                        c.paper_value.clone(),
                        c.computed_value.clone(),
                    ]
                })
                .collect(),
        }
    }

    /// True when no row carries a "fail" status (reports without a status
    /// column pass vacuously).
    pub fn all_pass(&self) -> bool {
        match self.columns.iter().position(|c| *c == "status") {
            None => true,
            Some(i) => self.rows.iter().all(|r| r[i] != "fail"),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.config);
        for (i, c) in self.columns.iter().enumerate() {
            let sep = if i + 1 == self.columns.len() { "\n" } else { "  " };
            let _ = write!(out, "{:<width$}{}", c, sep, width = widths[i]);
        }
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                let sep = if i + 1 == row.len() { "\n" } else { "  " };
                let _ = write!(out, "{:<width$}{}", cell, sep, width = widths[i]);
            }
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.config);
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonReport<'a> {
            command: &'a str,
            config: &'a str,
            status: &'a str,
            rows: Vec<serde_json::Map<String, serde_json::Value>>,
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut m = serde_json::Map::new();
                for (c, v) in self.columns.iter().zip(row) {
                    m.insert(c.to_string(), serde_json::Value::String(v.clone()));
                }
                m
            })
            .collect();
        let rep = JsonReport {
            command: &self.command,
            config: &self.config,
            status: if self.all_pass() { "pass" } else { "fail" },
            rows,
        };
        serde_json::to_string_pretty(&rep).expect("report serialization cannot fail")
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}
