//! Job reports: JSON envelopes with sorted keys, or CSV for tables.

use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Header and rows of a tabular result.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Table {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub field: Option<String>,
    pub result: Value,
    pub table: Option<Table>,
    /// Nonzero when the command ran but could not finish (exhausted budget).
    pub exit: u8,
}

impl Outcome {
    pub fn new(field: Option<String>, result: Value) -> Outcome {
        Outcome { field, result, table: None, exit: 0 }
    }

    pub fn with_table(mut self, table: Table) -> Outcome {
        self.table = Some(table);
        self
    }
}

pub fn emit(echo: &[String], elapsed: Duration, format: Format, outcome: Outcome) -> ExitCode {
    match format {
        Format::Json => {
            let report = json!({
                "command": echo.join(" "),
                "field": outcome.field,
                "wall_time_ms": (elapsed.as_secs_f64() * 1e6).round() / 1e3,
                "result": outcome.result,
            });
            let text = serde_json::to_string_pretty(&report).expect("serializable report");
            // a closed pipe is not an error for a report writer
            let _ = writeln!(std::io::stdout(), "{text}");
        }
        Format::Csv => match &outcome.table {
            Some(t) => {
                let _ = write!(std::io::stdout(), "{}", t.to_csv());
            }
            None => {
                eprintln!("error: this command has no tabular output; use --format json");
                return ExitCode::from(2);
            }
        },
    }
    ExitCode::from(outcome.exit)
}
