//! Output model shared by every subcommand: a list of uniform rows plus a
//! trailing summary, rendered as JSON lines, CSV, or an aligned text table
//! with the same information in each.

use serde_json::Value;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One output record: the full JSON object and its flat cell view.
pub struct Row {
    pub json: Value,
    pub cells: Vec<(&'static str, String)>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Summary {
    pub command: String,
    pub records: usize,
    pub violations: usize,
    pub indeterminate: usize,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Summary {
    pub fn new(command: impl Into<String>) -> Self {
        Summary {
            command: command.into(),
            records: 0,
            violations: 0,
            indeterminate: 0,
            exit_code: 0,
            seed: None,
        }
    }

    /// Exit policy: violations dominate, then budget-limited indeterminacy.
    pub fn finalize(&mut self, records: usize) {
        self.records = records;
        self.exit_code = if self.violations > 0 {
            1
        } else if self.indeterminate > 0 {
            3
        } else {
            0
        };
    }
}

fn csv_quote(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

pub fn emit(out: &mut dyn Write, format: Format, rows: &[Row], summary: &Summary) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for row in rows {
                writeln!(out, "{}", row.json)?;
            }
            writeln!(
                out,
                "{}",
                serde_json::json!({ "summary": serde_json::to_value(summary).unwrap() })
            )?;
        }
        Format::Csv => {
            if let Some(first) = rows.first() {
                let header: Vec<&str> = first.cells.iter().map(|(k, _)| *k).collect();
                writeln!(out, "{}", header.join(","))?;
                for row in rows {
                    let cells: Vec<String> =
                        row.cells.iter().map(|(_, v)| csv_quote(v)).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            writeln!(
                out,
                "# summary: command={} records={} violations={} indeterminate={} exit_code={}",
                summary.command,
                summary.records,
                summary.violations,
                summary.indeterminate,
                summary.exit_code
            )?;
        }
        Format::Text => {
            if let Some(first) = rows.first() {
                let mut widths: Vec<usize> =
                    first.cells.iter().map(|(k, _)| k.len()).collect();
                for row in rows {
                    for (i, (_, v)) in row.cells.iter().enumerate() {
                        widths[i] = widths[i].max(v.len());
                    }
                }
                let header: Vec<String> = first
                    .cells
                    .iter()
                    .enumerate()
                    .map(|(i, (k, _))| format!("{:width$}", k, width = widths[i]))
                    .collect();
                writeln!(out, "{}", header.join("  "))?;
                for row in rows {
                    let cells: Vec<String> = row
                        .cells
                        .iter()
                        .enumerate()
                        .map(|(i, (_, v))| format!("{:width$}", v, width = widths[i]))
                        .collect();
                    writeln!(out, "{}", cells.join("  "))?;
                }
            }
            writeln!(
                out,
                "summary: command={} records={} violations={} indeterminate={} exit_code={}",
                summary.command,
                summary.records,
                summary.violations,
                summary.indeterminate,
                summary.exit_code
            )?;
        }
    }
    Ok(())
}
