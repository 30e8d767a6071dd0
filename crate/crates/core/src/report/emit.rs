use std::fmt::Write as _;

use super::{EliminationReport, Entry};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Jsonl,
    Table,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "table" => Ok(Format::Table),
            _ => Err(Error::domain(format!("unknown format `{s}` (expected jsonl or table)"))),
        }
    }
}

fn detail(e: &Entry) -> String {
    let mut parts = Vec::new();
    if let Some(h) = &e.h {
        parts.push(format!("h={h}"));
    }
    if let Some(c) = &e.c {
        parts.push(format!("c={c}"));
    }
    if let Some(a) = &e.a {
        parts.push(format!("a={a}"));
    }
    if !e.params.is_empty() {
        let ps: Vec<String> = e.params.iter().map(ToString::to_string).collect();
        parts.push(format!("params=[{}]", ps.join("; ")));
    }
    parts.extend(e.annotations.iter().cloned());
    parts.join(" ")
}

/// Render a report. Jsonl writes one object per entry; the table ends with
/// the summary line.
pub fn emit_report(report: &EliminationReport, format: Format) -> String {
    let entries = report.entries();
    let mut out = String::new();
    match format {
        Format::Jsonl => {
            for e in entries {
                out.push_str(&serde_json::to_string(e).expect("entries serialize"));
                out.push('\n');
            }
        }
        Format::Table => {
            let rows: Vec<[String; 5]> = entries
                .iter()
                .map(|e| {
                    [
                        e.case_id.clone(),
                        e.stage.to_string(),
                        e.q.as_ref().map_or_else(|| "-".to_string(), ToString::to_string),
                        e.verdict.to_string(),
                        detail(e),
                    ]
                })
                .collect();
            let head = ["case", "stage", "q", "verdict", "detail"].map(String::from);
            let mut width = [0usize; 4];
            for r in std::iter::once(&head).chain(&rows) {
                for (w, cell) in width.iter_mut().zip(r) {
                    *w = (*w).max(cell.len());
                }
            }
            for r in std::iter::once(&head).chain(&rows) {
                let mut line = String::new();
                for (w, cell) in width.iter().zip(r) {
                    let _ = write!(line, "{cell:<w$}  ");
                }
                line.push_str(&r[4]);
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out.push_str(&report.summary());
            out.push('\n');
        }
    }
    out
}
