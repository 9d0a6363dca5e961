//! Deterministic text, CSV and JSON rendering.

use ptmpow::harness::{Bounds, CampaignReport};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

/// A header plus string rows.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Text: tab-separated rows without header. CSV: header then rows.
    /// JSON: one array of objects, every value a string.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.rows.iter().map(|r| r.join("\t") + "\n").collect(),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                w.write_record(&self.header).expect("write to memory");
                for r in &self.rows {
                    w.write_record(r).expect("write to memory");
                }
                String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .cloned()
                            .zip(r.iter().cloned().map(Value::String))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                json_line(&rows)
            }
        }
    }
}

pub fn json_line<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

pub fn bounds_text(bounds: &Bounds) -> String {
    bounds
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_reports(reports: &[CampaignReport], format: Format) -> String {
    match format {
        Format::Json => json_line(reports),
        Format::Csv => {
            let mut t = Table::new(&[
                "campaign", "severity", "status", "check", "cases", "witness", "message",
            ]);
            for r in reports {
                for c in &r.checks {
                    let (witness, message) = match &c.counterexample {
                        Some(cx) => (
                            cx.witness
                                .iter()
                                .map(|(k, v)| format!("{k}={v}"))
                                .collect::<Vec<_>>()
                                .join(" "),
                            cx.message.clone(),
                        ),
                        None => (String::new(), String::new()),
                    };
                    t.row(vec![
                        r.name.clone(),
                        r.severity.to_string(),
                        r.status.to_string(),
                        c.check.clone(),
                        c.cases.to_string(),
                        witness,
                        message,
                    ]);
                }
                if r.checks.is_empty() {
                    t.row(vec![
                        r.name.clone(),
                        r.severity.to_string(),
                        r.status.to_string(),
                        String::new(),
                        "0".into(),
                        String::new(),
                        String::new(),
                    ]);
                }
            }
            t.render(Format::Csv)
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out += &format!(
                    "{} [{}] {} ({})\n",
                    r.name,
                    r.severity,
                    r.status,
                    bounds_text(&r.bounds)
                );
                for c in &r.checks {
                    out += &format!("  {c}\n");
                    for note in &c.notes {
                        out += &format!("    note: {note}\n");
                    }
                }
                for (k, v) in &r.observations {
                    out += &format!("  {k} = {v}\n");
                }
            }
            out
        }
    }
}
