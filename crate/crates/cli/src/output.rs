//! One record per line in text, JSON or CSV. Columns are fixed per
//! subcommand so the CSV header is written even when no record follows.

use std::io::{self, Write};

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub type Field = (&'static str, Value);

pub struct Emitter<W: Write> {
    format: Format,
    columns: &'static [&'static str],
    out: W,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, columns: &'static [&'static str], mut out: W) -> io::Result<Self> {
        if format == Format::Csv {
            writeln!(out, "{}", columns.join(","))?;
        }
        Ok(Emitter { format, columns, out })
    }

    /// Writes one record; `text` is used only for the text format.
    pub fn emit(&mut self, text: &str, fields: &[Field]) -> io::Result<()> {
        debug_assert_eq!(fields.iter().map(|f| f.0).collect::<Vec<_>>(), self.columns);
        match self.format {
            Format::Text => writeln!(self.out, "{text}"),
            Format::Json => writeln!(self.out, "{}", json_object(fields)),
            Format::Csv => {
                let cells: Vec<String> = fields.iter().map(|(_, v)| csv_cell(v)).collect();
                writeln!(self.out, "{}", cells.join(","))
            }
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

/// Keys in column order; `serde_json::Map` would sort them.
fn json_object(fields: &[Field]) -> String {
    let body: Vec<String> =
        fields.iter().map(|(k, v)| format!("{}:{}", Value::from(*k), v)).collect();
    format!("{{{}}}", body.join(","))
}

fn csv_cell(v: &Value) -> String {
    let raw = match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    };
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw
    }
}
