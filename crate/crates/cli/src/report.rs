//! Report rendering. Every float goes through `round_significant`, so JSON
//! and CSV carry the same 12 significant digits.

use std::fs;
use std::io::Write;

use netgame_core::format::{round_significant, significant};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::{Format, OutArgs};
use crate::CliError;

/// Bumped whenever a JSON field or CSV column changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    fn render(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    }
}

pub struct Report {
    verb: &'static str,
    body: Value,
    table: Table,
}

impl Report {
    pub fn new(verb: &'static str, body: Value, table: Table) -> Self {
        Self { verb, body, table }
    }

    pub fn write(self, out: &OutArgs) -> Result<(), CliError> {
        let text = match out.format.unwrap_or(Format::Json) {
            Format::Json => json_text(self.verb, self.body),
            Format::Csv => self.table.render(),
        };
        emit(out, text.as_bytes())
    }
}

pub fn num(x: f64) -> String {
    significant(x)
}

/// The serde name of a unit enum variant.
pub fn label<T: Serialize>(t: &T) -> String {
    match serde_json::to_value(t) {
        Ok(Value::String(s)) => s,
        other => panic!("not a unit variant: {other:?}"),
    }
}

pub fn json_text(verb: &str, body: Value) -> String {
    let mut doc = json!({ "verb": verb, "schema_version": SCHEMA_VERSION, "report": body });
    round_floats(&mut doc);
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            *v = json!(round_significant(x) + 0.0);
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn emit(out: &OutArgs, bytes: &[u8]) -> Result<(), CliError> {
    match &out.out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}
