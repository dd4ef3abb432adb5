//! Record construction and the three output formats.
//!
//! Every data-emitting command builds [`Record`]s — a command name, an echo
//! of the inputs, a result payload, and a label naming the result being
//! exercised — and hands them to an [`Emitter`]. JSON prints one object per line (so bulk commands
//! stream NDJSON), CSV prints a header once followed by one row per record,
//! and plain mode prints the human-readable text supplied by the command.

use num_complex::Complex64;
use serde_json::{Map, Number, Value};

/// Output format selector shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One JSON object per record (NDJSON for streaming commands).
    Json,
    /// Header row, then one comma-separated row per record.
    Csv,
    /// Human-readable text.
    Plain,
}

/// A single typed datum, so each format can render it appropriately:
/// complex values become `[re, im]` arrays in JSON and split into two
/// columns in CSV; residue lists become arrays / semicolon-joined cells.
#[derive(Debug, Clone)]
pub enum Field {
    Int(i64),
    UInt(u64),
    Float(f64),
    Bool(bool),
    Str(String),
    Complex(Complex64),
    List(Vec<u64>),
}

impl Field {
    fn to_json(&self) -> Value {
        match self {
            Field::Int(v) => Value::from(*v),
            Field::UInt(v) => Value::from(*v),
            Field::Float(v) => Value::Number(finite(*v)),
            Field::Bool(v) => Value::from(*v),
            Field::Str(v) => Value::from(v.as_str()),
            Field::Complex(z) => {
                Value::Array(vec![Value::Number(finite(z.re)), Value::Number(finite(z.im))])
            }
            Field::List(vs) => Value::Array(vs.iter().map(|&v| Value::from(v)).collect()),
        }
    }

    /// CSV column names for this field; complex values occupy two columns.
    fn csv_keys(&self, key: &str) -> Vec<String> {
        match self {
            Field::Complex(_) => vec![format!("{key}_re"), format!("{key}_im")],
            _ => vec![key.to_string()],
        }
    }

    fn csv_cells(&self) -> Vec<String> {
        match self {
            Field::Int(v) => vec![v.to_string()],
            Field::UInt(v) => vec![v.to_string()],
            Field::Float(v) => vec![v.to_string()],
            Field::Bool(v) => vec![v.to_string()],
            Field::Str(v) => vec![csv_quote(v)],
            Field::Complex(z) => vec![z.re.to_string(), z.im.to_string()],
            Field::List(vs) => {
                let joined = vs.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
                vec![joined]
            }
        }
    }
}

fn finite(v: f64) -> Number {
    Number::from_f64(v).expect("emitted floats are finite")
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One emitted record: `{"command", "inputs", "result", "paper_ref"}`.
#[derive(Debug, Clone)]
pub struct Record {
    pub command: &'static str,
    pub inputs: Vec<(&'static str, Field)>,
    pub result: Vec<(&'static str, Field)>,
    pub paper_ref: &'static str,
}

impl Record {
    fn to_json_value(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command));
        let mut inputs = Map::new();
        for (key, field) in &self.inputs {
            inputs.insert((*key).into(), field.to_json());
        }
        top.insert("inputs".into(), Value::Object(inputs));
        let mut result = Map::new();
        for (key, field) in &self.result {
            result.insert((*key).into(), field.to_json());
        }
        top.insert("result".into(), Value::Object(result));
        top.insert("paper_ref".into(), Value::from(self.paper_ref));
        Value::Object(top)
    }

    fn csv_header(&self) -> String {
        let mut cols = vec!["command".to_string()];
        for (key, field) in self.inputs.iter().chain(&self.result) {
            cols.extend(field.csv_keys(key));
        }
        cols.push("paper_ref".to_string());
        cols.join(",")
    }

    fn csv_row(&self) -> String {
        let mut cells = vec![self.command.to_string()];
        for (_, field) in self.inputs.iter().chain(&self.result) {
            cells.extend(field.csv_cells());
        }
        cells.push(csv_quote(self.paper_ref));
        cells.join(",")
    }
}

/// Writes records to stdout in the selected format, printing the CSV header
/// exactly once per invocation.
pub struct Emitter {
    format: Format,
    csv_header_done: bool,
}

impl Emitter {
    pub fn new(format: Format) -> Emitter {
        Emitter { format, csv_header_done: false }
    }

    /// Emits one record; `plain` is the pre-rendered human-readable form.
    pub fn emit(&mut self, record: &Record, plain: &str) {
        match self.format {
            Format::Json => {
                let value = record.to_json_value();
                println!("{}", serde_json::to_string(&value).expect("records serialize"));
            }
            Format::Csv => {
                if !self.csv_header_done {
                    println!("{}", record.csv_header());
                    self.csv_header_done = true;
                }
                println!("{}", record.csv_row());
            }
            Format::Plain => println!("{plain}"),
        }
    }
}
