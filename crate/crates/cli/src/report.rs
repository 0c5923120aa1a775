//! Tabular output: `#`-prefixed header lines followed by CSV, or a JSON
//! document whose `rows` mirror the CSV rows one to one.

use std::io::Write;

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(u128),
    Signed(i64),
    Float(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Signed(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.6}"),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => match u64::try_from(*v) {
                Ok(v) => Value::from(v),
                // Beyond u64 the exact value survives only as a string.
                Err(_) => Value::from(v.to_string()),
            },
            Cell::Signed(v) => Value::from(*v),
            Cell::Float(v) => format!("{v:.6}").parse::<f64>().map(Value::from).unwrap_or(Value::Null),
            Cell::Bool(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<u128> for Cell {
    fn from(v: u128) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u128)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as u128)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as u128)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    /// Ordered key/value pairs describing the run.
    pub header: Vec<(&'static str, String)>,
    pub notes: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Internal consistency checks that failed; non-empty means exit 4.
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Report {
            header: Vec::new(),
            notes: Vec::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &'static str, value: impl ToString) {
        self.header.push((key, value.to_string()));
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn fail(&mut self, what: impl Into<String>) {
        self.failures.push(what.into());
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (k, v) in &self.header {
            writeln!(out, "# {k}={v}")?;
        }
        for n in &self.notes {
            writeln!(out, "# note: {n}")?;
        }
        for f in &self.failures {
            writeln!(out, "# cross-check failed: {f}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.flush()
    }

    fn write_json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let header: Map<String, Value> = self
            .header
            .iter()
            .map(|(k, v)| (k.to_string(), Value::from(v.as_str())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.to_string(), v.json()))
                        .collect(),
                )
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("header".into(), Value::Object(header));
        doc.insert("notes".into(), Value::from(self.notes.clone()));
        doc.insert("cross_check_failures".into(), Value::from(self.failures.clone()));
        doc.insert("rows".into(), Value::from(rows));
        serde_json::to_writer_pretty(&mut out, &Value::Object(doc))?;
        writeln!(out)
    }
}
