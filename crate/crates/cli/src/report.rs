use std::fmt::Write;

use fracdelta::Complex64;
use serde_json::{Map, Value};

#[derive(Clone, Copy)]
pub enum Cell {
    Index(usize),
    Real(f64),
    Empty,
}

impl Cell {
    fn csv(self) -> String {
        match self {
            Cell::Index(n) => n.to_string(),
            Cell::Real(v) => format!("{v:.16e}"),
            Cell::Empty => String::new(),
        }
    }

    fn json(self) -> Value {
        match self {
            Cell::Index(n) => n.into(),
            Cell::Real(v) => v.into(),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Default)]
pub struct Report {
    pub summary: Map<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn with_columns<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Report {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn to_csv(&self, config: &Value) -> String {
        let mut out = String::new();
        for (section, map) in [("config", config.as_object()), ("result", Some(&self.summary))] {
            for (k, v) in map.into_iter().flatten() {
                writeln!(out, "# {section}.{k} = {v}").unwrap();
            }
        }
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.csv()).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    pub fn to_json(&self, config: &Value) -> String {
        let mut result = self.summary.clone();
        result.insert("columns".into(), self.columns.clone().into());
        let rows = self.rows.iter().map(|r| Value::Array(r.iter().map(|c| c.json()).collect()));
        result.insert("rows".into(), Value::Array(rows.collect()));
        let mut doc = Map::new();
        doc.insert("config".into(), config.clone());
        doc.insert("result".into(), Value::Object(result));
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).unwrap();
        text.push('\n');
        text
    }
}

pub fn complex_columns(prefix: &str, count: usize) -> Vec<String> {
    (0..count)
        .flat_map(|i| [format!("{prefix}_{i}_re"), format!("{prefix}_{i}_im")])
        .collect()
}

pub fn matrix_columns(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim * dim)
        .flat_map(|k| {
            let (i, j) = (k / dim, k % dim);
            [format!("{prefix}_{i}_{j}_re"), format!("{prefix}_{i}_{j}_im")]
        })
        .collect()
}

pub fn complex_cells(values: &[Complex64]) -> impl Iterator<Item = Cell> + '_ {
    values.iter().flat_map(|z| [Cell::Real(z.re), Cell::Real(z.im)])
}
