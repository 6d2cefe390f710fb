use std::fmt::Write as _;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(x) => fmt_float(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Float(x) => json!(x),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
        }
    }
}

/// Shortest round-trip decimal; scientific outside `[1e-4, 1e15)`.
pub fn fmt_float(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e15).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

/// A block of rows sharing one column schema. Several blocks make up a
/// table when a command emits a series (one block per time).
#[derive(Debug, Clone, Default)]
pub struct Block {
    pub label: Option<(String, Cell)>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    /// Replaces the generic first header line (the profile format needs its own).
    pub first_line: Option<String>,
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub blocks: Vec<Block>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            first_line: None,
            meta: vec![
                ("artifact".into(), format!("hyperdirac {}", env!("CARGO_PKG_VERSION"))),
                ("command".into(), command.into()),
            ],
            columns: columns.iter().map(|c| c.to_string()).collect(),
            blocks: vec![Block::default()],
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.into(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.blocks.last_mut().expect("table has a block").rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(l) = &self.first_line {
            let _ = writeln!(out, "{l}");
        }
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k}: {v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for b in &self.blocks {
            if let Some((k, v)) = &b.label {
                let _ = writeln!(out, "# {k} = {}", v.csv());
            }
            for r in &b.rows {
                let cells: Vec<String> = r.iter().map(Cell::csv).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut meta = Map::new();
        for (k, v) in &self.meta {
            meta.insert(k.clone(), json!(v));
        }
        let rows = |b: &Block| -> Value {
            Value::Array(b.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect())
        };
        let mut doc = json!({ "meta": meta, "columns": self.columns });
        if self.blocks.len() == 1 && self.blocks[0].label.is_none() {
            doc["rows"] = rows(&self.blocks[0]);
        } else {
            doc["blocks"] = Value::Array(
                self.blocks
                    .iter()
                    .map(|b| {
                        let mut o = Map::new();
                        if let Some((k, v)) = &b.label {
                            o.insert(k.clone(), v.json());
                        }
                        o.insert("rows".into(), rows(b));
                        Value::Object(o)
                    })
                    .collect(),
            );
        }
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }
}
