//! A small document model rendered as text, CSV or JSON.

use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::exact::{ExpPoly, Rational};

use super::wire::to_json;

/// One value with its text and JSON renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub text: String,
    pub json: Value,
}

impl Cell {
    pub fn str(s: impl Into<String>) -> Self {
        let text = s.into();
        Cell {
            json: Value::String(text.clone()),
            text,
        }
    }

    pub fn rational(r: &Rational) -> Self {
        Cell::str(r.to_string())
    }

    pub fn exppoly(e: &ExpPoly) -> Self {
        Cell {
            text: e.to_string(),
            json: to_json(e),
        }
    }

    pub fn int(i: impl Into<i64>) -> Self {
        let i = i.into();
        Cell {
            text: i.to_string(),
            json: Value::from(i),
        }
    }

    pub fn bool(b: bool) -> Self {
        Cell {
            text: b.to_string(),
            json: Value::Bool(b),
        }
    }

    pub fn list(items: Vec<Cell>) -> Self {
        Cell {
            text: items.iter().map(|c| c.text.as_str()).collect::<Vec<_>>().join(", "),
            json: Value::Array(items.into_iter().map(|c| c.json).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table {
            name: name.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_header(name: &str, header: Vec<String>) -> Self {
        Table {
            name: name.into(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Document {
    pub fields: Vec<(String, Cell)>,
    pub tables: Vec<Table>,
}

impl Document {
    pub fn field(&mut self, key: &str, value: Cell) {
        self.fields.push((key.into(), value));
    }

    pub fn table(&mut self, table: Table) {
        self.tables.push(table);
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.json.clone());
        }
        for t in &self.tables {
            let rows = t
                .rows
                .iter()
                .map(|r| {
                    Value::Object(
                        t.header
                            .iter()
                            .cloned()
                            .zip(r.iter().map(|c| c.json.clone()))
                            .collect(),
                    )
                })
                .collect();
            obj.insert(t.name.clone(), Value::Array(rows));
        }
        Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k:<width$}  {}", v.text);
        }
        for t in &self.tables {
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "[{}]", t.name);
            let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
            for r in &t.rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.text.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(t.header.iter().map(String::as_str).collect()));
            for r in &t.rows {
                let _ = writeln!(out, "{}", line(r.iter().map(|c| c.text.as_str()).collect()));
            }
        }
        out
    }

    /// Fields as a `field,value` block, then each table with its header,
    /// blocks separated by blank lines.
    pub fn to_csv(&self) -> String {
        let mut blocks = Vec::new();
        if !self.fields.is_empty() {
            let mut b = String::from("field,value\n");
            for (k, v) in &self.fields {
                let _ = writeln!(b, "{},{}", csv_escape(k), csv_escape(&v.text));
            }
            blocks.push(b);
        }
        for t in &self.tables {
            let mut b = String::new();
            let head: Vec<String> = std::iter::once("table".to_string())
                .chain(t.header.iter().map(|h| csv_escape(h)))
                .collect();
            let _ = writeln!(b, "{}", head.join(","));
            for r in &t.rows {
                let row: Vec<String> = std::iter::once(csv_escape(&t.name))
                    .chain(r.iter().map(|c| csv_escape(&c.text)))
                    .collect();
                let _ = writeln!(b, "{}", row.join(","));
            }
            blocks.push(b);
        }
        blocks.join("\n")
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
