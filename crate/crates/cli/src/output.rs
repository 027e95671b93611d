//! Table emission: CSV and JSON with an embedded resolved-config header,
//! 17-significant-digit numbers, and atomic file writes.

use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Num(f64),
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// 17 significant digits: enough to reproduce any f64 bit-exactly.
fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_csv(table: &Table, config_json: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("# unruh {}\n", env!("CARGO_PKG_VERSION")));
    out.push_str(&format!("# config = {config_json}\n"));
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let line: Vec<String> = row
            .iter()
            .map(|c| match c {
                Cell::Text(s) => s.clone(),
                Cell::Num(x) => fmt_num(*x),
            })
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(table: &Table, config: serde_json::Value) -> String {
    let rows: Vec<serde_json::Value> = table
        .rows
        .iter()
        .map(|row| {
            let mut obj = serde_json::Map::new();
            for (name, cell) in table.columns.iter().zip(row) {
                let v = match cell {
                    Cell::Text(s) => serde_json::Value::String(s.clone()),
                    Cell::Num(x) => serde_json::json!(x),
                };
                obj.insert(name.clone(), v);
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    let doc = serde_json::json!({
        "tool": "unruh",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "rows": rows,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("static document");
    text.push('\n');
    text
}

/// Writes through a temp file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension(format!(
        "{}.tmp",
        path.extension().and_then(|e| e.to_str()).unwrap_or("out")
    ));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}

/// Emits to the file (atomically) or stdout.
pub fn emit(path: Option<&Path>, contents: &str) -> std::io::Result<()> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}
