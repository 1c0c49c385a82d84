//! Table serialization shared by all subcommands.
//!
//! Every numeric field is printed through [`sci`], which fixes the layout to
//! six significant digits in scientific notation. Using one formatter for
//! csv, json, and markdown keeps the three views numerically identical and
//! makes repeated runs byte-for-byte reproducible.

/// One table cell. `Missing` renders as an empty csv field, json `null`,
/// and an empty markdown cell.
pub enum Cell {
    Num(f64),
    Int(u32),
    Str(&'static str),
    Missing,
}

/// Six significant digits, scientific notation. The output of `{:.5e}` is
/// also a valid json number (`3.91083e-4`), so csv and json share it.
pub fn sci(x: f64) -> String {
    format!("{x:.5e}")
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Num(x) => sci(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Str(s) => (*s).to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(x) => sci(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Str(s) => format!("\"{s}\""),
            Cell::Missing => "null".to_string(),
        }
    }
}

pub fn csv(header: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        let cells: Vec<String> = row.iter().map(Cell::plain).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn json(header: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut out = String::from("[\n");
    for (i, row) in rows.iter().enumerate() {
        let fields: Vec<String> = header
            .iter()
            .zip(row)
            .map(|(name, cell)| format!("\"{name}\": {}", cell.json()))
            .collect();
        out.push_str("  {");
        out.push_str(&fields.join(", "));
        out.push('}');
        if i + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}

pub fn markdown(header: &[&str], rows: &[Vec<Cell>]) -> String {
    let mut out = String::from("| ");
    out.push_str(&header.join(" | "));
    out.push_str(" |\n|");
    for _ in header {
        out.push_str("---|");
    }
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(Cell::plain).collect();
        out.push_str("| ");
        out.push_str(&cells.join(" | "));
        out.push_str(" |\n");
    }
    out
}
