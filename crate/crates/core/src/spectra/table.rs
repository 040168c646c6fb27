//! Plain-text, CSV and JSON renderings of multiplicity and Krawtchouk tables.

use crate::error::{Error, Result};
use crate::spectra::{KrawtchoukTable, MultiplicityRow};

/// Aligns cells into columns: the first column left-aligned, the rest right-aligned.
pub fn render_aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let mut text = String::new();
        for (c, cell) in line.iter().enumerate().take(cols) {
            if c == 0 {
                text.push_str(&format!("{cell:<w$}", w = widths[0]));
            } else {
                text.push_str(&format!("  {cell:>w$}", w = widths[c]));
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

fn common_dim(rows: &[MultiplicityRow]) -> Result<usize> {
    let dim = rows.first().map_or(0, MultiplicityRow::dim);
    if let Some(r) = rows.iter().find(|r| r.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: r.dim(),
        });
    }
    Ok(dim)
}

fn row_cells(row: &MultiplicityRow) -> Vec<String> {
    let mut cells = vec![row.group.clone(), row.norm_sq.to_string()];
    cells.extend(row.degrees.iter().map(ToString::to_string));
    cells.push(row.forms.to_string());
    cells
}

fn header(dim: usize) -> Vec<String> {
    let mut h = vec!["group".to_string(), "N".to_string()];
    h.extend((0..=dim).map(|p| format!("d{p}")));
    h.push("df".into());
    h
}

/// Rows are groups, columns `N, d_0 … d_n, d_f`.
pub fn rows_to_text(rows: &[MultiplicityRow]) -> Result<String> {
    let dim = common_dim(rows)?;
    let body: Vec<Vec<String>> = rows.iter().map(row_cells).collect();
    Ok(render_aligned(&header(dim), &body))
}

pub fn rows_to_csv(rows: &[MultiplicityRow]) -> Result<String> {
    let dim = common_dim(rows)?;
    let mut out = header(dim).join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row_cells(row).join(","));
        out.push('\n');
    }
    Ok(out)
}

/// JSON array of rows, each with `d`, `d_f`, `d_e` and `d_o`.
pub fn rows_to_json(rows: &[MultiplicityRow]) -> Result<String> {
    common_dim(rows)?;
    Ok(serde_json::to_string_pretty(rows)?)
}

fn krawtchouk_cells(table: &KrawtchoukTable) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header = vec!["p\\x".to_string()];
    header.extend((0..=table.n).map(|x| x.to_string()));
    let rows = table
        .values
        .iter()
        .enumerate()
        .map(|(p, row)| {
            let mut cells = vec![format!("K{p}")];
            cells.extend(row.iter().map(ToString::to_string));
            cells
        })
        .collect();
    (header, rows)
}

pub fn krawtchouk_to_text(table: &KrawtchoukTable) -> String {
    let (header, rows) = krawtchouk_cells(table);
    render_aligned(&header, &rows)
}

pub fn krawtchouk_to_csv(table: &KrawtchoukTable) -> String {
    let mut out = String::from("p");
    for x in 0..=table.n {
        out.push_str(&format!(",x{x}"));
    }
    out.push('\n');
    for (p, row) in table.values.iter().enumerate() {
        out.push_str(&p.to_string());
        for v in row {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}
