//! Plain-text diagrams for tableaux and pictures.
//!
//! Boxes are `[..]`; cells on a bumping route are drawn `*..*`, and a route
//! ending outside the diagram (inner shape or an extreme cocorner) shows as
//! a bare `*  *`.

use crate::pictures::Picture;
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::{row_reading, PartialTableau};

fn grid(shape: &SkewShape, width: usize, label: &dyn Fn(Cell) -> String, marked: &[Cell]) -> Vec<String> {
    let r0 = if marked.iter().any(|c| c.row == 0) { 0 } else { 1 };
    let c0 = if marked.iter().any(|c| c.col == 0) { 0 } else { 1 };
    let cols = shape.outer().first().max(marked.iter().map(|c| c.col).max().unwrap_or(0));
    let mut lines = Vec::new();
    for i in r0..=shape.len() {
        let mut line = String::new();
        for j in c0..=cols {
            let c = Cell::new(i, j);
            let hit = marked.contains(&c);
            let (open, close) = if hit { ('*', '*') } else { ('[', ']') };
            if shape.contains_cell(c) {
                line.push(open);
                line.push_str(&format!("{:>width$}", label(c)));
                line.push(close);
            } else if hit {
                line.push('*');
                line.push_str(&" ".repeat(width));
                line.push('*');
            } else {
                line.push_str(&" ".repeat(width + 2));
            }
        }
        lines.push(line.trim_end().to_string());
    }
    lines
}

/// One line per row, top row first. `route` cells are starred.
pub fn tableau_ascii(t: &PartialTableau, route: &[Cell]) -> String {
    let width = t.values().iter().map(|v| v.to_string().len()).max().unwrap_or(1);
    let label = |c: Cell| t.get(c).map(|v| v.to_string()).unwrap_or_default();
    let mut out = grid(t.shape(), width, &label, route).join("\n");
    out.push('\n');
    out
}

/// Spreadsheet-style label for the `k`-th cell (0-based): A..Z, then A1..Z1, ….
pub fn cell_label(k: usize) -> String {
    let letter = (b'A' + (k % 26) as u8) as char;
    if k < 26 {
        letter.to_string()
    } else {
        format!("{letter}{}", k / 26)
    }
}

pub fn picture_ascii(p: &Picture) -> String {
    picture_ascii_with_route(p, &[])
}

/// Source on the left with lowercase labels, target on the right with the
/// matching uppercase labels in row-reading order. `route` marks source cells.
pub fn picture_ascii_with_route(p: &Picture, route: &[Cell]) -> String {
    let reading = row_reading(p.target());
    let upper = |y: Cell| reading.get(y).map(|v| cell_label(v as usize - 1)).unwrap_or_default();
    let width = (0..p.size().max(1)).map(|k| cell_label(k).len()).max().unwrap();
    let lower = |x: Cell| p.image(x).map(|y| upper(y).to_lowercase()).unwrap_or_default();
    let left = grid(p.source(), width, &lower, route);
    let right = grid(p.target(), width, &upper, &[]);
    let pad = left.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let rows = left.len().max(right.len());
    let mid = rows.saturating_sub(1) / 2;
    let mut out = String::new();
    for k in 0..rows {
        let l = left.get(k).map(String::as_str).unwrap_or("");
        let r = right.get(k).map(String::as_str).unwrap_or("");
        let arrow = if k == mid { "  ->  " } else { "      " };
        let gap = pad - l.chars().count();
        let line = format!("{l}{}{arrow}{r}", " ".repeat(gap));
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
