//! Text grids in the style of the printed tables: the ∘ square and the ⋆
//! square side by side, rows and columns in alphabet order, `·` for empty
//! cells.

use super::bitrade::Bitrade;
use super::square::PartialLatinSquare;
use crate::error::{Error, Result};

/// Largest grid, in cells, that will be drawn.
pub const MAX_GRID_CELLS: usize = 1_000_000;

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    let mut out = s.to_string();
    out.extend(std::iter::repeat_n(' ', w.saturating_sub(width(s))));
    out
}

/// Lines of one grid, all of equal display width.
fn grid(corner: &str, square: &PartialLatinSquare) -> Vec<String> {
    let alph = square.alphabets();
    let mut cells = vec![vec!["·"; alph.cols.len()]; alph.rows.len()];
    for t in square.triples() {
        cells[t[0] as usize][t[1] as usize] = &alph.syms[t[2] as usize];
    }
    let label_w = alph.rows.iter().map(|r| width(r)).chain([width(corner)]).max().unwrap_or(1);
    let col_w: Vec<usize> = (0..alph.cols.len())
        .map(|j| cells.iter().map(|row| width(row[j])).chain([width(&alph.cols[j])]).max().unwrap_or(1))
        .collect();
    let line = |head: &str, items: Vec<&str>| {
        let body: Vec<String> = items.iter().zip(&col_w).map(|(s, &w)| pad(s, w)).collect();
        format!("{} | {}", pad(head, label_w), body.join(" | "))
    };
    let mut out = vec![line(corner, alph.cols.iter().map(String::as_str).collect())];
    let rule: String = out[0].chars().map(|c| if c == '|' { '+' } else { '-' }).collect();
    out.push(rule);
    for (i, row) in cells.iter().enumerate() {
        out.push(line(&alph.rows[i], row.clone()));
    }
    out
}

/// Both squares side by side.
pub fn render_text(b: &Bitrade) -> Result<String> {
    let alph = b.alphabets();
    let cells = alph.rows.len().saturating_mul(alph.cols.len());
    if cells > MAX_GRID_CELLS {
        return Err(Error::Resource { what: "drawing a text grid".into(), needed: cells as u128, cap: MAX_GRID_CELLS });
    }
    let left = grid("∘", b.circ());
    let right = grid("⋆", b.star());
    let w = left.iter().map(|l| width(l)).max().unwrap_or(0);
    let mut out = String::new();
    for (l, r) in left.iter().zip(&right) {
        let line = format!("{}    {}", pad(l, w), r);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}
