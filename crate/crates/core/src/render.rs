//! ASCII drawing of a path.
//!
//! One row per unit band of height, top row first, one column per step. An
//! up-step from `h` to `h + 1` draws `/` in the band above `h`; a down-step
//! from `h` to `h - 1` draws `\` in the band below `h`. The x-axis is the
//! lower edge of the band above it, so blank cells there are drawn as `_`.
//! A path that never rises above the axis has no such band; its top row
//! marks the axis with `-` instead.

use crate::error::Result;
use crate::word::{PathWord, Step};

pub fn render_ascii(w: &PathWord) -> Result<Vec<String>> {
    w.require_bilateral()?;
    let top = w.max_height();
    let bottom = w.min_height();
    let rows = (top - bottom) as usize;
    let mut grid = vec![vec![' '; w.len()]; rows];
    let mut h = 0i64;
    for (col, s) in w.steps().enumerate() {
        let (band, glyph) = match s {
            Step::Up => (h, '/'),
            Step::Down => (h - 1, '\\'),
        };
        grid[(top - 1 - band) as usize][col] = glyph;
        h += s.delta();
    }
    let (axis_row, fill) = if top > 0 {
        (Some((top - 1) as usize), '_')
    } else if rows > 0 {
        (Some(0), '-')
    } else {
        (None, ' ')
    };
    if let Some(r) = axis_row {
        for c in grid[r].iter_mut().filter(|c| **c == ' ') {
            *c = fill;
        }
    }
    Ok(grid
        .into_iter()
        .map(|row| row.into_iter().collect::<String>().trim_end().to_string())
        .collect())
}
