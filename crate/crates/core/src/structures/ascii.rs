//! Plain-text diagrams of paths and arc diagrams.

use super::partition::{Arc, LinkedPartition};
use super::path::{PathWord, Step};

/// Mountain drawing of a path, highest row first, followed by a row with the
/// compact symbol of every step. Level steps are drawn with their color
/// letter. The empty path renders as the empty string.
pub fn render_path_ascii(word: &PathWord) -> String {
    if word.is_empty() {
        return String::new();
    }
    let heights = word.heights();
    let rows = word
        .steps()
        .iter()
        .zip(&heights)
        .map(|(s, &h)| if s.is_down() { h } else { h + 1 })
        .max()
        .unwrap_or(1)
        .max(1) as usize;
    // rows may be computed from invalid words with negative heights; those
    // cells are clipped
    let mut grid = vec![vec![' '; word.len()]; rows];
    for (i, (s, &h)) in word.steps().iter().zip(&heights).enumerate() {
        let (row, c) = match s {
            Step::U => (h, '/'),
            Step::D1 | Step::D2 => (h - 1, '\\'),
            level => (h, level.symbol()),
        };
        if (0..rows as i64).contains(&row) {
            grid[row as usize][i] = c;
        }
    }
    let mut lines: Vec<String> = grid
        .into_iter()
        .rev()
        .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
        .collect();
    lines.push(word.to_string());
    lines.join("\n")
}

/// Arc diagram: one row per nesting level (outermost on top), a row of
/// vertex markers, then the vertex labels.
///
/// ```text
/// +--------+
/// +--+  +--+
/// o  o  o  o
/// 1  2  3  4
/// ```
pub fn render_partition_ascii(p: &LinkedPartition) -> String {
    let n = p.n();
    let width = n.to_string().len() + 2;
    let col = |v: usize| (v - 1) * width;
    let line_len = col(n) + 1;

    let arcs: Vec<Arc> = p.arcs().copied().collect();
    let mut by_span = arcs.clone();
    by_span.sort_by_key(|a| a.right - a.left);
    let mut levels: Vec<(Arc, usize)> = Vec::with_capacity(arcs.len());
    for a in by_span {
        let inner = levels
            .iter()
            .filter(|(b, _)| a.left <= b.left && b.right <= a.right)
            .map(|(_, l)| *l)
            .max()
            .unwrap_or(0);
        levels.push((a, inner + 1));
    }
    let top = levels.iter().map(|(_, l)| *l).max().unwrap_or(0);

    let mut grid = vec![vec![' '; line_len]; top];
    // row index 0 is level 1
    for &(a, level) in &levels {
        let row = &mut grid[level - 1];
        for cell in row.iter_mut().take(col(a.right)).skip(col(a.left) + 1) {
            *cell = '-';
        }
        row[col(a.left)] = '+';
        row[col(a.right)] = '+';
    }
    for &(a, level) in &levels {
        for row in grid.iter_mut().take(level - 1) {
            for c in [col(a.left), col(a.right)] {
                if row[c] == ' ' {
                    row[c] = '|';
                }
            }
        }
    }

    let mut lines: Vec<String> = grid
        .into_iter()
        .rev()
        .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
        .collect();
    let mut dots = vec![' '; line_len];
    let mut labels = String::new();
    for v in 1..=n {
        dots[col(v)] = 'o';
        let label = v.to_string();
        labels.push_str(&label);
        if v < n {
            labels.push_str(&" ".repeat(width - label.len()));
        }
    }
    lines.push(dots.into_iter().collect::<String>().trim_end().to_string());
    lines.push(labels);
    lines.join("\n")
}
