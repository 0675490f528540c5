//! Naive counters used as oracles by the integration tests. They rely only on
//! the poset's order relation and the shape's cell layout.

#![allow(dead_code)]

use marked_order::marked::MarkedPoset;
use marked_order::{Poset, SkewShape};

/// Subsets closed downward, by checking every subset.
pub fn ideals(p: &Poset) -> usize {
    let n = p.len();
    assert!(n <= 20, "exhaustive ideal count is for small posets");
    (0u32..1 << n)
        .filter(|&mask| (0..n).all(|x| mask & (1 << x) == 0 || (0..n).all(|y| !p.leq(y, x) || mask & (1 << y) != 0)))
        .count()
}

/// Order-preserving maps into `[1, n]`, by depth-first search.
pub fn maps(p: &Poset, n: i64) -> u64 {
    let order = p.topological_order();
    let mut values = vec![0i64; p.len()];
    fn go(p: &Poset, order: &[usize], k: usize, n: i64, values: &mut [i64]) -> u64 {
        if k == order.len() {
            return 1;
        }
        let x = order[k];
        let lo = order[..k]
            .iter()
            .filter(|&&y| p.lt(y, x))
            .map(|&y| values[y])
            .max()
            .unwrap_or(1);
        let mut total = 0;
        for v in lo..=n {
            values[x] = v;
            total += go(p, order, k + 1, n, values);
        }
        total
    }
    go(p, &order, 0, n, &mut values)
}

/// Integer extensions of the marking, by depth-first search.
pub fn extensions(m: &MarkedPoset) -> u64 {
    extension_points(m).len() as u64
}

pub fn extension_points(m: &MarkedPoset) -> Vec<Vec<i64>> {
    let p = m.poset();
    let marks: Vec<Option<i64>> = (0..p.len()).map(|x| m.mark(x)).collect();
    for x in 0..p.len() {
        for y in 0..p.len() {
            if let (Some(a), Some(b)) = (marks[x], marks[y]) {
                if p.lt(x, y) && a > b {
                    return Vec::new();
                }
            }
        }
    }
    let order = p.topological_order();
    let mut values: Vec<i64> = marks.iter().map(|v| v.unwrap_or(0)).collect();
    let mut out = Vec::new();
    fn go(p: &Poset, marks: &[Option<i64>], order: &[usize], k: usize, values: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == order.len() {
            out.push(values.clone());
            return;
        }
        let x = order[k];
        if marks[x].is_some() {
            return go(p, marks, order, k + 1, values, out);
        }
        let lo = (0..p.len())
            .filter(|&y| p.lt(y, x) && (marks[y].is_some() || order[..k].contains(&y)))
            .map(|y| values[y])
            .max()
            .expect("free element above a marked minimum");
        let hi = (0..p.len())
            .filter_map(|y| if p.lt(x, y) { marks[y] } else { None })
            .min()
            .expect("free element below a marked maximum");
        for v in lo..=hi {
            values[x] = v;
            go(p, marks, order, k + 1, values, out);
        }
    }
    go(p, &marks, &order, 0, &mut values, &mut out);
    out
}

/// Fillings of a skew shape cell by cell. `row_ok(left, cell)` and
/// `col_ok(above, cell)` decide the neighbour conditions; `bounds[r]` is the
/// entry range of shape row `r`.
pub fn fillings(
    shape: &SkewShape,
    bounds: &[(u32, u32)],
    row_ok: fn(u32, u32) -> bool,
    col_ok: fn(u32, u32) -> bool,
) -> u64 {
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| shape.row_span(r).map(move |c| (r, c)))
        .collect();
    let width = shape.lambda().iter().max().copied().unwrap_or(0) + 1;
    // 0 marks an empty cell; entries are at least 1
    let mut grid = vec![vec![0u32; width]; shape.rows()];
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        bounds: &[(u32, u32)],
        row_ok: fn(u32, u32) -> bool,
        col_ok: fn(u32, u32) -> bool,
        grid: &mut [Vec<u32>],
    ) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let (lo, hi) = bounds[r];
        let left = grid[r][c - 1];
        let above = if r > 0 { grid[r - 1][c] } else { 0 };
        let mut total = 0;
        for v in lo..=hi {
            if (left == 0 || row_ok(left, v)) && (above == 0 || col_ok(above, v)) {
                grid[r][c] = v;
                total += go(cells, k + 1, bounds, row_ok, col_ok, grid);
            }
        }
        grid[r][c] = 0;
        total
    }
    go(&cells, 0, bounds, row_ok, col_ok, &mut grid)
}

pub fn plane_partitions(shape: &SkewShape, max_entry: u32) -> u64 {
    fillings(shape, &vec![(1, max_entry); shape.rows()], |l, v| l >= v, |a, v| a >= v)
}

pub fn ssyt(shape: &SkewShape, bounds: &[(u32, u32)]) -> u64 {
    fillings(shape, bounds, |l, v| l <= v, |a, v| a < v)
}
