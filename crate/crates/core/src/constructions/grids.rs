//! Pattern colourings of Cartesian and strong products of paths and cycles.
//!
//! Patterns are written in 1-based grid coordinates `(row, column)` (cycle
//! columns are 0-based) and flattened through [`Grid`].

use super::{pack, Built};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, ProductKind};
use crate::position::PositionKind;

/// Maps pattern coordinates onto product vertex ids. `transposed` means the
/// pattern rows run along the second factor.
#[derive(Clone, Copy)]
struct Grid {
    rows: usize,
    cols: usize,
    transposed: bool,
}

impl Grid {
    fn new(rows: usize, cols: usize, transposed: bool) -> Grid {
        Grid {
            rows,
            cols,
            transposed,
        }
    }

    /// Zero-based row and column.
    fn id0(&self, r: usize, c: usize) -> usize {
        if self.transposed {
            c * self.rows + r
        } else {
            r * self.cols + c
        }
    }

    /// One-based row and column.
    fn id(&self, r: usize, c: usize) -> usize {
        self.id0(r - 1, c - 1)
    }
}

pub(crate) fn build_product(
    pk: ProductKind,
    a: &FamilySpec,
    b: &FamilySpec,
    g: &Graph,
    kind: PositionKind,
) -> Result<Option<Built>> {
    use FamilySpec::{Cycle, Path};
    use PositionKind::{Gp, Mu};
    Ok(match (pk, a, b, kind) {
        (ProductKind::Cartesian, Path(p), Path(q), Gp) => {
            let (p, q) = (*p, *q);
            let (m, n, tr) = if p <= q { (p, q, false) } else { (q, p, true) };
            let grid = Grid::new(m, n, tr);
            if m == 2 {
                Some(Built::new("ladder blocks", ladder(grid), true))
            } else if m == 3 && n % 12 == 0 {
                Some(Built::new("twelve-column pattern", p3_pattern(grid), true))
            } else if m == 4 {
                Some(Built::new(
                    "diagonal quadruples",
                    p4_diagonals(g, grid)?,
                    true,
                ))
            } else if let Some(grid) = tessellation_grid(p, q) {
                Some(Built::new(
                    "neighbourhood tessellation",
                    tessellation(g, grid)?,
                    false,
                ))
            } else {
                None
            }
        }
        (ProductKind::Cartesian, Path(p), Cycle(q), Gp) if cylinder_ok(*p, *q) => Some(Built::new(
            "rotated cylinder seeds",
            cylinder(Grid::new(*p, *q, false)),
            p % 5 == 0,
        )),
        (ProductKind::Cartesian, Cycle(q), Path(p), Gp) if cylinder_ok(*p, *q) => Some(Built::new(
            "rotated cylinder seeds",
            cylinder(Grid::new(*p, *q, true)),
            p % 5 == 0,
        )),
        (ProductKind::Cartesian, Cycle(p), Cycle(q), Gp) if torus_ok(*p, *q) => {
            Some(Built::new("rotated torus seed", torus(*p, *q)?, true))
        }
        (ProductKind::Strong, Path(p), Path(q), Gp) => {
            let grid = Grid::new(*p, *q, false);
            let exact = p % 2 == 0 && q % 2 == 0;
            Some(Built::new("strong grid blocks", strong_blocks(grid), exact))
        }
        (ProductKind::Strong, Path(p), Path(q), Mu) if (*p).min(*q) >= 2 => {
            let (p, q) = (*p, *q);
            let (m, n, tr) = if p <= q { (p, q, false) } else { (q, p, true) };
            if n == 2 {
                // K4
                Some(Built::new("strong grid rows", vec![(0..4).collect()], true))
            } else {
                Some(Built::new(
                    "strong grid row pairs",
                    strong_rows(Grid::new(m, n, tr)),
                    true,
                ))
            }
        }
        _ => None,
    })
}

fn ladder(grid: Grid) -> Vec<Vec<usize>> {
    let n = grid.cols;
    let mut classes = Vec::new();
    let mut c = 1;
    while c + 2 <= n {
        classes.push(vec![grid.id(1, c), grid.id(1, c + 2), grid.id(2, c + 1)]);
        classes.push(vec![grid.id(2, c), grid.id(2, c + 2), grid.id(1, c + 1)]);
        c += 3;
    }
    match n - (c - 1) {
        1 => classes.push(vec![grid.id(1, n), grid.id(2, n)]),
        2 => {
            classes.push(vec![grid.id(1, n - 1), grid.id(1, n)]);
            classes.push(vec![grid.id(2, n - 1), grid.id(2, n)]);
        }
        _ => {}
    }
    classes
}

const P3_TILE: [&str; 3] = ["gabhgcdijefi", "ababcdcdefef", "habghcdjiefj"];

fn p3_pattern(grid: Grid) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); 10 * grid.cols / 12];
    for (r, row) in P3_TILE.iter().enumerate() {
        for c in 0..grid.cols {
            let letter = row.as_bytes()[c % 12] - b'a';
            classes[10 * (c / 12) + letter as usize].push(grid.id0(r, c));
        }
    }
    classes
}

fn p4_diagonals(g: &Graph, grid: Grid) -> Result<Vec<Vec<usize>>> {
    let n = grid.cols;
    let mut classes: Vec<Vec<usize>> = (1..=n - 2)
        .map(|j| {
            vec![
                grid.id(1, j + 1),
                grid.id(2, j),
                grid.id(3, j + 2),
                grid.id(4, j + 1),
            ]
        })
        .collect();
    let leftover = [
        (1, 1),
        (1, n),
        (2, n - 1),
        (2, n),
        (3, 1),
        (3, 2),
        (4, 1),
        (4, n),
    ]
    .map(|(r, c)| grid.id(r, c));
    let rest = pack(g, PositionKind::Gp, &leftover, Vec::new(), 3, 100_000)?.ok_or_else(|| {
        Error::Internal("grid corner vertices do not split into three gp-sets".into())
    })?;
    classes.extend(rest);
    Ok(classes)
}

/// Odd number of rows and a multiple of four columns, in either order.
fn tessellation_grid(p: usize, q: usize) -> Option<Grid> {
    if p >= 3 && p % 2 == 1 && q.is_multiple_of(4) {
        Some(Grid::new(p, q, false))
    } else if q >= 3 && q % 2 == 1 && p.is_multiple_of(4) {
        Some(Grid::new(q, p, true))
    } else {
        None
    }
}

/// Open neighbourhoods of a grid of centres, then the uncovered vertices.
/// Centre rows alternate between two column phases; every phase shift is
/// tried and the leftovers are packed by search, possibly joining a
/// neighbourhood class.
fn tessellation(g: &Graph, grid: Grid) -> Result<Vec<Vec<usize>>> {
    let (n1, n2) = (grid.rows, grid.cols);
    let mut variants = Vec::new();
    for swap in [false, true] {
        for phase in 0..4 {
            let mut covered = vec![false; g.order()];
            let mut classes = Vec::new();
            for i in 2..n1 {
                for j in 1..=n2 {
                    let jj = (j + phase) % 4;
                    let low = (i % 4 == 0) != swap;
                    if i % 2 == 0 && (if low { jj <= 1 } else { jj >= 2 }) {
                        let class: Vec<usize> = g.neighbours(grid.id(i, j)).to_vec();
                        for &v in &class {
                            covered[v] = true;
                        }
                        classes.push(class);
                    }
                }
            }
            let leftover: Vec<usize> = (0..g.order()).filter(|&v| !covered[v]).collect();
            variants.push((classes, leftover));
        }
    }
    let mut target = variants
        .iter()
        .map(|(c, l)| c.len() + l.len().div_ceil(4))
        .min()
        .expect("eight variants");
    loop {
        for (classes, leftover) in &variants {
            if let Some(all) = pack(
                g,
                PositionKind::Gp,
                leftover,
                classes.clone(),
                target,
                200_000,
            )? {
                return Ok(all);
            }
        }
        target += 1;
    }
}

fn cylinder_ok(rows: usize, cycle: usize) -> bool {
    rows >= 5 && (cycle == 7 || cycle >= 9)
}

/// `grid.rows` path rows (1-based) times `grid.cols` cycle columns (0-based).
fn cylinder(grid: Grid) -> Vec<Vec<usize>> {
    let (n1, n2) = (grid.rows, grid.cols);
    let seed: [(usize, usize); 5] = if n2 == 7 {
        [(1, 1), (2, 3), (3, 5), (4, 0), (5, 2)]
    } else {
        [(1, 2), (2, 5), (3, n2 / 2 + 3), (4, 1), (5, 4)]
    };
    let at = |r: usize, c: usize| grid.id0(r - 1, c % n2);
    let mut classes = Vec::new();
    for t in 0..n1 / 5 {
        for shift in 0..n2 {
            classes.push(
                seed.iter()
                    .map(|&(r, c)| at(r + 5 * t, c + shift))
                    .collect(),
            );
        }
    }
    for r in 5 * (n1 / 5) + 1..=n1 {
        for c in (0..n2).step_by(2) {
            classes.push((c..(c + 2).min(n2)).map(|c| at(r, c)).collect());
        }
    }
    classes
}

fn torus_ok(p: usize, q: usize) -> bool {
    p.is_multiple_of(7) && q.is_multiple_of(7) && p >= 49 && q >= 49
}

fn cyc(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

fn torus_dist(u: (usize, usize), v: (usize, usize), n1: usize, n2: usize) -> usize {
    cyc(u.0, v.0, n1) + cyc(u.1, v.1, n2)
}

fn cyclic_gp(set: &[(usize, usize)], n1: usize, n2: usize) -> bool {
    let d = |u, v| torus_dist(u, v, n1, n2);
    for (i, &u) in set.iter().enumerate() {
        for (j, &v) in set.iter().enumerate().skip(i + 1) {
            for (k, &w) in set.iter().enumerate() {
                if k != i && k != j && d(u, w) + d(w, v) == d(u, v) {
                    return false;
                }
            }
        }
    }
    true
}

/// A gp-set of `C_{n1} □ C_{n2}` with first coordinates `i * n1 / 7`,
/// found by depth-first search on the second coordinates.
pub fn torus_seed(n1: usize, n2: usize) -> Option<Vec<(usize, usize)>> {
    fn rec(set: &mut Vec<(usize, usize)>, n1: usize, n2: usize) -> bool {
        if set.len() == 7 {
            return true;
        }
        let a = set.len() * n1 / 7;
        for b in 0..n2 {
            set.push((a, b));
            if cyclic_gp(set, n1, n2) && rec(set, n1, n2) {
                return true;
            }
            set.pop();
        }
        false
    }
    if !n1.is_multiple_of(7) {
        return None;
    }
    let mut set = vec![(0, 0)];
    rec(&mut set, n1, n2).then_some(set)
}

/// Checks that `classes` partition the torus and that each is a gp-set,
/// using the closed-form distance of the torus.
pub fn verify_torus_cyclic(n1: usize, n2: usize, classes: &[Vec<(usize, usize)>]) -> bool {
    let mut seen = vec![false; n1 * n2];
    for class in classes {
        for &(a, b) in class {
            if a >= n1 || b >= n2 || std::mem::replace(&mut seen[a * n2 + b], true) {
                return false;
            }
        }
        if !cyclic_gp(class, n1, n2) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
}

fn torus(n1: usize, n2: usize) -> Result<Vec<Vec<usize>>> {
    let seed = torus_seed(n1, n2)
        .ok_or_else(|| Error::Internal(format!("no torus seed for {n1}x{n2}")))?;
    let strip = n1 / 7;
    let mut classes = Vec::with_capacity(strip * n2);
    for j in 0..strip {
        for t in 0..n2 {
            classes.push(
                seed.iter()
                    .map(|&(a, b)| (a + j, (b + t) % n2))
                    .collect::<Vec<_>>(),
            );
        }
    }
    if !verify_torus_cyclic(n1, n2, &classes) {
        return Err(Error::Internal(
            "torus tessellation failed the cyclic-metric check".into(),
        ));
    }
    Ok(classes
        .into_iter()
        .map(|c| c.into_iter().map(|(a, b)| a * n2 + b).collect())
        .collect())
}

fn strong_blocks(grid: Grid) -> Vec<Vec<usize>> {
    let mut classes = Vec::new();
    for r in (0..grid.rows).step_by(2) {
        for c in (0..grid.cols).step_by(2) {
            let mut class = Vec::new();
            for rr in r..(r + 2).min(grid.rows) {
                for cc in c..(c + 2).min(grid.cols) {
                    class.push(grid.id0(rr, cc));
                }
            }
            classes.push(class);
        }
    }
    classes
}

/// Rows `i` and `r + i` share a class when there are `2r` rows; with `2r+1`
/// rows the pairs are `i`, `r + 1 + i` and the middle row is alone.
fn strong_rows(grid: Grid) -> Vec<Vec<usize>> {
    let (m, n) = (grid.rows, grid.cols);
    let row = |i: usize| (1..=n).map(move |c| grid.id(i, c));
    let r = m / 2;
    if m == 2 {
        return vec![row(1).collect(), row(2).collect()];
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let offset = if m % 2 == 0 { r } else { r + 1 };
    for i in 1..=r {
        classes.push(row(i).chain(row(offset + i)).collect());
    }
    if m % 2 == 1 {
        classes.push(row(r + 1).collect());
    }
    classes
}
