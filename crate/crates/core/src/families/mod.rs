//! Named graph families and the graphs built in the constructive proofs.
//!
//! Vertex numbering is part of the contract, because pattern colourings
//! refer to vertices by id:
//!
//! * `path:n` has vertices labelled `1..=n` in order; `cycle:n` uses `0..n`
//!   (arithmetic in ℤ_n).
//! * Products flatten `(i, j)` to `i * |V(h)| + j` on 0-based factor ids, so
//!   grid coordinate `(i, j)` (1-based) is vertex `(i-1) * n2 + (j-1)`.
//! * `kneser2:n` and `line_complete:n` list the 2-subsets `{a,b}` of
//!   `1..=n` (`a < b`) in lexicographic order.
//! * Further per-family layouts are documented on [`FamilySpec`].

mod parse;
mod random;

use crate::error::{Error, Result};
use crate::graph::{Graph, ProductKind};

pub use random::{random_block_graph, random_graph, random_split_graph};

/// A named graph family instance.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Complete multipartite graph; parts are stored in descending order
    /// and laid out consecutively.
    Multipartite(Vec<usize>),
    Kneser2(usize),
    LineComplete(usize),
    /// Petersen graph: outer cycle `0..5`, inner vertices `5..10` with
    /// inner cycle 5-6-7-8-9-5 and spokes 1-8, 0-5, 2-6, 3-9, 4-7.
    Petersen,
    /// Complete `a`-partite graph of order `n` with balanced parts.
    Turan {
        a: usize,
        n: usize,
    },
    /// Path `0..=2a-2` with `l` extra leaves on vertex `2a-3`.
    TreeLeaves {
        a: usize,
        l: usize,
    },
    /// Path `0..=2a-2` with `b-a` extra leaves on vertex `2a-3`.
    T {
        a: usize,
        b: usize,
    },
    /// `x_i = i-1`, `y_i = r+i-1` (`K_{r,r}` minus `x_i y_i`), path
    /// `z_j = 2r+j` for `j = 0..=s`, with `z_0` adjacent to every `x_i`.
    H {
        r: usize,
        s: usize,
    },
    /// `P_2 ⊠ P_{2r}` at ids `(i-1)*2r + (j-1)`, then a path `w_1..w_{2s-1}`
    /// at ids `4r..`, with `w_1` adjacent to `(1,2r)` and `(2,2r)`.
    J {
        r: usize,
        s: usize,
    },
    /// Clique `0..a` with `n-a` leaves attached to vertex 0.
    GStar {
        a: usize,
        n: usize,
    },
    /// Clique `0..a` with a path of order `2b-a` whose first vertex is the
    /// clique vertex `a-1`; the rest of the path is `a..2b-1`.
    G {
        a: usize,
        b: usize,
    },
    /// Centre `x = 0`, `x_i = i`, `y_i = t+i` (`1 <= i <= t`), path
    /// `u_j = 2t+j` (`1 <= j <= r`) with `u_1 ~ x`.
    S {
        r: usize,
        t: usize,
    },
    /// Path `u_i = i-1` (`1 <= i <= r`) plus `x = r` adjacent to `u_1, u_3`.
    Q(usize),
    /// `K_{r,r}` minus a perfect matching: `x_i = i-1`, `y_i = r+i-1`.
    KGadget(usize),
    /// `K_n` with the edges of disjoint cliques `Z_2, ..., Z_a` removed;
    /// `Z_2` is `{0,1}`, `Z_3` the next three ids, and so on.
    CompleteMinusCliques {
        n: usize,
        a: usize,
    },
    /// `C_{2a-1}` on `0..2a-1` joined with `K_{n-2a+1}` on the rest.
    CycleJoinClique {
        a: usize,
        n: usize,
    },
    SplitRandom {
        n: usize,
        seed: u64,
    },
    /// Base graph on `0..n`, its complement on `n..2n`, matching `i ~ n+i`.
    ComplementaryPrism(Box<FamilySpec>),
    BlockRandom {
        n: usize,
        seed: u64,
    },
    Product(ProductKind, Box<FamilySpec>, Box<FamilySpec>),
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
}

fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(out_of_range(msg()))
    }
}

fn numbered(g: Graph, offset: usize) -> Graph {
    let n = g.order();
    g.with_labels((0..n).map(|i| (i + offset).to_string()))
}

/// 2-subsets of `1..=n` in lexicographic order.
pub fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((a, b));
        }
    }
    out
}

/// Id of the 2-subset `{a, b}` (1-based, any order) in [`two_subsets`] order.
pub fn two_subset_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    // subsets starting below a: sum_{x=1}^{a-1} (n - x)
    (a - 1) * n - (a - 1) * a / 2 + (b - a - 1)
}

fn subset_graph(n: usize, adjacent: impl Fn((usize, usize), (usize, usize)) -> bool) -> Graph {
    let verts = two_subsets(n);
    let mut edges = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if adjacent(verts[i], verts[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(verts.len(), &edges)
        .expect("in range")
        .with_labels(verts.iter().map(|(a, b)| format!("{{{a},{b}}}")))
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    numbered(Graph::new(n, &edges).expect("in range"), 1)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    numbered(Graph::new(n, &edges).expect("in range"), 0)
}

pub fn complete(n: usize) -> Graph {
    numbered(Graph::complete(n), 0)
}

/// Complete multipartite graph with parts laid out consecutively in the
/// order given.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        for j in 0..size {
            part_of.push(p);
            labels.push(format!("p{}.{}", p + 1, j + 1));
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("in range").with_labels(labels)
}

pub fn kneser2(n: usize) -> Graph {
    subset_graph(n, |(a, b), (c, d)| a != c && a != d && b != c && b != d)
}

pub fn line_complete(n: usize) -> Graph {
    subset_graph(n, |(a, b), (c, d)| a == c || a == d || b == c || b == d)
}

pub fn petersen() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 5),
        (1, 8),
        (0, 5),
        (2, 6),
        (3, 9),
        (4, 7),
    ];
    Graph::new(10, &edges)
        .expect("in range")
        .with_labels((1..=10).map(|i| format!("v{i}")))
}

fn path_with_leaves(a: usize, leaves: usize) -> Graph {
    let len = 2 * a - 1;
    let mut edges: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    let hub = 2 * a - 3;
    for j in 0..leaves {
        edges.push((hub, len + j));
    }
    numbered(Graph::new(len + leaves, &edges).expect("in range"), 0)
}

fn balanced_parts(a: usize, n: usize) -> Vec<usize> {
    (0..a).map(|i| n / a + usize::from(i < n % a)).collect()
}

impl FamilySpec {
    /// Builds the graph, checking the parameter ranges of the family.
    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        Ok(match self {
            Path(n) => {
                require(*n >= 1, || "path needs n >= 1".into())?;
                path(*n)
            }
            Cycle(n) => {
                require(*n >= 3, || "cycle needs n >= 3".into())?;
                cycle(*n)
            }
            Complete(n) => {
                require(*n >= 1, || "complete graph needs n >= 1".into())?;
                complete(*n)
            }
            Multipartite(parts) => {
                require(!parts.is_empty() && parts.iter().all(|&p| p >= 1), || {
                    "multipartite needs at least one part, all of size >= 1".into()
                })?;
                let mut sorted = parts.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                complete_multipartite(&sorted)
            }
            Kneser2(n) => {
                require(*n >= 5, || "kneser2 needs n >= 5".into())?;
                kneser2(*n)
            }
            LineComplete(n) => {
                require(*n >= 2, || "line_complete needs n >= 2".into())?;
                line_complete(*n)
            }
            Petersen => petersen(),
            Turan { a, n } => {
                require(*a >= 1 && n >= a, || "turan needs 1 <= a <= n".into())?;
                complete_multipartite(&balanced_parts(*a, *n))
            }
            TreeLeaves { a, l } => {
                require(*a >= 2, || "tree_leaves needs a >= 2".into())?;
                path_with_leaves(*a, *l)
            }
            T { a, b } => {
                require(*a >= 2 && b >= a, || "T needs 2 <= a <= b".into())?;
                path_with_leaves(*a, b - a)
            }
            H { r, s } => {
                require(*r >= 3, || "H needs r >= 3".into())?;
                let (r, s) = (*r, *s);
                let mut edges = Vec::new();
                for i in 0..r {
                    for j in 0..r {
                        if i != j {
                            edges.push((i, r + j));
                        }
                    }
                    edges.push((i, 2 * r));
                }
                for j in 0..s {
                    edges.push((2 * r + j, 2 * r + j + 1));
                }
                let labels = (1..=r)
                    .map(|i| format!("x{i}"))
                    .chain((1..=r).map(|i| format!("y{i}")))
                    .chain((0..=s).map(|j| format!("z{j}")));
                Graph::new(2 * r + s + 1, &edges)
                    .expect("in range")
                    .with_labels(labels.collect::<Vec<_>>())
            }
            J { r, s } => {
                require(*r >= 1 && *s >= 1, || "J needs r, s >= 1".into())?;
                let (r, s) = (*r, *s);
                let grid = Graph::strong(&path(2), &path(2 * r));
                let tail = path(2 * s - 1);
                let mut edges = grid.edges();
                let off = 4 * r;
                edges.extend(tail.edges().into_iter().map(|(u, v)| (u + off, v + off)));
                edges.push((2 * r - 1, off));
                edges.push((4 * r - 1, off));
                let labels = grid
                    .labels()
                    .iter()
                    .map(|l| l.clone().unwrap())
                    .chain((1..2 * s).map(|k| format!("w{k}")));
                Graph::new(off + 2 * s - 1, &edges)
                    .expect("in range")
                    .with_labels(labels.collect::<Vec<_>>())
            }
            GStar { a, n } => {
                require(*a >= 1 && n >= a, || "G_star needs 1 <= a <= n".into())?;
                let mut edges = Graph::complete(*a).edges();
                edges.extend((*a..*n).map(|v| (0, v)));
                numbered(Graph::new(*n, &edges).expect("in range"), 0)
            }
            G { a, b } => {
                require(*a >= 2 && b >= a, || "G needs 2 <= a <= b".into())?;
                let order = 2 * b - 1;
                let mut edges = Graph::complete(*a).edges();
                let mut prev = a - 1;
                for v in *a..order {
                    edges.push((prev, v));
                    prev = v;
                }
                numbered(Graph::new(order, &edges).expect("in range"), 0)
            }
            S { r, t } => {
                require(*r >= 3 && *t >= 2, || "S needs r >= 3 and t >= 2".into())?;
                let (r, t) = (*r, *t);
                let mut edges = Vec::new();
                for i in 1..=t {
                    edges.push((0, i));
                    edges.push((i, t + i));
                }
                edges.push((0, 2 * t + 1));
                for j in 1..r {
                    edges.push((2 * t + j, 2 * t + j + 1));
                }
                let labels = std::iter::once("x".to_string())
                    .chain((1..=t).map(|i| format!("x{i}")))
                    .chain((1..=t).map(|i| format!("y{i}")))
                    .chain((1..=r).map(|j| format!("u{j}")));
                Graph::new(2 * t + r + 1, &edges)
                    .expect("in range")
                    .with_labels(labels.collect::<Vec<_>>())
            }
            Q(r) => {
                require(*r >= 4, || "Q needs r >= 4".into())?;
                let r = *r;
                let mut edges: Vec<_> = (1..r).map(|i| (i - 1, i)).collect();
                edges.push((r, 0));
                edges.push((r, 2));
                let labels = (1..=r).map(|i| format!("u{i}")).chain(["x".to_string()]);
                Graph::new(r + 1, &edges)
                    .expect("in range")
                    .with_labels(labels.collect::<Vec<_>>())
            }
            KGadget(r) => {
                require(*r >= 3, || "K_gadget needs r >= 3".into())?;
                let r = *r;
                let mut edges = Vec::new();
                for i in 0..r {
                    for j in 0..r {
                        if i != j {
                            edges.push((i, r + j));
                        }
                    }
                }
                let labels = (1..=r)
                    .map(|i| format!("x{i}"))
                    .chain((1..=r).map(|i| format!("y{i}")));
                Graph::new(2 * r, &edges)
                    .expect("in range")
                    .with_labels(labels.collect::<Vec<_>>())
            }
            CompleteMinusCliques { n, a } => {
                require(*a >= 2 && *n >= a * (a + 1) / 2, || {
                    "complete_minus_cliques needs a >= 2 and n >= a(a+1)/2".into()
                })?;
                let mut group = vec![usize::MAX; *n];
                let mut next = 0;
                for size in 2..=*a {
                    for v in next..next + size {
                        group[v] = size;
                    }
                    next += size;
                }
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        if group[u] == usize::MAX || group[u] != group[v] {
                            edges.push((u, v));
                        }
                    }
                }
                numbered(Graph::new(*n, &edges).expect("in range"), 0)
            }
            CycleJoinClique { a, n } => {
                require(*a >= 3 && *n >= 2 * a - 1, || {
                    "cycle_join_clique needs a >= 3 and n >= 2a-1".into()
                })?;
                let c = cycle(2 * a - 1);
                let k = Graph::complete(n - (2 * a - 1));
                numbered(Graph::join(&c, &k), 0)
            }
            SplitRandom { n, seed } => {
                require(*n >= 1, || "split_random needs n >= 1".into())?;
                random_split_graph(*n, *seed)
            }
            ComplementaryPrism(base) => complementary_prism(&base.generate()?),
            BlockRandom { n, seed } => {
                require(*n >= 1, || "block_random needs n >= 1".into())?;
                random_block_graph(*n, *seed)
            }
            Product(kind, a, b) => Graph::product(*kind, &a.generate()?, &b.generate()?),
            Random { n, p, seed } => {
                require((0.0..=1.0).contains(p), || {
                    "random needs 0 <= p <= 1".into()
                })?;
                random_graph(*n, *p, *seed)
            }
        })
    }

    pub fn cartesian(a: FamilySpec, b: FamilySpec) -> FamilySpec {
        FamilySpec::Product(ProductKind::Cartesian, Box::new(a), Box::new(b))
    }

    pub fn strong(a: FamilySpec, b: FamilySpec) -> FamilySpec {
        FamilySpec::Product(ProductKind::Strong, Box::new(a), Box::new(b))
    }
}

/// Base graph, its complement, and the matching between copies.
pub fn complementary_prism(g: &Graph) -> Graph {
    let n = g.order();
    let comp = g.complement();
    let mut edges = g.edges();
    edges.extend(comp.edges().into_iter().map(|(u, v)| (u + n, v + n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    let base: Vec<String> = (0..n)
        .map(|i| g.label(i).map_or_else(|| i.to_string(), str::to_owned))
        .collect();
    let labels: Vec<String> = base
        .iter()
        .cloned()
        .chain(base.iter().map(|l| format!("{l}'")))
        .collect();
    Graph::new(2 * n, &edges)
        .expect("in range")
        .with_labels(labels)
}

/// Parses the text form, e.g. `cycle:9` or `cartesian(path:4,path:6)`.
pub fn parse_spec(text: &str) -> Result<FamilySpec> {
    text.parse()
}

#[cfg(test)]
mod tests;
