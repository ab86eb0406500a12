//! Simple undirected graphs on vertices `0..n` with a lazily cached
//! all-pairs distance matrix.

mod distance;
pub mod graph6;
pub mod json;
mod paths;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use distance::{ComponentStructure, DistanceMatrix};
pub use paths::{exists_induced_path_through, monophonic_diameter, InducedTriples};

/// Immutable simple graph.
///
/// Vertices are `0..n`. Each vertex may carry a label (a coordinate, a
/// 2-subset, a gadget role) that generators attach so that pattern
/// colourings can be read back in their natural coordinates.
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
    dist: OnceLock<DistanceMatrix>,
}

/// Product rule for [`Graph::product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Strong,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            nbrs: self.nbrs.clone(),
            labels: self.labels.clone(),
            dist: self.dist.clone(),
        }
    }
}

impl PartialEq for Graph {
    /// Structural equality of the labelled graphs; vertex labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    pub(crate) fn from_adjacency(adj: Vec<FixedBitSet>) -> Graph {
        let n = adj.len();
        let nbrs = adj.iter().map(|row| row.ones().collect()).collect();
        Graph {
            n,
            adj,
            nbrs,
            labels: vec![None; n],
            dist: OnceLock::new(),
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![FixedBitSet::with_capacity(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(..);
                row.set(u, false);
                row
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Attaches one label per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Graph {
        let labels: Vec<Option<String>> = labels.into_iter().map(|s| Some(s.into())).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = labels;
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, u: usize) -> &[usize] {
        &self.nbrs[u]
    }

    #[inline]
    pub fn neighbour_set(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.nbrs[u].len()
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels[u].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.nbrs[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Hop distances, computed by BFS on first use and cached.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| DistanceMatrix::bfs(self))
    }

    /// Shortcut for `self.distances().get(u, v)`.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.distances().get(u, v)
    }

    pub fn components(&self) -> ComponentStructure {
        ComponentStructure::new(self)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().count() == 1
    }

    /// Largest diameter over the components.
    pub fn diameter(&self) -> u32 {
        self.components().diam_star
    }

    /// Edge-complement; labels are kept.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                let mut row = self.adj[u].clone();
                row.toggle_range(..);
                row.set(u, false);
                row
            })
            .collect();
        let mut g = Graph::from_adjacency(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Cartesian or strong product. Vertex `(i, j)` becomes `i * h.order() + j`.
    pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
        let (n1, n2) = (g.n, h.n);
        let mut edges = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 {
                let a = i * n2 + j;
                for &j2 in h.neighbours(j) {
                    if j < j2 {
                        edges.push((a, i * n2 + j2));
                    }
                }
                for &i2 in g.neighbours(i) {
                    if i < i2 {
                        edges.push((a, i2 * n2 + j));
                        if kind == ProductKind::Strong {
                            for &j2 in h.neighbours(j) {
                                edges.push((a, i2 * n2 + j2));
                            }
                        }
                    }
                }
            }
        }
        let labels = (0..n1).flat_map(|i| {
            (0..n2).map(move |j| {
                let li = g.label(i).map_or_else(|| i.to_string(), str::to_owned);
                let lj = h.label(j).map_or_else(|| j.to_string(), str::to_owned);
                format!("({li},{lj})")
            })
        });
        Graph::new(n1 * n2, &edges)
            .expect("product edges are in range")
            .with_labels(labels.collect::<Vec<_>>())
    }

    pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
        Graph::product(ProductKind::Cartesian, g, h)
    }

    pub fn strong(g: &Graph, h: &Graph) -> Graph {
        Graph::product(ProductKind::Strong, g, h)
    }

    fn union_edges(g: &Graph, h: &Graph) -> Vec<(usize, usize)> {
        let off = g.n;
        g.edges()
            .into_iter()
            .chain(h.edges().into_iter().map(|(u, v)| (u + off, v + off)))
            .collect()
    }

    fn union_labels(g: &Graph, h: &Graph) -> Vec<Option<String>> {
        g.labels.iter().chain(h.labels.iter()).cloned().collect()
    }

    /// Disjoint union; `h`'s vertices are shifted by `g.order()`.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        let mut out = Graph::new(g.n + h.n, &Graph::union_edges(g, h)).expect("in range");
        out.labels = Graph::union_labels(g, h);
        out
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(g: &Graph, h: &Graph) -> Graph {
        let mut edges = Graph::union_edges(g, h);
        for u in 0..g.n {
            for v in 0..h.n {
                edges.push((u, g.n + v));
            }
        }
        let mut out = Graph::new(g.n + h.n, &edges).expect("in range");
        out.labels = Graph::union_labels(g, h);
        out
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    edges.push((a, b));
                }
            }
        }
        let mut g = Graph::new(vertices.len(), &edges).expect("in range");
        g.labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        g
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        let mut g = Graph::new(self.n, &edges).expect("permutation in range");
        let mut labels = vec![None; self.n];
        for v in 0..self.n {
            labels[perm[v]] = self.labels[v].clone();
        }
        g.labels = labels;
        g
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }

    /// Extreme (simplicial) vertices: those whose neighbourhood is a clique.
    pub fn extreme_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| self.is_clique(&self.nbrs[u]))
            .collect()
    }

    /// No edge has two common neighbours, i.e. no `K_4 - e` subgraph.
    pub fn is_diamond_free(&self) -> bool {
        self.edges().into_iter().all(|(u, v)| {
            let mut common = self.adj[u].clone();
            common.intersect_with(&self.adj[v]);
            common.count_ones(..) < 2
        })
    }

    /// Every component is a clique.
    pub fn is_disjoint_union_of_cliques(&self) -> bool {
        let comps = self.components();
        comps.members().iter().all(|c| self.is_clique(c))
    }

    /// Vertex sets of the biconnected blocks (bridges and isolated vertices
    /// included as blocks of order two and one).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.nbrs[root].is_empty() {
                disc[root] = timer;
                timer += 1;
                blocks.push(vec![root]);
                continue;
            }
            // iterative DFS; frame = (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.nbrs[u].len() {
                    let v = self.nbrs[u][*idx];
                    *idx += 1;
                    if disc[v] == usize::MAX {
                        edge_stack.push((u, v));
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, u, 0));
                    } else if v != parent && disc[v] < disc[u] {
                        edge_stack.push((u, v));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let mut block = Vec::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                block.push(a);
                                block.push(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            block.dedup();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks
    }

    /// Every block is a clique.
    pub fn is_block_graph(&self) -> bool {
        self.blocks().iter().all(|b| self.is_clique(b))
    }

    /// Vertex set splits into a clique and an independent set. Uses the
    /// degree-sequence test: with degrees sorted descending and `m` the
    /// largest index with `d_m >= m - 1`, the graph is split iff
    /// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
    pub fn is_split(&self) -> bool {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        let m = (1..=self.n)
            .filter(|&i| d[i - 1] + 1 >= i)
            .max()
            .unwrap_or(0);
        let head: usize = d[..m].iter().sum();
        let tail: usize = d[m..].iter().sum();
        head == m * (m.saturating_sub(1)) + tail
    }

    /// Lexicographically least graph6 string over all vertex orderings.
    /// Brute force over `n!` permutations, so only for small graphs.
    pub fn canonical_graph6(&self) -> Result<String> {
        if self.n > 9 {
            return Err(Error::Unsupported(format!(
                "brute-force canonical form needs n <= 9, got {}",
                self.n
            )));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = graph6::encode(&self.permuted(&perm))?;
        // Heap's algorithm
        let mut c = vec![0usize; self.n];
        let mut i = 0;
        while i < self.n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let code = graph6::encode(&self.permuted(&perm))?;
                if code < best {
                    best = code;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        Ok(best)
    }

    /// Vertices reachable from `s`.
    pub(crate) fn bfs_order(&self, s: usize) -> Vec<usize> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        let mut order = Vec::new();
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.nbrs[u] {
                if !seen.put(v) {
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Vertices sorted by descending degree, ties by id.
    pub(crate) fn degree_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 3, n: 3 }
        );
        assert_eq!(Graph::new(3, &[(1, 1)]).unwrap_err(), Error::SelfLoop(1));
    }

    #[test]
    fn build_dedups() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.degree(3), 0);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, cycle(5));
        assert_eq!(Graph::new(1, &[]).unwrap().order(), 1);
    }

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c5 = cycle(5);
        let cc = c5.complement();
        // the complement of C_5 is the pentagram 0-2-4-1-3-0
        let perm = [0, 2, 4, 1, 3];
        assert_eq!(c5.permuted(&perm), cc);
        assert_eq!(cc.complement(), c5);
    }

    #[test]
    fn products() {
        let p2 = path(2);
        assert_eq!(Graph::cartesian(&p2, &p2).permuted(&[0, 1, 3, 2]), cycle(4));
        assert_eq!(Graph::strong(&p2, &p2), Graph::complete(4));
        let grid = Graph::cartesian(&path(4), &path(6));
        assert_eq!(grid.order(), 24);
        assert_eq!(grid.diameter(), 8);
    }

    #[test]
    fn join_and_union() {
        let two_k2 = Graph::disjoint_union(&Graph::complete(2), &Graph::complete(2));
        let butterfly = Graph::join(&Graph::complete(1), &two_k2);
        assert_eq!(butterfly.order(), 5);
        assert_eq!(butterfly.size(), 6);
        assert_eq!(butterfly.diameter(), 2);
        let j = Graph::join(&cycle(5), &Graph::complete(2));
        assert_eq!(j.order(), 7);
        assert_eq!(j.size(), 5 + 1 + 10);
        let u = Graph::disjoint_union(&Graph::complete(3), &Graph::complete(3));
        assert_eq!(u.components().count(), 2);
        assert!(u.is_disjoint_union_of_cliques());
    }

    #[test]
    fn extreme_vertices() {
        assert_eq!(path(4).extreme_vertices(), vec![0, 3]);
        assert_eq!(Graph::complete(5).extreme_vertices(), vec![0, 1, 2, 3, 4]);
        assert!(cycle(5).extreme_vertices().is_empty());
    }

    #[test]
    fn diamonds() {
        assert!(Graph::cartesian(&path(4), &path(4)).is_diamond_free());
        let diamond = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!diamond.is_diamond_free());
        assert!(!Graph::complete(4).is_diamond_free());
    }

    #[test]
    fn block_graphs() {
        assert!(path(6).is_block_graph());
        assert!(!cycle(4).is_block_graph());
        assert!(cycle(3).is_block_graph());
        // two K_4 sharing vertex 3
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a, b));
                edges.push((a + 3, b + 3));
            }
        }
        let g = Graph::new(7, &edges).unwrap();
        assert!(g.is_block_graph());
        assert_eq!(g.blocks().len(), 2);
        assert!(Graph::empty(3).is_block_graph());
    }
}
