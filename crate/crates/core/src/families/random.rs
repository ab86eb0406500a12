//! Seeded random generators. All of them draw from `ChaCha8Rng` seeded with
//! `seed_from_u64`, so a seed gives the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`: one Bernoulli draw per pair `u < v` in
/// lexicographic order. `p` is clamped to `[0, 1]`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("in range")
}

/// Connected block graph: starts from one clique and repeatedly glues a new
/// clique of order 2 to 4 at a random existing vertex.
pub fn random_block_graph(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let first = r.gen_range(1..=4).min(n);
    let mut edges = Graph::complete(first).edges();
    let mut order = first;
    while order < n {
        let size = r.gen_range(2..=4).min(n - order + 1);
        let cut = r.gen_range(0..order);
        let mut block = vec![cut];
        block.extend(order..order + size - 1);
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                edges.push((block[i], block[j]));
            }
        }
        order += size - 1;
    }
    Graph::new(n, &edges).expect("in range")
}

/// Split graph: clique on `0..c`, independent set on `c..n`, every
/// independent vertex joined to a random nonempty part of the clique. For
/// `n >= 3` the result is connected and not complete.
pub fn random_split_graph(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::complete(n);
    }
    let mut r = rng(seed);
    let c = r.gen_range(1..n);
    let mut edges = Graph::complete(c).edges();
    let clique: Vec<usize> = (0..c).collect();
    for s in c..n {
        // a single independent vertex must miss some clique vertex
        let max = if n - c == 1 { c - 1 } else { c };
        let k = r.gen_range(1..=max.max(1));
        for &u in clique.choose_multiple(&mut r, k) {
            edges.push((u, s));
        }
    }
    let labels = (0..c)
        .map(|i| format!("k{i}"))
        .chain((c..n).map(|i| format!("s{i}")));
    Graph::new(n, &edges)
        .expect("in range")
        .with_labels(labels.collect::<Vec<_>>())
}
