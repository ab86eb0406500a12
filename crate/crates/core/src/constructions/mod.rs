//! Explicit colourings from the constructive proofs. Every result is
//! re-verified before it is returned.

mod grids;
#[cfg(test)]
mod tests;
mod triples;

pub use grids::{torus_seed, verify_torus_cyclic};
pub use triples::{kirkman_triple_system, TripleSystem};

use crate::budget::Budget;
use crate::closed_forms::{multipartite_formula, predicted_chi, PredictedValue};
use crate::error::{Error, Result};
use crate::families::{two_subset_index, FamilySpec};
use crate::graph::Graph;
use crate::position::{is_position_set, PositionKind};
use crate::solver::{
    clique_cover, minimum_total_dominating_set, CertifiedColouring, Colouring, Optimality,
};

/// Classes plus whether the construction itself meets a proven lower bound.
pub(crate) struct Built {
    pub classes: Vec<Vec<usize>>,
    pub proven: bool,
    pub name: &'static str,
}

impl Built {
    fn new(name: &'static str, classes: Vec<Vec<usize>>, proven: bool) -> Built {
        Built {
            classes,
            proven,
            name,
        }
    }
}

fn certify(
    g: &Graph,
    classes: &[Vec<usize>],
    kind: PositionKind,
    name: &str,
    opt: Optimality,
) -> Result<CertifiedColouring> {
    let c = Colouring::from_classes(g.order(), classes)
        .map_err(|e| Error::Internal(format!("{name}: {e}")))?;
    CertifiedColouring::certify(g, c, kind, name, opt)
}

/// Builds the construction for `spec` and `kind`.
pub fn construct_colouring(spec: &FamilySpec, kind: PositionKind) -> Result<CertifiedColouring> {
    let g = spec.generate()?;
    let built = build(spec, &g, kind)?;
    let k = built.classes.len();
    let matches_prediction = match predicted_chi(spec, kind).value {
        PredictedValue::Exact { value } => {
            if built.proven && value != k {
                return Err(Error::Internal(format!(
                    "{}: {k} classes but the formula gives {value}",
                    built.name
                )));
            }
            value == k
        }
        PredictedValue::Bounds { lower, .. } => lower == k,
        PredictedValue::Unknown => false,
    };
    let opt = if built.proven || matches_prediction {
        Optimality::Exact
    } else {
        Optimality::UpperBoundOnly
    };
    certify(&g, &built.classes, kind, built.name, opt)
}

fn unsupported(spec: &FamilySpec, kind: PositionKind) -> Error {
    Error::Unsupported(format!("no construction for {spec} with kind {kind}"))
}

fn build(spec: &FamilySpec, g: &Graph, kind: PositionKind) -> Result<Built> {
    use FamilySpec::*;
    use PositionKind::*;
    let n = g.order();
    Ok(match (spec, kind) {
        (Cycle(m), Gp) => Built::new("cycle triples", cycle_gp(*m), true),
        (Cycle(m), Mono) => {
            let classes = if *m == 3 {
                vec![vec![0, 1, 2]]
            } else {
                consecutive_pairs(n)
            };
            Built::new("cycle pairs", classes, true)
        }
        (Path(_) | TreeLeaves { .. } | T { .. } | S { .. }, Gp | Mono)
        | (GStar { .. } | G { .. } | BlockRandom { .. }, Gp) => {
            Built::new("block graph peeling", peel(g)?, true)
        }
        (Kneser2(m), Gp) => Built::new("kneser pairs by maximum", kneser_gp(*m), true),
        (LineComplete(m), Gp) => {
            let (classes, proven) = line_complete_gp(*m)?;
            Built::new("kirkman triangles", classes, proven)
        }
        (Multipartite(parts), Gp) => {
            let mut parts = parts.clone();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Built::new(
                "multipartite parts and transversals",
                multipartite_gp(&parts),
                true,
            )
        }
        (Turan { a, n }, Gp) => {
            let parts = balanced(*a, *n);
            Built::new(
                "multipartite parts and transversals",
                multipartite_gp(&parts),
                true,
            )
        }
        (Turan { a, n }, GpI | MonoI) => {
            Built::new("partite sets", part_ranges(&balanced(*a, *n)), true)
        }
        (CompleteMinusCliques { a, .. }, Gp) => {
            let mut classes = Vec::new();
            let mut next = 0;
            for size in 2..=*a {
                classes.push((next..next + size).collect());
                next += size;
            }
            classes.push((next..n).collect());
            Built::new("deleted cliques and the rest", classes, true)
        }
        (CycleJoinClique { a, .. }, Mono) => {
            let cyc = 2 * a - 1;
            let mut classes: Vec<Vec<usize>> = (0..a - 1).map(|i| vec![2 * i, 2 * i + 1]).collect();
            classes.push(std::iter::once(cyc - 1).chain(cyc..n).collect());
            Built::new("cycle pairs and the clique", classes, true)
        }
        (H { r, s }, Gp) => Built::new("H sides and path pairs", h_gp(*r, *s), true),
        (H { r, s }, Mono) => Built::new("H triples and pairs", h_mono(*r, *s), true),
        (Product(pk, a, b), _) => {
            grids::build_product(*pk, a, b, g, kind)?.ok_or_else(|| unsupported(spec, kind))?
        }
        _ => return Err(unsupported(spec, kind)),
    })
}

fn consecutive_pairs(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .step_by(2)
        .map(|i| (i..(i + 2).min(n)).collect())
        .collect()
}

fn cycle_gp(n: usize) -> Vec<Vec<usize>> {
    match n {
        3 => vec![vec![0, 1, 2]],
        4 => vec![vec![0, 1], vec![2, 3]],
        5 => vec![vec![0, 2, 3], vec![1, 4]],
        // {0,2,4} has a gap of exactly n/2 here, so it is not in general position
        8 => vec![vec![0, 3, 5], vec![1, 4, 6], vec![2, 7]],
        _ => {
            let q = n / 3;
            let mut classes: Vec<Vec<usize>> = (0..q).map(|i| vec![i, q + i, 2 * q + i]).collect();
            if !n.is_multiple_of(3) {
                classes.push((3 * q..n).collect());
            }
            classes
        }
    }
}

fn kneser_gp(n: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); n - 3];
    for a in 1..=n {
        for b in a + 1..=n {
            classes[b.saturating_sub(4)].push(two_subset_index(n, a, b));
        }
    }
    classes
}

/// Edge classes of `L(K_n)` from a Kirkman system, after deleting points
/// and adding stars. Points are `1..=n`; deleted points are above `n`.
fn line_complete_gp(n: usize) -> Result<(Vec<Vec<usize>>, bool)> {
    if !(2..=18).contains(&n) {
        return Err(Error::Unsupported(format!(
            "line_complete construction is available for 2 <= n <= 18, not {n}"
        )));
    }
    let edge = |a: usize, b: usize| two_subset_index(n, a, b);
    // triangle edges of a KTS on `base` points, restricted to points <= keep
    let kts_classes = |base: usize, keep: usize| -> Result<Vec<Vec<usize>>> {
        let sys = kirkman_triple_system(base)?;
        Ok(sys
            .classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
                    .filter(|&(a, b)| a <= keep && b <= keep)
                    .map(|(a, b)| edge(a, b))
                    .collect()
            })
            .collect())
    };
    let star = |x: usize, to: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        to.map(|y| edge(x, y)).collect()
    };
    let mut classes = match n % 6 {
        3 => kts_classes(n, n)?,
        2 => kts_classes(n + 1, n)?,
        1 => kts_classes(n + 2, n)?,
        4 => {
            let mut c = kts_classes(n - 1, n)?;
            c.push(star(n, &mut (1..n)));
            c
        }
        5 => {
            let (x, y) = (n - 1, n);
            let mut c = kts_classes(n - 2, n)?;
            c.push(star(y, &mut (1..x)));
            c.push(star(x, &mut (1..=n).filter(|&p| p != x)));
            c
        }
        _ => {
            let (x, y, z) = (n - 2, n - 1, n);
            let mut c = kts_classes(n - 3, n)?;
            c[0].extend([edge(x, y), edge(x, z), edge(y, z)]);
            // the triangle already holds xy, xz and yz, so each star only
            // reaches the remaining n-3 points
            for p in [x, y, z] {
                c.push(star(p, &mut (1..x)));
            }
            c
        }
    };
    classes.retain(|c| !c.is_empty());
    // the (n/2+1)-colour recipe is optimal only for n = 6, 12
    let proven = n != 18;
    Ok((classes, proven))
}

fn balanced(a: usize, n: usize) -> Vec<usize> {
    (0..a).map(|i| n / a + usize::from(i < n % a)).collect()
}

fn part_ranges(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut next = 0;
    for &p in parts {
        out.push((next..next + p).collect());
        next += p;
    }
    out
}

/// `parts` descending. The `i-1` largest parts become independent classes
/// and the rest is covered by transversal cliques, for the best `i`.
fn multipartite_gp(parts: &[usize]) -> Vec<Vec<usize>> {
    let r = parts.len();
    let ranges = part_ranges(parts);
    let best = multipartite_formula(parts);
    if best == r {
        return ranges;
    }
    let i = (0..r)
        .find(|&i| parts[i] + i == best)
        .expect("formula attains its minimum");
    let mut classes: Vec<Vec<usize>> = ranges[..i].to_vec();
    for j in 0..parts[i] {
        classes.push(
            ranges[i..]
                .iter()
                .filter_map(|p| p.get(j).copied())
                .collect(),
        );
    }
    classes
}

fn h_gp(r: usize, s: usize) -> Vec<Vec<usize>> {
    let z = |j: usize| 2 * r + j;
    let mut classes = vec![
        (r..2 * r).chain([z(0)]).collect::<Vec<_>>(),
        (0..r).chain((s >= 1).then(|| z(1))).collect(),
    ];
    let rest: Vec<usize> = (2..=s).map(z).collect();
    classes.extend(rest.chunks(2).map(|c| c.to_vec()));
    classes
}

fn h_mono(r: usize, s: usize) -> Vec<Vec<usize>> {
    let (x, y, z) = (|i: usize| i - 1, |i: usize| r + i - 1, |j: usize| 2 * r + j);
    let t = r.min(s);
    let mut classes: Vec<Vec<usize>> = (1..=t).map(|i| vec![x(i), y(i), z(i)]).collect();
    classes.extend((t + 1..=r).map(|i| vec![x(i), y(i)]));
    let rest: Vec<usize> = std::iter::once(z(0)).chain((t + 1..=s).map(z)).collect();
    classes.extend(rest.chunks(2).map(|c| c.to_vec()));
    classes
}

fn peel(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !g.is_block_graph() {
        return Err(Error::Precondition("peeling needs a block graph".into()));
    }
    let mut remaining: Vec<usize> = (0..g.order()).collect();
    let mut classes = Vec::new();
    while !remaining.is_empty() {
        let h = g.induced_subgraph(&remaining);
        let ext: Vec<usize> = h
            .extreme_vertices()
            .into_iter()
            .map(|v| remaining[v])
            .collect();
        if ext.is_empty() {
            return Err(Error::Internal(
                "block graph without extreme vertices".into(),
            ));
        }
        remaining.retain(|v| !ext.contains(v));
        classes.push(ext);
    }
    Ok(classes)
}

/// Colour a block graph by repeatedly removing its extreme vertices.
pub fn colour_block_graph_peeling(g: &Graph) -> Result<CertifiedColouring> {
    let classes = peel(g)?;
    certify(
        g,
        &classes,
        PositionKind::Gp,
        "block graph peeling",
        Optimality::Exact,
    )
}

/// One class per clique of a minimum clique cover.
pub fn colour_by_clique_cover(g: &Graph, kind: PositionKind) -> Result<CertifiedColouring> {
    if kind.is_independent() && g.size() > 0 {
        return Err(Error::Precondition(format!(
            "cliques with edges are not {kind}-sets"
        )));
    }
    let (assign, _) = clique_cover(g, &Budget::default())?;
    let c = Colouring::new(assign)?;
    certify(
        g,
        &c.classes(),
        kind,
        "clique cover",
        Optimality::UpperBoundOnly,
    )
}

/// Open neighbourhoods of a minimum total dominating set, each vertex kept
/// in the first neighbourhood that contains it.
pub fn colour_by_total_domination(g: &Graph) -> Result<CertifiedColouring> {
    if !g.is_diamond_free() {
        return Err(Error::Precondition(
            "total domination colouring needs a diamond-free graph".into(),
        ));
    }
    let dom = minimum_total_dominating_set(g, &Budget::default())?;
    let mut taken = vec![false; g.order()];
    let mut classes = Vec::new();
    for &d in &dom {
        let class: Vec<usize> = g
            .neighbours(d)
            .iter()
            .copied()
            .filter(|&v| !std::mem::replace(&mut taken[v], true))
            .collect();
        if !class.is_empty() {
            classes.push(class);
        }
    }
    certify(
        g,
        &classes,
        PositionKind::Gp,
        "total domination neighbourhoods",
        Optimality::UpperBoundOnly,
    )
}

/// Splits `verts` into `kind`-sets by depth-first search, using at most
/// `target` classes in total. Classes in `start` may also receive vertices; `target` counts them.
pub(crate) fn pack(
    g: &Graph,
    kind: PositionKind,
    verts: &[usize],
    start: Vec<Vec<usize>>,
    target: usize,
    node_limit: u64,
) -> Result<Option<Vec<Vec<usize>>>> {
    fn rec(
        g: &Graph,
        kind: PositionKind,
        verts: &[usize],
        idx: usize,
        target: usize,
        classes: &mut Vec<Vec<usize>>,
        nodes: &mut u64,
    ) -> Result<bool> {
        if idx == verts.len() {
            return Ok(true);
        }
        if *nodes == 0 {
            return Ok(false);
        }
        *nodes -= 1;
        let v = verts[idx];
        for c in 0..classes.len() {
            classes[c].push(v);
            if is_position_set(g, &classes[c], kind)?
                && rec(g, kind, verts, idx + 1, target, classes, nodes)?
            {
                return Ok(true);
            }
            classes[c].pop();
        }
        if classes.len() < target {
            classes.push(vec![v]);
            if rec(g, kind, verts, idx + 1, target, classes, nodes)? {
                return Ok(true);
            }
            classes.pop();
        }
        Ok(false)
    }
    let mut classes = start;
    let mut nodes = node_limit;
    Ok(rec(g, kind, verts, 0, target, &mut classes, &mut nodes)?.then_some(classes))
}
