//! Closed-form values and structural characterisations of position
//! chromatic numbers, kept separate from the solver so the two can be
//! checked against each other.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, ProductKind};
use crate::position::PositionKind;

/// What is known about `χ_kind` of a family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PredictedValue {
    Exact { value: usize },
    Bounds { lower: usize, upper: usize },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub value: PredictedValue,
    pub source: String,
}

impl Prediction {
    fn exact(value: usize, source: &str) -> Prediction {
        Prediction {
            value: PredictedValue::Exact { value },
            source: source.into(),
        }
    }

    fn bounds(lower: usize, upper: usize, source: &str) -> Prediction {
        debug_assert!(lower <= upper);
        Prediction {
            value: PredictedValue::Bounds { lower, upper },
            source: source.into(),
        }
    }

    fn unknown(source: &str) -> Prediction {
        Prediction {
            value: PredictedValue::Unknown,
            source: source.into(),
        }
    }

    pub fn exact_value(&self) -> Option<usize> {
        match self.value {
            PredictedValue::Exact { value } => Some(value),
            _ => None,
        }
    }

    /// Whether `k` is consistent with the prediction (always true for
    /// `Unknown`).
    pub fn admits(&self, k: usize) -> bool {
        match self.value {
            PredictedValue::Exact { value } => value == k,
            PredictedValue::Bounds { lower, upper } => lower <= k && k <= upper,
            PredictedValue::Unknown => true,
        }
    }

    pub fn is_unknown(&self) -> bool {
        self.value == PredictedValue::Unknown
    }
}

/// `min{r, min_i (n_i + i - 1)}` over parts sorted in descending order:
/// the cochromatic number of a complete multipartite graph.
pub fn multipartite_formula(parts: &[usize]) -> usize {
    let mut p = parts.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    let r = p.len();
    p.iter()
        .enumerate()
        .map(|(i, &ni)| ni + i)
        .min()
        .map_or(0, |m| m.min(r))
}

/// Piecewise value for the line graph of `K_n`, `n >= 3`.
pub fn line_complete_formula(n: usize) -> usize {
    match n % 6 {
        _ if n == 6 || n == 12 => n / 2 + 1,
        1 | 5 => n.div_ceil(2),
        2 | 4 | 0 => n / 2,
        _ => (n - 1) / 2,
    }
}

/// `χ_gp(P_2 □ P_n)` for `n >= 3`.
pub fn ladder_formula(n: usize) -> usize {
    let r = n / 3;
    match n % 3 {
        0 => 2 * r,
        1 => 2 * r + 1,
        _ => 2 * r + 2,
    }
}

/// Central-layer counting bound for `P_3 □ P_n`: at most `⌊n/2⌋` classes
/// of four, the rest have at most three vertices.
pub fn p3_grid_lower_bound(n: usize) -> usize {
    let h = n / 2;
    h + (3 * n - 4 * h).div_ceil(3)
}

fn paths(spec: &FamilySpec) -> Option<usize> {
    match spec {
        FamilySpec::Path(n) => Some(*n),
        _ => None,
    }
}

fn cycles(spec: &FamilySpec) -> Option<usize> {
    match spec {
        FamilySpec::Cycle(n) => Some(*n),
        _ => None,
    }
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn block_graph_value(g: &Graph) -> usize {
    (g.diameter() as usize + 2) / 2
}

/// Closed-form prediction of `χ_kind` for a family instance. Falls back to
/// the clique and empty-graph characterisations, then to `Unknown`.
pub fn predicted_chi(spec: &FamilySpec, kind: PositionKind) -> Prediction {
    use FamilySpec::*;
    use PositionKind::*;
    let Ok(g) = spec.generate() else {
        return Prediction::unknown("parameters out of range");
    };
    let n = g.order();
    let specific = match (spec, kind) {
        (Path(n), Gp | Mono) if *n >= 2 => {
            Some(Prediction::exact(n.div_ceil(2), "path: ceil(n/2)"))
        }
        (Cycle(4), Gp) => Some(Prediction::exact(2, "C4 has gp-number two: ceil(n/2)")),
        (Cycle(n), Gp) if *n >= 5 => Some(Prediction::exact(n.div_ceil(3), "cycle: ceil(n/3)")),
        (Cycle(n), Mono) if *n >= 4 => Some(Prediction::exact(n.div_ceil(2), "cycle: ceil(n/2)")),
        (Multipartite(parts), Gp) => Some(Prediction::exact(
            multipartite_formula(parts),
            "multipartite: cochromatic number",
        )),
        (Turan { a, n }, Gp) => {
            let parts: Vec<usize> = (0..*a).map(|i| n / a + usize::from(i < n % a)).collect();
            Some(Prediction::exact(
                multipartite_formula(&parts),
                "multipartite: cochromatic number",
            ))
        }
        (Turan { a, .. }, GpI | MonoI) => Some(Prediction::exact(*a, "Turan graph: partite sets")),
        (Kneser2(m), Gp) => Some(Prediction::exact(m - 3, "Kneser K(n,2): n - 3")),
        (Kneser2(5) | Petersen, Mono) => Some(Prediction::exact(4, "Petersen graph")),
        (Kneser2(5) | Petersen, Mu) => Some(Prediction::exact(2, "Petersen graph")),
        (Kneser2(5) | Petersen, GpI) => {
            Some(Prediction::exact(3, "diameter two: chromatic number"))
        }
        (Petersen, Gp) => Some(Prediction::exact(2, "Petersen graph")),
        (LineComplete(m), Gp) if *m >= 3 => Some(Prediction::exact(
            line_complete_formula(*m),
            "line graph of K_n: triple systems",
        )),
        (TreeLeaves { a, .. }, Gp | Mono) => {
            Some(Prediction::exact(*a, "block graph: ceil((diam+1)/2)"))
        }
        (T { a, .. }, Gp | Mono) => Some(Prediction::exact(*a, "block graph: ceil((diam+1)/2)")),
        (S { r, .. }, Gp | Mono) => Some(Prediction::exact(
            (r + 3).div_ceil(2),
            "block graph: ceil((diam+1)/2)",
        )),
        (GStar { .. } | G { .. } | BlockRandom { .. }, Gp) => Some(Prediction::exact(
            block_graph_value(&g),
            "block graph: ceil((diam+1)/2)",
        )),
        (GStar { a, n }, GpI) if *a >= 2 || n == a => {
            Some(Prediction::exact(*a, "diameter two: chromatic number"))
        }
        (G { b, .. }, GpI | MonoI) => Some(Prediction::exact(*b, "clique with a pendant path")),
        (H { s, .. }, Gp) => Some(Prediction::exact(
            (s + 3).div_ceil(2),
            "H(r,s): ceil((s+3)/2)",
        )),
        (H { r, s }, Mono) => Some(if r <= s {
            Prediction::exact((r + s + 1).div_ceil(2), "H(r,s): ceil((r+s+1)/2)")
        } else {
            Prediction::exact(r + 1, "H(r,s): r + 1")
        }),
        (J { r, s }, Gp) => Some(Prediction::exact(r + s, "J(r,s): r + s")),
        (J { s, .. }, Mu) => Some(Prediction::exact(s + 1, "J(r,s): s + 1")),
        (CompleteMinusCliques { a, .. }, Gp) => Some(Prediction::exact(
            *a,
            "complete graph minus disjoint cliques",
        )),
        (CycleJoinClique { a, .. }, Mono) => {
            Some(Prediction::exact(*a, "odd cycle joined with a clique"))
        }
        (SplitRandom { .. }, Gp | Mono) if n >= 3 => {
            Some(Prediction::exact(2, "connected non-complete split graph"))
        }
        (ComplementaryPrism(base), Gp) => {
            let b = base.generate().ok();
            b.filter(|b| {
                b.order() >= 2
                    && b.is_split()
                    && b.is_connected()
                    && b.size() < b.order() * (b.order() - 1) / 2
            })
            .map(|_| {
                Prediction::exact(
                    2,
                    "complementary prism of a connected non-complete split graph",
                )
            })
        }
        (Product(pk, a, b), _) => product_prediction(*pk, a, b, kind),
        _ => None,
    };
    if let Some(p) = specific {
        return p;
    }
    if n == 0 {
        return Prediction::exact(0, "empty vertex set");
    }
    if kind.is_independent() {
        if g.size() == 0 {
            return Prediction::exact(1, "edgeless graph");
        }
        if g.is_clique(&(0..n).collect::<Vec<_>>()) {
            return Prediction::exact(n, "complete graph");
        }
    } else if g.is_disjoint_union_of_cliques() {
        return Prediction::exact(1, "disjoint union of cliques");
    }
    Prediction::unknown("no closed form")
}

fn product_prediction(
    pk: ProductKind,
    a: &FamilySpec,
    b: &FamilySpec,
    kind: PositionKind,
) -> Option<Prediction> {
    use PositionKind::*;
    match pk {
        ProductKind::Cartesian => {
            if let (Some(x), Some(y)) = (paths(a), paths(b)) {
                if kind != Gp {
                    return None;
                }
                let (m, n) = sorted_pair(x, y);
                return match (m, n) {
                    (1, _) => None,
                    (2, 2) => Some(Prediction::exact(2, "C4 has gp-number two: ceil(n/2)")),
                    (2, n) => Some(Prediction::exact(ladder_formula(n), "P2 x Pn: by n mod 3")),
                    (3, n) if n % 12 == 0 => Some(Prediction::exact(5 * n / 6, "P3 x Pn: 5n/6")),
                    (3, n) => {
                        let lo = p3_grid_lower_bound(n);
                        // product upper bound: copies of an optimal colouring of a factor
                        let hi = (3 * n.div_ceil(2)).min(2 * n);
                        Some(Prediction::bounds(
                            lo,
                            hi.max(lo),
                            "P3 x Pn: central layer count",
                        ))
                    }
                    (4, n) => Some(Prediction::exact(n + 1, "P4 x Pn: n + 1")),
                    (m, n) if m >= 16 => Some(Prediction::bounds(
                        (m * n).div_ceil(4),
                        (m + 2) * (n + 2) / 4 - 4,
                        "long grids: gp-number four and total domination",
                    )),
                    _ => None,
                };
            }
            if let (Some(x), Some(y)) = (cycles(a), cycles(b)) {
                let (t, s) = sorted_pair(x, y);
                if kind == Gp && s % 7 == 0 && t % 7 == 0 && t >= 49 {
                    return Some(Prediction::exact(s * t / 7, "torus C_7s x C_7t: 7st"));
                }
            }
            None
        }
        ProductKind::Strong => {
            let (x, y) = (paths(a)?, paths(b)?);
            let (m, n) = sorted_pair(x, y);
            if m < 2 {
                return None;
            }
            match kind {
                Mu if m == 2 && n >= 3 => Some(Prediction::exact(2, "strong grid, two rows")),
                Mu if m >= 3 => Some(Prediction::exact(m.div_ceil(2), "strong grid: diagonals")),
                Gp => Some(Prediction::bounds(
                    (m * n).div_ceil(4),
                    m.div_ceil(2) * n.div_ceil(2),
                    "strong grid: gp-number four and clique cover",
                )),
                _ => None,
            }
        }
    }
}

/// Whether `g` has `χ_gp(g) = 2`, decided from the structural
/// characterisation: a split of `V` into two sides, each inducing a
/// disjoint union of cliques, with `diam* <= 3`, such that whenever `w` has
/// neighbours `u`, `v` in distinct cliques `A_x`, `A_y` of the other side,
/// `d(u, v') = d(u', v) = 2` for all `u' ∈ A_x`, `v' ∈ A_y`. Graphs that are
/// themselves disjoint unions of cliques have value one and are rejected.
/// The split is found by exhaustive search, pruned on the clique-union
/// condition.
pub fn chi_gp_two_characterization(g: &Graph, budget: &Budget) -> Result<bool> {
    let n = g.order();
    if n < 2 || g.is_disjoint_union_of_cliques() || g.diameter() > 3 {
        return Ok(false);
    }
    let mut meter = budget.meter("chi_gp_two_characterization");
    let mut side = vec![u8::MAX; n];
    split_search(g, &mut side, 0, &mut meter)
}

fn split_search(g: &Graph, side: &mut [u8], v: usize, meter: &mut Meter) -> Result<bool> {
    meter.tick()?;
    if v == g.order() {
        return Ok(distance_condition(g, side));
    }
    // vertex 0 stays on side 0: splits are unordered
    let sides: &[u8] = if v == 0 { &[0] } else { &[0, 1] };
    for &s in sides {
        if consistent(g, side, v, s) {
            side[v] = s;
            if split_search(g, side, v + 1, meter)? {
                return Ok(true);
            }
            side[v] = u8::MAX;
        }
    }
    Ok(false)
}

/// Placing `v` on side `s` keeps that side free of induced `P_3`.
fn consistent(g: &Graph, side: &[u8], v: usize, s: u8) -> bool {
    let same: Vec<usize> = (0..v).filter(|&u| side[u] == s).collect();
    for (i, &a) in same.iter().enumerate() {
        for &b in &same[i + 1..] {
            let (va, vb, ab) = (g.adjacent(v, a), g.adjacent(v, b), g.adjacent(a, b));
            if usize::from(va) + usize::from(vb) + usize::from(ab) == 2 {
                return false;
            }
        }
    }
    true
}

fn distance_condition(g: &Graph, side: &[u8]) -> bool {
    let n = g.order();
    // clique id within each side: smallest member of the component
    let clique_of: Vec<usize> = (0..n)
        .map(|v| {
            (0..n)
                .find(|&u| u == v || (side[u] == side[v] && g.adjacent(u, v)))
                .unwrap()
        })
        .collect();
    let clique_of = &clique_of;
    let members = |c: usize| (0..n).filter(move |&u| clique_of[u] == c);
    for w in 0..n {
        let nb = g.neighbours(w);
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                if side[u] == side[w] || side[v] == side[w] || clique_of[u] == clique_of[v] {
                    continue;
                }
                if side[u] != side[v] {
                    continue;
                }
                let ok = members(clique_of[u]).all(|u2| g.dist(u2, v) == Some(2))
                    && members(clique_of[v]).all(|v2| g.dist(u, v2) == Some(2));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// The graphs of a given order whose position chromatic number is close to
/// the order, one per isomorphism class.
#[derive(Debug, Clone)]
pub struct LargeValueCatalogue {
    pub n: usize,
    /// `χ_gp = n - 1` (also `χ_mono = n - 1`).
    pub gp_n_minus_1: Vec<Graph>,
    /// `χ_gp = n - 2`.
    pub gp_n_minus_2: Vec<Graph>,
    /// `χ_mono = n - 2`.
    pub mono_n_minus_2: Vec<Graph>,
    /// `χ_gp_i = n - 1` as stated: connected graphs with clique number
    /// `n - 1`.
    pub gpi_n_minus_1: Vec<Graph>,
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("in range")
}

/// Catalogue of graphs of order `n <= 6` with `χ = n - 1` or `n - 2`.
pub fn large_value_characterization(n: usize) -> Result<LargeValueCatalogue> {
    if n > 6 {
        return Err(Error::ParameterOutOfRange(format!(
            "large value catalogues are listed for n <= 6, got {n}"
        )));
    }
    let p = |k: usize| g(k, &(1..k).map(|i| (i - 1, i)).collect::<Vec<_>>());
    let gp1 = match n {
        2 => vec![p(2), Graph::empty(2)],
        3 => vec![p(3)],
        _ => vec![],
    };
    let gp2 = match n {
        3 => vec![Graph::complete(3), Graph::empty(3), g(3, &[(0, 1)])],
        4 => vec![
            p(4),
            g(4, &[(0, 1), (0, 2), (0, 3)]),
            g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
            g(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]),
            g(4, &[(0, 1), (1, 2)]),
        ],
        5 => vec![p(5)],
        _ => vec![],
    };
    let mut mono2 = gp2.clone();
    if n == 5 {
        mono2.push(g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]));
    }
    // K_{n-1} plus a vertex of degree d, 1 <= d <= n-2
    let gpi1 = (1..n.saturating_sub(1))
        .map(|d| {
            let mut e = Graph::complete(n - 1).edges();
            e.extend((0..d).map(|u| (u, n - 1)));
            g(n, &e)
        })
        .collect();
    Ok(LargeValueCatalogue {
        n,
        gp_n_minus_1: gp1,
        gp_n_minus_2: gp2,
        mono_n_minus_2: mono2,
        gpi_n_minus_1: gpi1,
    })
}

#[cfg(test)]
mod tests;
