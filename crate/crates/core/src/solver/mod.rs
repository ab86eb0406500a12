//! Exact position chromatic numbers with certified colourings.

mod bounds;
pub(crate) mod engine;
mod inequalities;
mod params;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::position::{is_position_set_with, ConflictModel, PositionKind};

pub use bounds::{bounds, BoundPair, BoundTerm};
pub use inequalities::{check_inequality_suite, InequalityCheck, InequalityReport};
pub use params::{
    chromatic_colouring, chromatic_number, clique_cover, clique_cover_number, clique_number,
    cochromatic_number, greedy_chromatic_bound, maximum_clique, maximum_independent_set,
    minimum_total_dominating_set, total_domination_number,
};

/// Assignment of vertices to classes `0..k`, every class nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    assignment: Vec<usize>,
    k: usize,
}

/// Relabels class ids in order of first appearance.
pub(crate) fn canonical_classes(assign: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    assign
        .iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

impl Colouring {
    /// Checks that the class ids are exactly `0..k` for some `k`.
    pub fn new(assignment: Vec<usize>) -> Result<Colouring> {
        let k = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &assignment {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::MalformedColouring(format!("class {c} is empty")));
        }
        Ok(Colouring { assignment, k })
    }

    /// Builds a colouring of `0..n` from explicit classes.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Colouring> {
        let mut assignment = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::MalformedColouring(format!("class {c} is empty")));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::MalformedColouring(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if assignment[v] != usize::MAX {
                    return Err(Error::MalformedColouring(format!(
                        "vertex {v} appears twice"
                    )));
                }
                assignment[v] = c;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(Error::MalformedColouring(format!(
                "vertex {v} has no class"
            )));
        }
        Ok(Colouring {
            assignment,
            k: classes.len(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    pub fn colour_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Classes as sorted vertex lists, indexed by class id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Same partition with classes numbered by their smallest vertex.
    pub fn canonical(&self) -> Colouring {
        Colouring {
            assignment: canonical_classes(&self.assignment),
            k: self.k,
        }
    }

    /// The colouring of the relabelled graph (`v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Colouring {
        let mut assignment = vec![0; self.assignment.len()];
        for (v, &c) in self.assignment.iter().enumerate() {
            assignment[perm[v]] = c;
        }
        Colouring {
            assignment,
            k: self.k,
        }
    }

    /// JSON form `{"n":..,"kind":..,"k":..,"classes":[[..],..]}`.
    pub fn to_json(&self, kind: PositionKind) -> String {
        serde_json::to_string(&ColouringJson {
            n: self.order(),
            kind: Some(kind),
            k: Some(self.k),
            classes: self.classes(),
        })
        .expect("plain data serialises")
    }

    /// Parses the JSON form; `kind` and `k` are optional on input.
    pub fn from_json(text: &str) -> Result<(Colouring, Option<PositionKind>)> {
        let raw: ColouringJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let c = Colouring::from_classes(raw.n, &raw.classes)?;
        if let Some(k) = raw.k {
            if k != c.k {
                return Err(Error::MalformedColouring(format!(
                    "declared k = {k} but {} classes given",
                    c.k
                )));
            }
        }
        Ok((c, raw.kind))
    }
}

#[derive(Serialize, Deserialize)]
struct ColouringJson {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<PositionKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    classes: Vec<Vec<usize>>,
}

/// Whether a colouring is known to be optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimality {
    Exact,
    UpperBoundOnly,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::Exact => "exact",
            Optimality::UpperBoundOnly => "upper_bound_only",
        })
    }
}

/// A colouring that has been checked against its kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedColouring {
    pub colouring: Colouring,
    pub kind: PositionKind,
    pub verified: bool,
    pub provenance: String,
    pub optimality: Optimality,
}

impl CertifiedColouring {
    /// Verifies `colouring` and wraps it; a failed check is an internal
    /// error because callers only certify colourings they built.
    pub fn certify(
        g: &Graph,
        colouring: Colouring,
        kind: PositionKind,
        provenance: impl Into<String>,
        optimality: Optimality,
    ) -> Result<CertifiedColouring> {
        let provenance = provenance.into();
        if !verify_colouring(g, &colouring, kind)? {
            return Err(Error::Internal(format!(
                "{provenance}: produced a colouring that is not a {kind}-colouring"
            )));
        }
        Ok(CertifiedColouring {
            colouring,
            kind,
            verified: true,
            provenance,
            optimality,
        })
    }

    pub fn k(&self) -> usize {
        self.colouring.k()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            n: usize,
            kind: PositionKind,
            k: usize,
            classes: Vec<Vec<usize>>,
            verified: bool,
            provenance: &'a str,
            optimality: Optimality,
        }
        serde_json::to_string(&Out {
            n: self.colouring.order(),
            kind: self.kind,
            k: self.k(),
            classes: self.colouring.classes(),
            verified: self.verified,
            provenance: &self.provenance,
            optimality: self.optimality,
        })
        .expect("plain data serialises")
    }
}

/// True iff every class of `c` is a `kind`-position set of `g`.
pub fn verify_colouring(g: &Graph, c: &Colouring, kind: PositionKind) -> Result<bool> {
    verify_colouring_with(g, c, kind, &Budget::default())
}

pub fn verify_colouring_with(
    g: &Graph,
    c: &Colouring,
    kind: PositionKind,
    budget: &Budget,
) -> Result<bool> {
    if c.order() != g.order() {
        return Err(Error::MalformedColouring(format!(
            "colouring covers {} vertices but the graph has {}",
            c.order(),
            g.order()
        )));
    }
    let classes = c.classes();
    if kind.base() == PositionKind::Mono {
        let model = ConflictModel::position(g, kind, budget)?;
        return Ok(classes.iter().all(|class| model.is_valid(class)));
    }
    // gp and mu are checked class by class, which avoids the cubic triple
    // table on large graphs
    for class in &classes {
        if !is_position_set_with(g, class, kind, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest admissible-set size through each vertex, plus a maximum set.
/// Falls back to weaker values when the searches run out of budget.
fn capacities(model: &ConflictModel, budget: &Budget) -> (Vec<usize>, Option<Vec<usize>>) {
    let n = model.order();
    let limited = |nodes: u64| Budget {
        node_limit: Some(budget.node_limit.map_or(nodes, |l| l.min(nodes))),
        time_limit: budget.time_limit,
    };
    let Ok(best) = model.max_set(None, &limited(2_000_000)) else {
        return (vec![n; n], None);
    };
    let top = best.len();
    let caps = (0..n)
        .map(|v| {
            if best.contains(&v) {
                top
            } else {
                model
                    .max_set(Some(v), &limited(200_000))
                    .map_or(top, |s| s.len())
            }
        })
        .collect();
    (caps, Some(best))
}

/// Fewest admissible classes covering the model's vertices. Returns an
/// upper-bound-only answer when the budget runs out.
pub(crate) fn minimum_partition(
    model: &ConflictModel,
    lower: usize,
    seeds: &[Vec<Vec<usize>>],
    budget: &Budget,
) -> Result<(Vec<usize>, Optimality)> {
    let n = model.order();
    if n == 0 {
        return Ok((Vec::new(), Optimality::Exact));
    }
    let (cap, witness) = capacities(model, budget);
    let weight: f64 = cap.iter().map(|&c| 1.0 / c as f64).sum();
    let lower = lower.max((weight - 1e-9).ceil() as usize).max(1);

    let count = |a: &[usize]| a.iter().max().map_or(0, |&c| c + 1);
    let mut incumbent = engine::greedy_saturation(model);
    let order = model.graph().degree_order();
    let mut tries: Vec<Vec<Vec<usize>>> = seeds.to_vec();
    if let Some(w) = witness {
        tries.push(vec![w]);
    }
    for seed in &tries {
        let a = engine::greedy(model, &order, seed);
        if count(&a) < count(&incumbent) {
            incumbent = a;
        }
    }
    let mut meter = budget.meter("partition search");
    for k in lower..count(&incumbent) {
        match engine::colour_with(model, &cap, k, &mut meter) {
            Ok(Some(a)) => return Ok((canonical_classes(&a), Optimality::Exact)),
            Ok(None) => continue,
            Err(Error::BudgetExceeded(_)) => {
                return Ok((canonical_classes(&incumbent), Optimality::UpperBoundOnly))
            }
            Err(e) => return Err(e),
        }
    }
    Ok((canonical_classes(&incumbent), Optimality::Exact))
}

/// Cheap lower bound for one connected piece, used to start the search.
fn component_lower_bound(h: &Graph, kind: PositionKind, budget: &Budget) -> usize {
    let mut lower = 1;
    match kind.base() {
        PositionKind::Gp => lower = lower.max((h.diameter() as usize + 2) / 2),
        PositionKind::Mono => {
            let limited = Budget {
                node_limit: Some(1_000_000),
                time_limit: budget.time_limit,
            };
            if let Ok(d) = crate::graph::monophonic_diameter(h, &limited) {
                lower = lower.max((d as usize + 2) / 2);
            }
        }
        _ => {}
    }
    if kind.is_independent() {
        if let Ok(w) = clique_number(h, budget) {
            lower = lower.max(w);
        }
    }
    lower
}

/// Exact `χ_kind(g)` with an optimal colouring, solved component by
/// component; classes of different components are merged by index.
pub fn chromatic_position_number(
    g: &Graph,
    kind: PositionKind,
    budget: &Budget,
) -> Result<CertifiedColouring> {
    let mut assign = vec![0; g.order()];
    let mut optimality = Optimality::Exact;
    for comp in g.components().members() {
        let h = g.induced_subgraph(&comp);
        let model = ConflictModel::position(&h, kind, budget)?;
        let lower = component_lower_bound(&h, kind, budget);
        let (a, opt) = minimum_partition(&model, lower, &[], budget)?;
        if opt == Optimality::UpperBoundOnly {
            optimality = opt;
        }
        for (i, &v) in comp.iter().enumerate() {
            assign[v] = a[i];
        }
    }
    let colouring = Colouring::new(canonical_classes(&assign))?;
    CertifiedColouring::certify(g, colouring, kind, "solver", optimality)
}

/// A `kind`-colouring with at most `k` classes, or `None` if none exists.
pub fn find_colouring(
    g: &Graph,
    kind: PositionKind,
    k: usize,
    budget: &Budget,
) -> Result<Option<Colouring>> {
    let mut assign = vec![0; g.order()];
    for comp in g.components().members() {
        let h = g.induced_subgraph(&comp);
        let model = ConflictModel::position(&h, kind, budget)?;
        let (cap, _) = capacities(&model, budget);
        let mut meter = budget.meter("partition search");
        match engine::colour_with(&model, &cap, k, &mut meter)? {
            Some(a) => {
                for (i, &v) in comp.iter().enumerate() {
                    assign[v] = a[i];
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(Colouring::new(canonical_classes(&assign))?))
}
