//! Classical parameters used by the comparison results: chromatic number,
//! clique number, clique cover number, cochromatic number and total
//! domination number.

use fixedbitset::FixedBitSet;

use super::engine;
use super::{minimum_partition, Optimality};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::position::ConflictModel;

fn exact_or_budget(k: usize, optimality: Optimality, what: &str) -> Result<usize> {
    match optimality {
        Optimality::Exact => Ok(k),
        Optimality::UpperBoundOnly => Err(Error::BudgetExceeded(format!(
            "{what}: search stopped with only an upper bound of {k}"
        ))),
    }
}

/// A maximum clique.
pub fn maximum_clique(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    ConflictModel::cliques(g).max_set(None, budget)
}

pub fn clique_number(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(maximum_clique(g, budget)?.len())
}

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    ConflictModel::independent_sets(g).max_set(None, budget)
}

/// Proper colouring with the fewest colours, solved per component.
pub fn chromatic_colouring(g: &Graph, budget: &Budget) -> Result<(Vec<usize>, Optimality)> {
    let mut assign = vec![0; g.order()];
    let mut optimality = Optimality::Exact;
    for comp in g.components().members() {
        let h = g.induced_subgraph(&comp);
        let model = ConflictModel::independent_sets(&h);
        let omega = clique_number(&h, budget)?;
        let (a, opt) = minimum_partition(&model, omega, &[], budget)?;
        if opt == Optimality::UpperBoundOnly {
            optimality = opt;
        }
        for (i, &v) in comp.iter().enumerate() {
            assign[v] = a[i];
        }
    }
    Ok((assign, optimality))
}

pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let (a, opt) = chromatic_colouring(g, budget)?;
    exact_or_budget(class_count(&a), opt, "chromatic number")
}

/// Partition into the fewest cliques: a proper colouring of the complement.
pub fn clique_cover(g: &Graph, budget: &Budget) -> Result<(Vec<usize>, Optimality)> {
    chromatic_colouring(&g.complement(), budget)
}

pub fn clique_cover_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let (a, opt) = clique_cover(g, budget)?;
    exact_or_budget(class_count(&a), opt, "clique cover number")
}

/// Fewest classes each inducing a clique or an independent set.
pub fn cochromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    let model = ConflictModel::homogeneous_sets(g);
    let (a, opt) = minimum_partition(&model, 1, &[], budget)?;
    exact_or_budget(class_count(&a), opt, "cochromatic number")
}

fn class_count(a: &[usize]) -> usize {
    a.iter().map(|&c| c + 1).max().unwrap_or(0)
}

/// A minimum total dominating set: every vertex has a neighbour in it.
pub fn minimum_total_dominating_set(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!(
            "vertex {v} is isolated, so no total dominating set exists"
        )));
    }
    let mut meter = budget.meter("total domination search");
    let mut out = Vec::new();
    for comp in g.components().members() {
        let h = g.induced_subgraph(&comp);
        let n = h.order();
        let max_deg = (0..n).map(|v| h.degree(v)).max().unwrap_or(1);
        // greedy incumbent
        let mut uncovered = FixedBitSet::with_capacity(n);
        uncovered.insert_range(..);
        let mut best: Vec<usize> = Vec::new();
        while uncovered.count_ones(..) > 0 {
            let v = (0..n)
                .max_by_key(|&v| {
                    (
                        h.neighbour_set(v).intersection(&uncovered).count(),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            best.push(v);
            uncovered.difference_with(h.neighbour_set(v));
        }
        uncovered.insert_range(..);
        let mut chosen = Vec::new();
        cover_rec(
            &h,
            max_deg,
            &mut uncovered,
            &mut chosen,
            &mut best,
            &mut meter,
        )?;
        out.extend(best.into_iter().map(|v| comp[v]));
    }
    out.sort_unstable();
    Ok(out)
}

fn cover_rec(
    h: &Graph,
    max_deg: usize,
    uncovered: &mut FixedBitSet,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    meter: &mut crate::budget::Meter,
) -> Result<()> {
    meter.tick()?;
    let left = uncovered.count_ones(..);
    if left == 0 {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return Ok(());
    }
    if chosen.len() + left.div_ceil(max_deg) >= best.len() {
        return Ok(());
    }
    // the uncovered vertex with the fewest possible dominators
    let u = uncovered.ones().min_by_key(|&u| (h.degree(u), u)).unwrap();
    for &w in h.neighbours(u) {
        let saved = uncovered.clone();
        uncovered.difference_with(h.neighbour_set(w));
        chosen.push(w);
        cover_rec(h, max_deg, uncovered, chosen, best, meter)?;
        chosen.pop();
        *uncovered = saved;
    }
    Ok(())
}

pub fn total_domination_number(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(minimum_total_dominating_set(g, budget)?.len())
}

/// Greedy proper colouring, used by callers that only need an upper bound.
pub fn greedy_chromatic_bound(g: &Graph) -> usize {
    class_count(&engine::greedy_saturation(
        &ConflictModel::independent_sets(g),
    ))
}
