use serde::{Deserialize, Serialize};

use super::{chromatic_number, clique_cover_number, total_domination_number};
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{monophonic_diameter, Graph};
use crate::position::{position_number_with, PositionKind};

/// One applicable bound with a short description of where it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTerm {
    pub value: usize,
    pub reason: String,
}

/// Best lower and upper bound on a position chromatic number, with every
/// applicable term kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundPair {
    pub lower: usize,
    pub upper: usize,
    pub lower_reason: String,
    pub upper_reason: String,
    pub lower_terms: Vec<BoundTerm>,
    pub upper_terms: Vec<BoundTerm>,
}

fn term(value: usize, reason: &str) -> BoundTerm {
    BoundTerm {
        value,
        reason: reason.to_string(),
    }
}

/// Lower and upper bounds on `χ_kind(g)` from the elementary results: order
/// over position number, diameter, chromatic number for independent kinds;
/// singletons or pairs around a maximum set, clique cover, total domination
/// for diamond-free graphs, and geodesic pairing for independent kinds.
pub fn bounds(g: &Graph, kind: PositionKind, budget: &Budget) -> Result<BoundPair> {
    let n = g.order();
    let pi = position_number_with(g, kind, budget)?.value;
    let mut lower = vec![term(n.min(1), "nonempty graph needs a class")];
    let mut upper = vec![term(n, "one class per vertex")];
    if n > 0 {
        lower.push(term(n.div_ceil(pi), "ceil(n / position number)"));
        upper.push(term(n - pi + 1, "maximum set plus singletons"));
    }
    let diam = g.diameter() as usize;
    let base = kind.base();
    match base {
        PositionKind::Gp => lower.push(term((diam + 2) / 2, "ceil((diam* + 1) / 2)")),
        PositionKind::Mono => {
            let dm = monophonic_diameter(g, budget)? as usize;
            lower.push(term((dm + 2) / 2, "ceil((monophonic diameter + 1) / 2)"));
        }
        _ => {}
    }
    if kind.is_independent() {
        lower.push(term(chromatic_number(g, budget)?, "chromatic number"));
        if matches!(base, PositionKind::Gp | PositionKind::Mono) && diam >= 2 {
            upper.push(term(n - diam.div_ceil(2), "n - floor((diam + 1) / 2)"));
        }
    } else if n > 0 {
        upper.push(term((n - pi + 2).div_ceil(2), "maximum set plus pairs"));
        upper.push(term(clique_cover_number(g, budget)?, "clique cover number"));
        let no_isolated = (0..n).all(|v| g.degree(v) > 0);
        if base == PositionKind::Gp && no_isolated && g.is_diamond_free() {
            upper.push(term(
                total_domination_number(g, budget)?,
                "total domination number",
            ));
        }
    }
    let lo = lower.iter().max_by_key(|t| t.value).unwrap().clone();
    let hi = upper.iter().min_by_key(|t| t.value).unwrap().clone();
    Ok(BoundPair {
        lower: lo.value,
        upper: hi.value,
        lower_reason: lo.reason,
        upper_reason: hi.reason,
        lower_terms: lower,
        upper_terms: upper,
    })
}
