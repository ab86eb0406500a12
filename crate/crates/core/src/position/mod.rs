//! Membership, maximality and maximum size for the six position properties.

mod model;

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use model::{ConflictModel, SetSearch};

/// The six set properties a colour class may be required to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PositionKind {
    #[serde(rename = "gp")]
    Gp,
    #[serde(rename = "mono")]
    Mono,
    #[serde(rename = "mu")]
    Mu,
    #[serde(rename = "gp_i")]
    GpI,
    #[serde(rename = "mono_i")]
    MonoI,
    #[serde(rename = "mu_i")]
    MuI,
}

impl PositionKind {
    pub const ALL: [PositionKind; 6] = [
        PositionKind::Gp,
        PositionKind::Mono,
        PositionKind::Mu,
        PositionKind::GpI,
        PositionKind::MonoI,
        PositionKind::MuI,
    ];

    /// The property without the independence requirement.
    pub fn base(self) -> PositionKind {
        match self {
            PositionKind::GpI => PositionKind::Gp,
            PositionKind::MonoI => PositionKind::Mono,
            PositionKind::MuI => PositionKind::Mu,
            k => k,
        }
    }

    pub fn is_independent(self) -> bool {
        self.base() != self
    }

    pub fn independent(self) -> PositionKind {
        match self.base() {
            PositionKind::Gp => PositionKind::GpI,
            PositionKind::Mono => PositionKind::MonoI,
            _ => PositionKind::MuI,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PositionKind::Gp => "gp",
            PositionKind::Mono => "mono",
            PositionKind::Mu => "mu",
            PositionKind::GpI => "gp_i",
            PositionKind::MonoI => "mono_i",
            PositionKind::MuI => "mu_i",
        }
    }
}

impl fmt::Display for PositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PositionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "gp" => PositionKind::Gp,
            "mono" | "mp" => PositionKind::Mono,
            "mu" => PositionKind::Mu,
            "gp_i" | "gpi" => PositionKind::GpI,
            "mono_i" | "monoi" | "mpi" | "mp_i" => PositionKind::MonoI,
            "mu_i" | "mui" => PositionKind::MuI,
            _ => return Err(Error::Parse(format!("unknown position kind {s:?}"))),
        })
    }
}

/// A maximum position set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionWitness {
    pub value: usize,
    pub witness: Vec<usize>,
    pub kind: PositionKind,
}

fn check_set(g: &Graph, s: &[usize]) -> Result<()> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok(())
}

fn dedup_sorted(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Decides whether `s` is a `kind`-position set of `g`.
pub fn is_position_set(g: &Graph, s: &[usize], kind: PositionKind) -> Result<bool> {
    is_position_set_with(g, s, kind, &Budget::default())
}

pub fn is_position_set_with(
    g: &Graph,
    s: &[usize],
    kind: PositionKind,
    budget: &Budget,
) -> Result<bool> {
    check_set(g, s)?;
    let s = dedup_sorted(s);
    if kind.is_independent() && !g.is_independent(&s) {
        return Ok(false);
    }
    Ok(match kind.base() {
        PositionKind::Gp => is_gp_set(g, &s),
        PositionKind::Mu => is_mu_set(g, &s),
        _ => {
            let model = ConflictModel::position(g, kind, budget)?;
            model.is_valid(&s)
        }
    })
}

fn is_gp_set(g: &Graph, s: &[usize]) -> bool {
    let d = g.distances();
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if s.iter().any(|&w| w != u && w != v && d.between(u, w, v)) {
                return false;
            }
        }
    }
    true
}

fn is_mu_set(g: &Graph, s: &[usize]) -> bool {
    let mut blocked = FixedBitSet::with_capacity(g.order());
    for &v in s {
        blocked.insert(v);
    }
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if g.dist(u, v).is_none() {
                continue;
            }
            blocked.set(u, false);
            blocked.set(v, false);
            let ok = geodesic_avoids(g, u, v, &blocked);
            blocked.insert(u);
            blocked.insert(v);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Reachability from `u` to `v` inside the geodesic interval, stepping only
/// along distance-increasing edges and never entering `blocked`.
pub(crate) fn geodesic_avoids(g: &Graph, u: usize, v: usize, blocked: &FixedBitSet) -> bool {
    let d = g.distances();
    let Some(duv) = d.get(u, v) else {
        return false;
    };
    if duv <= 1 {
        return true;
    }
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut stack = vec![u];
    seen.insert(u);
    while let Some(x) = stack.pop() {
        let dx = d.get(u, x).unwrap();
        for &y in g.neighbours(x) {
            if y == v {
                if dx + 1 == duv {
                    return true;
                }
                continue;
            }
            if seen.contains(y) || blocked.contains(y) {
                continue;
            }
            if d.get(u, y) == Some(dx + 1) && d.get(y, v) == Some(duv - dx - 1) {
                seen.insert(y);
                stack.push(y);
            }
        }
    }
    false
}

/// True when some shortest `u`–`v` path has no interior vertex in `blocked`.
pub fn geodesic_avoiding(g: &Graph, u: usize, v: usize, blocked: &[usize]) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    check_set(g, blocked)?;
    if g.dist(u, v).is_none() {
        return Err(Error::Precondition(format!(
            "vertices {u} and {v} lie in different components"
        )));
    }
    if blocked.contains(&u) || blocked.contains(&v) {
        return Err(Error::Precondition("endpoints must not be blocked".into()));
    }
    let mut b = FixedBitSet::with_capacity(g.order());
    for &x in blocked {
        b.insert(x);
    }
    Ok(geodesic_avoids(g, u, v, &b))
}

/// Exact position number with a maximum witness.
pub fn position_number(g: &Graph, kind: PositionKind) -> Result<PositionWitness> {
    position_number_with(g, kind, &Budget::default())
}

pub fn position_number_with(
    g: &Graph,
    kind: PositionKind,
    budget: &Budget,
) -> Result<PositionWitness> {
    let model = ConflictModel::position(g, kind, budget)?;
    let witness = model.max_set(None, budget)?;
    Ok(PositionWitness {
        value: witness.len(),
        witness,
        kind,
    })
}

/// Largest position set containing `v`. On a vertex-transitive graph this
/// equals the position number and the search is much smaller.
pub fn max_position_set_through(
    g: &Graph,
    kind: PositionKind,
    v: usize,
    budget: &Budget,
) -> Result<PositionWitness> {
    check_set(g, &[v])?;
    let model = ConflictModel::position(g, kind, budget)?;
    let witness = model.max_set(Some(v), budget)?;
    Ok(PositionWitness {
        value: witness.len(),
        witness,
        kind,
    })
}

/// True when `s` is a position set and no vertex can be added to it.
pub fn is_maximal_position_set(g: &Graph, s: &[usize], kind: PositionKind) -> Result<bool> {
    check_set(g, s)?;
    let model = ConflictModel::position(g, kind, &Budget::default())?;
    let s = dedup_sorted(s);
    if !model.is_valid(&s) {
        return Err(Error::Precondition("set is not a position set".into()));
    }
    Ok(model.is_maximal(&s))
}

/// Every `kind`-position set of exactly `size` vertices, as sorted lists.
pub fn position_sets_of_size(
    g: &Graph,
    kind: PositionKind,
    size: usize,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let model = ConflictModel::position(g, kind, budget)?;
    let mut out = Vec::new();
    model.for_each_set(SetSearch::ExactSize(size), budget, &mut |s| {
        out.push(s.to_vec())
    })?;
    Ok(out)
}

/// Every maximal `kind`-position set.
pub fn maximal_position_sets(
    g: &Graph,
    kind: PositionKind,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let model = ConflictModel::position(g, kind, budget)?;
    let mut out = Vec::new();
    model.for_each_set(SetSearch::Maximal, budget, &mut |s| out.push(s.to_vec()))?;
    Ok(out)
}

#[cfg(test)]
mod tests;
