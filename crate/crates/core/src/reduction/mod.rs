//! NAE3-SAT instances, their gp-colouring reduction graphs, and certificate
//! translation in both directions.
//!
//! The CNF text format is DIMACS-like:
//!
//! ```text
//! c comment
//! p nae3 4 3
//! 1 3 4
//! 2 -3 -4
//! -1 -2 3
//! ```
//!
//! Each clause line holds three nonzero literals; a trailing `0` is allowed.


use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::position::PositionKind;
use crate::solver::{find_colouring, verify_colouring, Colouring};

/// Variable `var` (0-based) in positive or negated form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Literal {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Literal {
        Literal {
            positive: !self.positive,
            ..self
        }
    }

    pub fn value(self, a: &[bool]) -> bool {
        a[self.var] == self.positive
    }

    /// DIMACS integer: `var + 1`, negative when negated.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

pub type Clause = [Literal; 3];

/// A truth value per variable.
pub type Assignment = Vec<bool>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaeInstance {
    pub p: usize,
    pub clauses: Vec<Clause>,
}

/// Outcome of normalisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Instance(NaeInstance),
    /// Some clause repeats one literal three times.
    TriviallyNo,
}

impl NaeInstance {
    pub fn new(p: usize, clauses: Vec<Clause>) -> Result<NaeInstance> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= p) {
                return Err(Error::Parse(format!(
                    "clause {} uses variable {} but p = {p}",
                    j + 1,
                    l.var + 1
                )));
            }
        }
        Ok(NaeInstance { p, clauses })
    }

    pub fn q(&self) -> usize {
        self.clauses.len()
    }

    /// At least three clauses, each on three distinct variables.
    pub fn is_normalized(&self) -> bool {
        self.q() >= 3
            && self
                .clauses
                .iter()
                .all(|c| c[0].var != c[1].var && c[0].var != c[2].var && c[1].var != c[2].var)
    }

    /// No clause has all three literals equal in value.
    pub fn satisfied_by(&self, a: &[bool]) -> bool {
        a.len() == self.p
            && self.clauses.iter().all(|c| {
                let v = c.map(|l| l.value(a));
                !(v[0] == v[1] && v[1] == v[2])
            })
    }

    /// Drops clauses with both polarities of a variable, expands clauses
    /// `{l1, l1, l2}` with a fresh variable, and pads with clauses on fresh
    /// variables until there are three. All steps preserve satisfiability.
    pub fn normalize(&self) -> Normalized {
        let mut p = self.p;
        let mut out = Vec::new();
        for c in &self.clauses {
            let both = (0..3).any(|i| (0..3).any(|j| c[i] == c[j].negated()));
            if both {
                continue;
            }
            if c[0] == c[1] && c[1] == c[2] {
                return Normalized::TriviallyNo;
            }
            let repeated = if c[0] == c[1] {
                Some((c[0], c[2]))
            } else if c[0] == c[2] {
                Some((c[0], c[1]))
            } else if c[1] == c[2] {
                Some((c[1], c[0]))
            } else {
                None
            };
            match repeated {
                Some((l1, l2)) => {
                    let a = p;
                    p += 1;
                    out.push([l1, l2, Literal::pos(a)]);
                    out.push([l1, l2, Literal::neg(a)]);
                }
                None => out.push(*c),
            }
        }
        while out.len() < 3 {
            out.push([Literal::pos(p), Literal::pos(p + 1), Literal::pos(p + 2)]);
            p += 3;
        }
        Normalized::Instance(NaeInstance { p, clauses: out })
    }

    pub fn parse_cnf(text: &str) -> Result<NaeInstance> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("CNF line {}: {msg}", no + 1));
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() || parts.len() != 4 || parts[1] != "nae3" {
                    return Err(err("expected a single header `p nae3 <p> <q>`"));
                }
                let p = parts[2].parse().map_err(|_| err("bad variable count"))?;
                let q = parts[3].parse().map_err(|_| err("bad clause count"))?;
                header = Some((p, q));
                continue;
            }
            let (p, _) = header.ok_or_else(|| err("clause before header"))?;
            let mut lits: Vec<i64> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| err("literal is not an integer"))
                })
                .collect::<Result<_>>()?;
            if lits.last() == Some(&0) {
                lits.pop();
            }
            if lits.len() != 3 || lits.contains(&0) {
                return Err(err("a clause needs exactly three nonzero literals"));
            }
            let mut clause = [Literal::pos(0); 3];
            for (slot, &l) in clause.iter_mut().zip(&lits) {
                let var = l.unsigned_abs() as usize - 1;
                if var >= p {
                    return Err(err("literal exceeds the declared variable count"));
                }
                *slot = Literal {
                    var,
                    positive: l > 0,
                };
            }
            clauses.push(clause);
        }
        let (p, q) = header.ok_or_else(|| Error::Parse("CNF has no `p nae3` header".into()))?;
        if clauses.len() != q {
            return Err(Error::Parse(format!(
                "header declares {q} clauses, found {}",
                clauses.len()
            )));
        }
        NaeInstance::new(p, clauses)
    }

    pub fn to_cnf(&self) -> String {
        let mut s = format!("p nae3 {} {}\n", self.p, self.q());
        for c in &self.clauses {
            s.push_str(&format!(
                "{} {} {}\n",
                c[0].to_dimacs(),
                c[1].to_dimacs(),
                c[2].to_dimacs()
            ));
        }
        s
    }

    /// `q` clauses, each on three distinct random variables with random
    /// polarities. Needs `p >= 3`.
    pub fn random(p: usize, q: usize, seed: u64) -> Result<NaeInstance> {
        if p < 3 {
            return Err(Error::ParameterOutOfRange(
                "random instances need p >= 3".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars: Vec<usize> = (0..p).collect();
        let clauses = (0..q)
            .map(|_| {
                let mut c = [Literal::pos(0); 3];
                for (slot, &v) in c.iter_mut().zip(vars.choose_multiple(&mut rng, 3)) {
                    *slot = Literal {
                        var: v,
                        positive: rng.gen_bool(0.5),
                    };
                }
                c
            })
            .collect();
        Ok(NaeInstance { p, clauses })
    }
}

impl fmt::Display for NaeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cnf())
    }
}

/// What a vertex of the reduction graph stands for. `var` and `clause` are
/// 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    U { var: usize, clause: usize },
    UBar { var: usize, clause: usize },
    Y,
    Z,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::U { var, clause } => write!(f, "u_{},{}", var + 1, clause + 1),
            Role::UBar { var, clause } => write!(f, "ubar_{},{}", var + 1, clause + 1),
            Role::Y => f.write_str("y"),
            Role::Z => f.write_str("z"),
        }
    }
}

/// The graph built from a normalised instance. Vertex ids are allocated per
/// variable: `u_{i,j} = 2qi + j`, `ū_{i,j} = 2qi + q + j`, then `y`, `z`.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub instance: NaeInstance,
    pub graph: Graph,
    pub roles: Vec<Role>,
    /// The colour budget of the decision problem.
    pub k: usize,
}

impl ReductionGraph {
    pub fn u(&self, var: usize, clause: usize) -> usize {
        2 * self.instance.q() * var + clause
    }

    pub fn ubar(&self, var: usize, clause: usize) -> usize {
        2 * self.instance.q() * var + self.instance.q() + clause
    }

    pub fn y(&self) -> usize {
        2 * self.instance.p * self.instance.q()
    }

    pub fn z(&self) -> usize {
        self.y() + 1
    }

    /// Vertex for literal `l` in clause `j`.
    pub fn literal_vertex(&self, l: Literal, j: usize) -> usize {
        if l.positive {
            self.u(l.var, j)
        } else {
            self.ubar(l.var, j)
        }
    }

    pub fn roles_json(&self) -> String {
        serde_json::to_string(&self.roles).expect("plain data serialises")
    }
}

pub fn build_reduction(inst: &NaeInstance) -> Result<ReductionGraph> {
    if !inst.is_normalized() {
        return Err(Error::Precondition(
            "the reduction needs a normalised instance (q >= 3, three distinct variables per clause)".into(),
        ));
    }
    let (p, q) = (inst.p, inst.q());
    let n = 2 * p * q + 2;
    let mut roles = Vec::with_capacity(n);
    for var in 0..p {
        roles.extend((0..q).map(|clause| Role::U { var, clause }));
        roles.extend((0..q).map(|clause| Role::UBar { var, clause }));
    }
    roles.extend([Role::Y, Role::Z]);
    let mut rg = ReductionGraph {
        instance: inst.clone(),
        graph: Graph::empty(0),
        roles,
        k: 3,
    };
    let mut edges = Vec::new();
    for i in 0..p {
        for a in 0..q {
            for b in 0..q {
                edges.push((rg.u(i, a), rg.ubar(i, b)));
            }
        }
    }
    for (j, c) in inst.clauses.iter().enumerate() {
        let [v1, v2, v3] = c.map(|l| rg.literal_vertex(l, j));
        edges.push((v1, v2));
        edges.push((v2, v3));
    }
    for v in 0..2 * p * q {
        edges.push((v, rg.y()));
        edges.push((v, rg.z()));
    }
    let labels: Vec<String> = rg.roles.iter().map(|r| r.to_string()).collect();
    rg.graph = Graph::new(n, &edges)?.with_labels(labels);
    Ok(rg)
}

/// `y`, `z` in one class; for a true variable the `u` vertices share a
/// class and the `ū` vertices the other, swapped for a false variable.
/// Class ids: 0 for the true literals, 1 for the false ones, 2 for `y, z`.
pub fn assignment_to_colouring(rg: &ReductionGraph, a: &[bool]) -> Result<Colouring> {
    let inst = &rg.instance;
    if a.len() != inst.p {
        return Err(Error::Precondition(format!(
            "assignment has {} values for {} variables",
            a.len(),
            inst.p
        )));
    }
    let mut assign = vec![2; rg.graph.order()];
    for (i, &t) in a.iter().enumerate() {
        for j in 0..inst.q() {
            assign[rg.u(i, j)] = usize::from(!t);
            assign[rg.ubar(i, j)] = usize::from(t);
        }
    }
    Colouring::new(assign)
}

/// Reads variable `i` as true when its `u` vertices share the class of the
/// true literals, taken to be the gadget class with the smaller id.
pub fn colouring_to_assignment(rg: &ReductionGraph, c: &Colouring) -> Result<Assignment> {
    let inst = &rg.instance;
    if c.order() != rg.graph.order() {
        return Err(Error::MalformedColouring(format!(
            "colouring has {} vertices, graph has {}",
            c.order(),
            rg.graph.order()
        )));
    }
    if c.k() > rg.k {
        return Err(Error::Precondition(format!(
            "colouring uses {} > {} classes",
            c.k(),
            rg.k
        )));
    }
    if !verify_colouring(&rg.graph, c, PositionKind::Gp)? {
        return Err(Error::Precondition(
            "colouring is not a gp-colouring".into(),
        ));
    }
    let yz = c.colour_of(rg.y());
    let gadget: Vec<usize> = (0..c.k()).filter(|&k| k != yz).collect();
    let truth = *gadget
        .first()
        .ok_or_else(|| Error::Internal("no gadget class besides the class of y".into()))?;
    let mut a = Vec::with_capacity(inst.p);
    for i in 0..inst.p {
        let cu = c.colour_of(rg.u(i, 0));
        let cb = c.colour_of(rg.ubar(i, 0));
        let consistent = cu != cb
            && cu != yz
            && cb != yz
            && (0..inst.q())
                .all(|j| c.colour_of(rg.u(i, j)) == cu && c.colour_of(rg.ubar(i, j)) == cb);
        if !consistent {
            return Err(Error::Internal(format!(
                "gadget of variable {} is not split into two classes away from y",
                i + 1
            )));
        }
        a.push(cu == truth);
    }
    if !inst.satisfied_by(&a) {
        return Err(Error::Internal(
            "extracted assignment leaves a clause all-equal".into(),
        ));
    }
    Ok(a)
}

/// Lexicographically least satisfying assignment (false before true,
/// variable 1 most significant), or `None`.
pub fn nae_brute_force(inst: &NaeInstance) -> Result<Option<Assignment>> {
    if inst.p > 24 {
        return Err(Error::ParameterOutOfRange(format!(
            "brute force handles p <= 24, got {}",
            inst.p
        )));
    }
    let p = inst.p;
    let mut a = vec![false; p];
    for mask in 0u32..(1 << p) {
        for (i, slot) in a.iter_mut().enumerate() {
            *slot = mask >> (p - 1 - i) & 1 == 1;
        }
        if inst.satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Both sides of the equivalence for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub trivially_no: bool,
    pub p: usize,
    pub q: usize,
    pub order: usize,
    pub diameter: Option<u32>,
    pub nae_satisfiable: bool,
    pub gp_colourable: bool,
    pub agree: bool,
    pub assignment: Option<Assignment>,
    pub colouring: Option<Vec<Vec<usize>>>,
    pub recipe_verified: Option<bool>,
    pub extracted_assignment: Option<Assignment>,
}

pub fn check_equivalence(raw: &NaeInstance, budget: &Budget) -> Result<EquivalenceReport> {
    let inst = match raw.normalize() {
        Normalized::TriviallyNo => {
            return Ok(EquivalenceReport {
                trivially_no: true,
                p: raw.p,
                q: raw.q(),
                order: 0,
                diameter: None,
                nae_satisfiable: false,
                gp_colourable: false,
                agree: true,
                assignment: None,
                colouring: None,
                recipe_verified: None,
                extracted_assignment: None,
            })
        }
        Normalized::Instance(i) => i,
    };
    let rg = build_reduction(&inst)?;
    let brute = nae_brute_force(&inst)?;
    let recipe_verified = match &brute {
        Some(a) => Some(verify_colouring(
            &rg.graph,
            &assignment_to_colouring(&rg, a)?,
            PositionKind::Gp,
        )?),
        None => None,
    };
    let found = find_colouring(&rg.graph, PositionKind::Gp, rg.k, budget)?;
    let extracted = match &found {
        Some(c) => Some(colouring_to_assignment(&rg, c)?),
        None => None,
    };
    Ok(EquivalenceReport {
        trivially_no: false,
        p: inst.p,
        q: inst.q(),
        order: rg.graph.order(),
        diameter: Some(rg.graph.diameter()),
        nae_satisfiable: brute.is_some(),
        gp_colourable: found.is_some(),
        agree: brute.is_some() == found.is_some() && recipe_verified != Some(false),
        assignment: brute,
        colouring: found.map(|c| c.classes()),
        recipe_verified,
        extracted_assignment: extracted,
    })
}
