use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    chromatic_number, chromatic_position_number, clique_cover_number, cochromatic_number,
    total_domination_number, Optimality,
};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{monophonic_diameter, Graph};
use crate::position::{position_number_with, PositionKind};

/// One evaluated inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// All parameters computed for a graph and the inequalities checked on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub values: BTreeMap<String, usize>,
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn failures(&self) -> impl Iterator<Item = &InequalityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }
}

struct Recorder {
    checks: Vec<InequalityCheck>,
}

impl Recorder {
    fn le(&mut self, name: &str, a: (&str, usize), b: (&str, usize)) {
        self.checks.push(InequalityCheck {
            name: name.to_string(),
            holds: a.1 <= b.1,
            detail: format!("{} = {} <= {} = {}", a.0, a.1, b.0, b.1),
        });
    }

    fn eq(&mut self, name: &str, a: (&str, usize), b: (&str, usize)) {
        self.checks.push(InequalityCheck {
            name: name.to_string(),
            holds: a.1 == b.1,
            detail: format!("{} = {} == {} = {}", a.0, a.1, b.0, b.1),
        });
    }
}

/// Computes every position chromatic number of `g` exactly and checks the
/// elementary inequalities between them and the classical parameters.
pub fn check_inequality_suite(g: &Graph, budget: &Budget) -> Result<InequalityReport> {
    let n = g.order();
    let mut values = BTreeMap::new();
    let mut chi = BTreeMap::new();
    let mut pi = BTreeMap::new();
    for kind in PositionKind::ALL {
        let c = chromatic_position_number(g, kind, budget)?;
        if c.optimality != Optimality::Exact {
            return Err(Error::BudgetExceeded(format!(
                "chi_{kind} not solved exactly"
            )));
        }
        chi.insert(kind, c.k());
        pi.insert(kind, position_number_with(g, kind, budget)?.value);
        values.insert(format!("chi_{kind}"), c.k());
        values.insert(format!("pi_{kind}"), pi[&kind]);
    }
    let chromatic = chromatic_number(g, budget)?;
    let theta = clique_cover_number(g, budget)?;
    let diam = g.diameter() as usize;
    let mdiam = monophonic_diameter(g, budget)? as usize;
    values.insert("chi".into(), chromatic);
    values.insert("theta".into(), theta);
    values.insert("diam".into(), diam);
    values.insert("mono_diam".into(), mdiam);

    use PositionKind::*;
    let c = |k: PositionKind| (k.name(), chi[&k]);
    let mut r = Recorder { checks: Vec::new() };
    r.le("chain mu <= gp", c(Mu), c(Gp));
    r.le("chain gp <= mono", c(Gp), c(Mono));
    r.le("chain gp <= gp_i", c(Gp), c(GpI));
    r.le("chain mono <= mono_i", c(Mono), c(MonoI));
    r.le("chain gp_i <= mono_i", c(GpI), c(MonoI));
    r.le("chain mu_i <= gp_i", c(MuI), c(GpI));
    r.le("chain mu <= mu_i", c(Mu), c(MuI));
    if n > 0 {
        for kind in PositionKind::ALL {
            let p = pi[&kind];
            let name = kind.name();
            r.le(
                &format!("{name}: n/pi lower"),
                ("ceil(n/pi)", n.div_ceil(p)),
                c(kind),
            );
            r.le(
                &format!("{name}: n-pi+1 upper"),
                c(kind),
                ("n-pi+1", n - p + 1),
            );
            if kind.is_independent() {
                r.le(
                    &format!("{name}: chromatic lower"),
                    ("chi", chromatic),
                    c(kind),
                );
            } else {
                r.le(
                    &format!("{name}: pairs upper"),
                    c(kind),
                    ("ceil((n-pi+2)/2)", (n - p + 2).div_ceil(2)),
                );
                r.le(
                    &format!("{name}: clique cover upper"),
                    c(kind),
                    ("theta", theta),
                );
            }
        }
    }
    r.le(
        "gp: diameter lower",
        ("ceil((diam*+1)/2)", (diam + 2) / 2),
        c(Gp),
    );
    r.le(
        "mono: monophonic diameter lower",
        ("ceil((diam_m+1)/2)", (mdiam + 2) / 2),
        c(Mono),
    );
    if diam >= 2 {
        for kind in [GpI, MonoI] {
            r.le(
                &format!("{}: geodesic pairing upper", kind.name()),
                c(kind),
                ("n-floor((diam+1)/2)", n - diam.div_ceil(2)),
            );
        }
    }
    let connected = g.is_connected();
    if connected && (2..=3).contains(&diam) {
        r.le("diam <= 3: gp <= chi", c(Gp), ("chi", chromatic));
        r.eq("diam in {2,3}: gp_i = chi", c(GpI), ("chi", chromatic));
        r.eq("diam in {2,3}: mu_i = chi", c(MuI), ("chi", chromatic));
        let zeta = cochromatic_number(g, budget)?;
        values.insert("zeta".into(), zeta);
        r.le("diam <= 3: gp <= zeta", c(Gp), ("zeta", zeta));
    }
    let no_isolated = n > 0 && (0..n).all(|v| g.degree(v) > 0);
    if no_isolated && g.is_diamond_free() {
        let gt = total_domination_number(g, budget)?;
        values.insert("gamma_t".into(), gt);
        r.le("diamond-free: gp <= gamma_t", c(Gp), ("gamma_t", gt));
    }
    Ok(InequalityReport {
        values,
        checks: r.checks,
    })
}
