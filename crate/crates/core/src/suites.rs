//! Named checks that compare solver results, closed forms and constructions
//! over fixed corpora. The CLI `suite` command and the acceptance tests run
//! these.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::budget::Budget;
use crate::catalogue;
use crate::closed_forms::{
    chi_gp_two_characterization, ladder_formula, large_value_characterization,
    line_complete_formula, multipartite_formula, p3_grid_lower_bound, predicted_chi,
};
use crate::constructions::{
    colour_block_graph_peeling, construct_colouring, kirkman_triple_system,
};
use crate::error::{Error, Result};
use crate::families::{
    complementary_prism, parse_spec, random_block_graph, random_graph, random_split_graph,
    FamilySpec,
};
use crate::graph::Graph;
use crate::position::{
    max_position_set_through, position_number_with, position_sets_of_size, PositionKind,
};
use crate::reduction::{check_equivalence, NaeInstance};
use crate::solver::{
    bounds, check_inequality_suite, chromatic_number, chromatic_position_number,
    cochromatic_number, find_colouring, verify_colouring, Optimality,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRecord {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// Results of one suite. `elapsed` is kept out of the JSON so that reports
/// are byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<SuiteRecord>,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Number of random items, for suites that sample.
    pub count: Option<usize>,
    pub seed: u64,
    /// Largest catalogue order, for suites over the shipped catalogues.
    pub max_n: Option<usize>,
    /// Explicit input graphs, replacing the catalogue where supported.
    pub graphs: Option<Vec<Graph>>,
    pub budget: Budget,
}

pub const SUITES: [&str; 14] = [
    "petersen",
    "cycles",
    "block-graphs",
    "multipartite",
    "line-complete",
    "kneser",
    "grids",
    "torus",
    "strong-grids",
    "reduction",
    "characterisations",
    "inequalities",
    "ng-check",
    "realisations",
];

struct Builder {
    records: Vec<SuiteRecord>,
}

impl Builder {
    fn check(&mut self, id: impl Into<String>, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.records.push(SuiteRecord {
            id: id.into(),
            expected,
            computed,
            pass,
        });
    }

    fn holds(
        &mut self,
        id: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        pass: bool,
    ) {
        self.records.push(SuiteRecord {
            id: id.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut b = Builder {
        records: Vec::new(),
    };
    match name {
        "petersen" => petersen(&mut b, opts)?,
        "cycles" => cycles(&mut b, opts)?,
        "block-graphs" => block_graphs(&mut b, opts)?,
        "multipartite" => multipartite(&mut b, opts)?,
        "line-complete" => line_complete(&mut b, opts)?,
        "kneser" => kneser(&mut b, opts)?,
        "grids" => grids(&mut b, opts)?,
        "torus" => torus(&mut b)?,
        "strong-grids" => strong_grids(&mut b, opts)?,
        "reduction" => reduction(&mut b, opts)?,
        "characterisations" => characterisations(&mut b, opts)?,
        "inequalities" => inequalities(&mut b, opts)?,
        "ng-check" => ng_check(&mut b, opts)?,
        "realisations" => realisations(&mut b, opts)?,
        _ => {
            return Err(Error::Unsupported(format!(
                "unknown suite {name:?}; available: {}",
                SUITES.join(", ")
            )))
        }
    }
    let failed = b.records.iter().filter(|r| !r.pass).count();
    Ok(SuiteReport {
        suite: name.to_string(),
        passed: b.records.len() - failed,
        failed,
        records: b.records,
        elapsed: start.elapsed(),
    })
}

/// Exact χ_π or a budget error.
pub fn exact_chi(g: &Graph, kind: PositionKind, budget: &Budget) -> Result<usize> {
    let c = chromatic_position_number(g, kind, budget)?;
    if c.optimality != Optimality::Exact {
        return Err(Error::BudgetExceeded(format!(
            "chi_{kind} on a graph of order {} not solved exactly",
            g.order()
        )));
    }
    Ok(c.k())
}

fn spec(text: &str) -> Result<(FamilySpec, Graph)> {
    let s = parse_spec(text)?;
    let g = s.generate()?;
    Ok((s, g))
}

fn petersen(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let g = FamilySpec::Petersen.generate()?;
    for (kind, want) in [
        (PositionKind::Gp, 2),
        (PositionKind::Mono, 4),
        (PositionKind::Mu, 2),
        (PositionKind::GpI, 3),
    ] {
        b.check(
            format!("petersen chi_{kind}"),
            want,
            exact_chi(&g, kind, &opts.budget)?,
        );
    }
    b.check("petersen chi", 3, chromatic_number(&g, &opts.budget)?);
    Ok(())
}

fn cycles(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    for (kind, range) in [(PositionKind::Gp, 5..=15), (PositionKind::Mono, 3..=12)] {
        for n in range {
            let text = format!("cycle:{n}");
            let (s, g) = spec(&text)?;
            let want = predicted_chi(&s, kind)
                .exact_value()
                .ok_or_else(|| Error::Internal(format!("{text}: no closed form for {kind}")))?;
            b.check(
                format!("{text} chi_{kind} solver"),
                want,
                exact_chi(&g, kind, &opts.budget)?,
            );
            b.check(
                format!("{text} chi_{kind} construction"),
                want,
                construct_colouring(&s, kind)?.k(),
            );
        }
    }
    Ok(())
}

fn block_graphs(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let count = opts.count.unwrap_or(50);
    for i in 0..count as u64 {
        let seed = opts.seed + i;
        let n = 6 + (seed % 9) as usize;
        let g = random_block_graph(n, seed);
        let want = (g.diameter() as usize + 2) / 2;
        let id = format!("block_random:{n},{seed}");
        b.check(
            format!("{id} solver"),
            want,
            exact_chi(&g, PositionKind::Gp, &opts.budget)?,
        );
        b.check(
            format!("{id} peeling"),
            want,
            colour_block_graph_peeling(&g)?.k(),
        );
    }
    Ok(())
}

/// Partitions of `n` into parts of size at most `max`, descending.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn multipartite(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    for n in 1..=opts.max_n.unwrap_or(9) {
        for parts in partitions(n) {
            let s = FamilySpec::Multipartite(parts.clone());
            let g = s.generate()?;
            let f = multipartite_formula(&parts);
            let id = format!("{s}");
            b.check(
                format!("{id} solver"),
                f,
                exact_chi(&g, PositionKind::Gp, &opts.budget)?,
            );
            b.check(
                format!("{id} cochromatic"),
                f,
                cochromatic_number(&g, &opts.budget)?,
            );
        }
    }
    Ok(())
}

fn line_complete(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    for n in 4..=7 {
        let (_, g) = spec(&format!("line_complete:{n}"))?;
        b.check(
            format!("line_complete:{n} solver"),
            line_complete_formula(n),
            exact_chi(&g, PositionKind::Gp, &opts.budget)?,
        );
    }
    for n in [9, 13, 15] {
        let (s, g) = spec(&format!("line_complete:{n}"))?;
        let k = construct_colouring(&s, PositionKind::Gp)?.k();
        // L(K_n) is vertex-transitive, so some maximum set contains vertex 0;
        // the node limit is lifted because n = 15 needs around 10^9 steps
        let unbounded = Budget {
            node_limit: None,
            ..opts.budget
        };
        let gp = max_position_set_through(&g, PositionKind::Gp, 0, &unbounded)?.value;
        let lower = g.order().div_ceil(gp);
        b.check(
            format!("line_complete:{n} construction"),
            line_complete_formula(n),
            k,
        );
        b.check(
            format!("line_complete:{n} ceil(n/gp) lower bound"),
            k,
            lower,
        );
    }
    for n in [3, 9, 15] {
        let audit = kirkman_triple_system(n).and_then(|s| s.audit());
        b.holds(
            format!("kts:{n} pair coverage"),
            "audit ok",
            match &audit {
                Ok(()) => "audit ok".to_string(),
                Err(e) => e.to_string(),
            },
            audit.is_ok(),
        );
    }
    Ok(())
}

fn kneser(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    for n in 5..=7 {
        let (_, g) = spec(&format!("kneser2:{n}"))?;
        b.check(
            format!("kneser2:{n} solver"),
            n - 3,
            exact_chi(&g, PositionKind::Gp, &opts.budget)?,
        );
    }
    let (s, g) = spec("kneser2:8")?;
    b.check(
        "kneser2:8 construction",
        5,
        construct_colouring(&s, PositionKind::Gp)?.k(),
    );
    let gp = position_number_with(&g, PositionKind::Gp, &opts.budget)?.value;
    b.check("kneser2:8 gp number", 7, gp);
    let sevens = position_sets_of_size(&g, PositionKind::Gp, 7, &opts.budget)?;
    let dependent = sevens.iter().filter(|s| !g.is_independent(s)).count();
    b.holds(
        "kneser2:8 gp-sets of size 7 are independent",
        "0 dependent",
        format!("{dependent} dependent of {}", sevens.len()),
        dependent == 0 && !sevens.is_empty(),
    );
    let chi = chromatic_number(&g, &opts.budget)?;
    b.check("kneser2:8 chromatic number", 6, chi);
    // four classes of a 28-vertex graph with gp-number 7 must all have size 7,
    // hence be independent, which needs chi <= 4
    b.holds(
        "kneser2:8 four classes infeasible",
        "true",
        chi > 4 && gp == 7 && dependent == 0,
        chi > 4 && gp == 7 && dependent == 0,
    );
    Ok(())
}

fn grids(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    for n in 3..=12 {
        let (_, g) = spec(&format!("cartesian(path:2,path:{n})"))?;
        b.check(
            format!("P2xP{n} solver"),
            ladder_formula(n),
            exact_chi(&g, PositionKind::Gp, &opts.budget)?,
        );
    }
    for n in 4..=5 {
        let (_, g) = spec(&format!("cartesian(path:4,path:{n})"))?;
        b.check(
            format!("P4xP{n} solver"),
            n + 1,
            exact_chi(&g, PositionKind::Gp, &opts.budget)?,
        );
    }
    for n in 4..=10 {
        let (s, _) = spec(&format!("cartesian(path:4,path:{n})"))?;
        b.check(
            format!("P4xP{n} construction"),
            n + 1,
            construct_colouring(&s, PositionKind::Gp)?.k(),
        );
    }
    let (s, _) = spec("cartesian(path:3,path:12)")?;
    let k = construct_colouring(&s, PositionKind::Gp)?.k();
    b.check("P3xP12 construction", 10, k);
    b.check(
        "P3xP12 central-layer lower bound",
        k,
        p3_grid_lower_bound(12),
    );
    Ok(())
}

fn torus(b: &mut Builder) -> Result<()> {
    let (s, _) = spec("cartesian(cycle:49,cycle:49)")?;
    let c = construct_colouring(&s, PositionKind::Gp)?;
    let classes = c.colouring.classes();
    b.check("C49xC49 classes", 343, classes.len());
    b.check("C49xC49 class sizes", "7", {
        let sizes: BTreeSet<usize> = classes.iter().map(Vec::len).collect();
        sizes
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    });
    b.check(
        "C49xC49 vertices covered",
        2401,
        classes.iter().map(Vec::len).sum::<usize>(),
    );
    b.check("C49xC49 verified", true, c.verified);
    Ok(())
}

fn strong_grids(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    for m in 2..=8usize {
        for n in m..=8usize {
            let text = format!("strong(path:{m},path:{n})");
            let (s, g) = spec(&text)?;
            let c = construct_colouring(&s, PositionKind::Gp)?;
            let cap = (m * n).div_ceil(4) + n;
            b.holds(
                format!("{text} gp construction"),
                format!("<= {cap}"),
                c.k(),
                c.verified && c.k() <= cap,
            );
            if n <= 4 {
                let exact = exact_chi(&g, PositionKind::Gp, &opts.budget)?;
                b.holds(
                    format!("{text} gp solver"),
                    format!("in [ceil(mn/4), {}]", c.k()),
                    exact,
                    exact >= (m * n).div_ceil(4) && exact <= c.k(),
                );
            }
            let mu = construct_colouring(&s, PositionKind::Mu)?;
            let want = if n == 2 {
                1
            } else if m == 2 {
                2
            } else {
                m.div_ceil(2)
            };
            b.check(format!("{text} mu construction"), want, mu.k());
            if m <= 5 && n <= 6 {
                b.check(
                    format!("{text} mu solver"),
                    want,
                    exact_chi(&g, PositionKind::Mu, &opts.budget)?,
                );
            }
        }
    }
    Ok(())
}

fn reduction(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let example = NaeInstance::parse_cnf(catalogue::NAE_EXAMPLE_CNF)?;
    let r = check_equivalence(&example, &opts.budget)?;
    b.check("example order", 26, r.order);
    b.check("example diameter", 2, r.diameter.unwrap_or(0));
    b.check(
        "example satisfiable and 3-colourable",
        "true,true,true",
        format!("{},{},{}", r.nae_satisfiable, r.gp_colourable, r.agree),
    );
    let count = opts.count.unwrap_or(100);
    for i in 0..count as u64 {
        let seed = opts.seed + i;
        let p = 3 + (seed % 3) as usize;
        let q = 3 + (seed / 3 % 2) as usize;
        let inst = NaeInstance::random(p, q, seed)?;
        let r = check_equivalence(&inst, &opts.budget)?;
        b.holds(
            format!("random p={p} q={q} seed={seed}"),
            "agree",
            format!("nae={} gp3={}", r.nae_satisfiable, r.gp_colourable),
            r.agree,
        );
    }
    Ok(())
}

fn catalogue_graphs(opts: &SuiteOptions, max_n: usize) -> Result<Vec<Graph>> {
    if let Some(gs) = &opts.graphs {
        return Ok(gs.clone());
    }
    let mut out = Vec::new();
    for n in 1..=max_n.min(catalogue::MAX_ORDER) {
        out.extend(catalogue::graphs_of_order(n)?);
    }
    Ok(out)
}

fn codes(gs: &[Graph]) -> Result<BTreeSet<String>> {
    gs.iter().map(|g| g.canonical_graph6()).collect()
}

fn characterisations(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let budget = &opts.budget;
    let small = catalogue_graphs(
        &SuiteOptions {
            graphs: None,
            ..opts.clone()
        },
        5,
    )?;
    let mut n_minus_1 = BTreeSet::new();
    for g in &small {
        if g.order() >= 2 && exact_chi(g, PositionKind::Gp, budget)? == g.order() - 1 {
            n_minus_1.insert(g.canonical_graph6()?);
        }
    }
    let mut want = BTreeSet::new();
    for n in 2..=5 {
        want.extend(codes(&large_value_characterization(n)?.gp_n_minus_1)?);
    }
    b.check(
        "chi_gp = n-1 for n <= 5",
        fmt_set(&want),
        fmt_set(&n_minus_1),
    );
    for n in 3..=5 {
        let cat = large_value_characterization(n)?;
        let order_n: Vec<&Graph> = small.iter().filter(|g| g.order() == n).collect();
        for (kind, list) in [
            (PositionKind::Gp, &cat.gp_n_minus_2),
            (PositionKind::Mono, &cat.mono_n_minus_2),
        ] {
            let mut found = BTreeSet::new();
            for g in &order_n {
                if exact_chi(g, kind, budget)? + 2 == n {
                    found.insert(g.canonical_graph6()?);
                }
            }
            b.check(
                format!("chi_{kind} = n-2 at n = {n}"),
                fmt_set(&codes(list)?),
                fmt_set(&found),
            );
        }
    }
    let max_n = opts.max_n.unwrap_or(7);
    let mut mismatches = Vec::new();
    let all = catalogue_graphs(opts, max_n)?;
    for g in &all {
        let two = exact_chi(g, PositionKind::Gp, budget)? == 2;
        if chi_gp_two_characterization(g, budget)? != two {
            mismatches.push(crate::graph::graph6::encode(g)?);
        }
    }
    b.check(
        format!("chi_gp = 2 characterisation over {} graphs", all.len()),
        "",
        mismatches.join(" "),
    );
    Ok(())
}

fn fmt_set(s: &BTreeSet<String>) -> String {
    s.iter().cloned().collect::<Vec<_>>().join(" ")
}

/// A connected random graph on at most nine vertices for sample `seed`.
pub fn random_connected(seed: u64) -> Graph {
    let n = 3 + (seed % 7) as usize;
    let p = 0.3 + 0.4 * ((seed / 7) % 5) as f64 / 4.0;
    let mut attempt = 0u64;
    loop {
        let g = random_graph(n, p, seed.wrapping_mul(1_000_003).wrapping_add(attempt));
        if g.is_connected() {
            return g;
        }
        attempt += 1;
    }
}

fn inequalities(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let count = opts.count.unwrap_or(500);
    for i in 0..count as u64 {
        let seed = opts.seed + i;
        let g = random_connected(seed);
        let report = check_inequality_suite(&g, &opts.budget)?;
        let failures: Vec<String> = report
            .failures()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        b.check(
            format!("random connected seed={seed} n={}", g.order()),
            "",
            failures.join("; "),
        );
    }
    Ok(())
}

fn ng_check(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let graphs = catalogue_graphs(opts, opts.max_n.unwrap_or(7))?;
    for g in &graphs {
        let n = g.order();
        let a = exact_chi(g, PositionKind::GpI, &opts.budget)?;
        let c = exact_chi(&g.complement(), PositionKind::GpI, &opts.budget)?;
        b.holds(
            crate::graph::graph6::encode(g)?,
            format!("<= {}", n + 1),
            a + c,
            a + c <= n + 1,
        );
    }
    Ok(())
}

fn realisations(b: &mut Builder, opts: &SuiteOptions) -> Result<()> {
    let budget = &opts.budget;
    let (_, h) = spec("H:5,5")?;
    b.check("H(5,5) chi_gp", 4, exact_chi(&h, PositionKind::Gp, budget)?);
    b.check(
        "H(5,5) chi_mono",
        6,
        exact_chi(&h, PositionKind::Mono, budget)?,
    );
    for n in 3..=8 {
        for seed in 0..5 {
            let g = random_split_graph(n, seed);
            b.check(
                format!("split_random:{n},{seed} chi_gp"),
                2,
                exact_chi(&g, PositionKind::Gp, budget)?,
            );
        }
    }
    for n in 2..=8 {
        for seed in 0..3 {
            let base = random_split_graph(n, seed);
            if !base.is_connected() {
                continue;
            }
            let g = complementary_prism(&base);
            b.check(
                format!("complementary_prism(split_random:{n},{seed}) chi_gp"),
                2,
                exact_chi(&g, PositionKind::Gp, budget)?,
            );
        }
    }
    for r in 4..=9usize {
        let (_, g) = spec(&format!("Q:{r}"))?;
        let c = chromatic_position_number(&g, PositionKind::Gp, budget)?;
        let bp = bounds(&g, PositionKind::Gp, budget)?;
        let ok = c.optimality == Optimality::Exact
            && verify_colouring(&g, &c.colouring, PositionKind::Gp)?
            && bp.lower <= c.k()
            && c.k() <= bp.upper
            && find_colouring(&g, PositionKind::Gp, c.k() - 1, budget)?.is_none();
        b.holds(
            format!("Q({r}) chi_gp"),
            format!(
                "candidates {} and {}",
                (r - 1).div_ceil(2),
                1 + (r - 2).div_ceil(2)
            ),
            c.k(),
            ok,
        );
    }
    Ok(())
}
