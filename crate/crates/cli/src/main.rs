//! `pos`: command-line front end for position colourings.
//!
//! Exit codes: 0 success, 1 verification or suite failure, 2 input error,
//! 3 resource limit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use poscolour::constructions::construct_colouring;
use poscolour::families::parse_spec;
use poscolour::graph::json::parse_graph;
use poscolour::graph::{graph6, json};
use poscolour::reduction::{build_reduction, check_equivalence, NaeInstance, Normalized};
use poscolour::solver::{bounds, chromatic_position_number, verify_colouring};
use poscolour::suites::{run_suite, SuiteOptions};
use poscolour::{Budget, Colouring, Error, Graph, Optimality, PositionKind};

#[derive(Parser)]
#[command(name = "pos", version, about = "Position colourings of graphs")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Limits {
    /// Wall-clock limit per search, in seconds.
    #[arg(long, global = true, env = "POS_TIME_LIMIT")]
    time_limit: Option<f64>,
    /// Search-node limit per search; 0 removes the limit.
    #[arg(long, global = true, env = "POS_NODE_LIMIT")]
    node_limit: Option<u64>,
}

impl Limits {
    fn budget(&self) -> Budget {
        let mut b = match self.node_limit {
            Some(0) => Budget::unlimited(),
            Some(n) => Budget::nodes(n),
            None => Budget::default(),
        };
        if let Some(t) = self.time_limit {
            b = b.with_time_limit(Duration::from_secs_f64(t.max(0.0)));
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact value with an optimal colouring, or bounds, for each input graph.
    Compute {
        /// Graph6 lines or one JSON edge list; `-` or omitted reads stdin.
        input: Option<PathBuf>,
        #[arg(long, default_value = "gp")]
        kind: PositionKind,
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        #[arg(long)]
        bounds: bool,
    },
    /// Check a colouring file against a graph.
    Verify {
        graph: PathBuf,
        colouring: PathBuf,
        /// Defaults to the kind recorded in the colouring file.
        #[arg(long)]
        kind: Option<PositionKind>,
    },
    /// Print a family member as graph6.
    Family {
        spec: String,
        /// Print the JSON edge list instead.
        #[arg(long)]
        json: bool,
    },
    /// Print an explicit colouring of a family member.
    Construct { spec: String, kind: PositionKind },
    /// Build the reduction graph of an NAE3-SAT instance in DIMACS-like form.
    Reduce {
        cnf: PathBuf,
        /// Also decide both sides and print the equivalence report.
        #[arg(long)]
        check: bool,
    },
    /// Run a named suite and print its report.
    Suite {
        name: String,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
        /// Graph6 stream replacing the shipped catalogue; `-` reads stdin.
        #[arg(long)]
        graphs: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn read_source(path: Option<&Path>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        None => io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) if p == Path::new("-") => io::stdin().read_to_string(&mut text).map(|_| ()),
        Some(p) => fs::read_to_string(p).map(|t| text = t),
    }
    .map_err(|e| Error::Parse(format!("cannot read input: {e}")))?;
    Ok(text)
}

fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>, Error> {
    let text = read_source(path)?;
    if text.trim_start().starts_with('{') {
        Ok(vec![json::from_json(&text)?])
    } else {
        graph6::decode_stream(&text)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Error> {
    let budget = cli.limits.budget();
    let mut code = 0;
    let mut emit = |line: String| {
        writeln!(out, "{line}").map_err(|e| Error::Parse(format!("cannot write output: {e}")))
    };
    match cli.command {
        Command::Compute {
            input,
            kind,
            bounds: want_bounds,
            ..
        } => {
            let graphs = read_graphs(input.as_deref())?;
            if graphs.is_empty() {
                return Err(Error::Parse("no graph on input".into()));
            }
            for g in &graphs {
                if want_bounds {
                    let b = bounds(g, kind, &budget)?;
                    emit(serde_json::to_string(&b).expect("plain data serialises"))?;
                } else {
                    let c = chromatic_position_number(g, kind, &budget)?;
                    if c.optimality != Optimality::Exact {
                        code = 3;
                    }
                    emit(c.to_json())?;
                }
            }
        }
        Command::Verify {
            graph,
            colouring,
            kind,
        } => {
            let g = parse_graph(&read_source(Some(&graph))?)?;
            let (c, recorded) = Colouring::from_json(&read_source(Some(&colouring))?)?;
            let kind = kind.or(recorded).ok_or_else(|| {
                Error::Parse("no kind given and none recorded in the colouring".into())
            })?;
            if c.order() != g.order() {
                return Err(Error::MalformedColouring(format!(
                    "colouring covers {} vertices, graph has {}",
                    c.order(),
                    g.order()
                )));
            }
            let ok = verify_colouring(&g, &c, kind)?;
            emit(format!(
                "{{\"kind\":\"{kind}\",\"k\":{},\"verified\":{ok}}}",
                c.k()
            ))?;
            if !ok {
                code = 1;
            }
        }
        Command::Family {
            spec,
            json: as_json,
        } => {
            let g = parse_spec(&spec)?.generate()?;
            emit(if as_json {
                json::to_json(&g)
            } else {
                graph6::encode(&g)?
            })?;
        }
        Command::Construct { spec, kind } => {
            emit(construct_colouring(&parse_spec(&spec)?, kind)?.to_json())?;
        }
        Command::Reduce { cnf, check } => {
            let raw = NaeInstance::parse_cnf(&read_source(Some(&cnf))?)?;
            match raw.normalize() {
                Normalized::Instance(inst) => {
                    let rg = build_reduction(&inst)?;
                    emit(graph6::encode(&rg.graph)?)?;
                    emit(rg.roles_json())?;
                }
                Normalized::TriviallyNo => {
                    eprintln!(
                        "instance has a clause with three equal literals; no reduction graph"
                    );
                    if !check {
                        code = 1;
                    }
                }
            }
            if check {
                let report = check_equivalence(&raw, &budget)?;
                emit(serde_json::to_string(&report).expect("plain data serialises"))?;
                if !report.agree {
                    code = 1;
                }
            }
        }
        Command::Suite {
            name,
            count,
            seed,
            max_n,
            graphs,
        } => {
            let graphs = match graphs {
                Some(p) => Some(read_graphs(Some(&p))?),
                None => None,
            };
            let opts = SuiteOptions {
                count,
                seed,
                max_n,
                graphs,
                budget,
            };
            let report = run_suite(&name, &opts)?;
            eprintln!(
                "{}: {} passed, {} failed in {:.2}s",
                report.suite,
                report.passed,
                report.failed,
                report.elapsed.as_secs_f64()
            );
            emit(report.to_json())?;
            if !report.all_pass() {
                code = 1;
            }
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pos: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
