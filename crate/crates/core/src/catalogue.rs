//! Data shipped with the crate: every graph on up to seven vertices (one
//! per isomorphism class, graph6), the 15-point Kirkman system and a small
//! NAE3-SAT instance. `SHA256SUMS` lists their checksums.

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

const GRAPHS: [&str; 7] = [
    include_str!("../data/graphs1.g6"),
    include_str!("../data/graphs2.g6"),
    include_str!("../data/graphs3.g6"),
    include_str!("../data/graphs4.g6"),
    include_str!("../data/graphs5.g6"),
    include_str!("../data/graphs6.g6"),
    include_str!("../data/graphs7.g6"),
];

pub const MAX_ORDER: usize = 7;

/// Raw graph6 text for graphs of order `n`.
pub fn graph6_text(n: usize) -> Result<&'static str> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::Unsupported(format!(
            "catalogues cover orders 1..={MAX_ORDER}, not {n}"
        )));
    }
    Ok(GRAPHS[n - 1])
}

/// One graph per isomorphism class of order `n`.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    graph6::decode_stream(graph6_text(n)?)
}

pub const KTS15_JSON: &str = include_str!("../data/kts15.json");
pub const NAE_EXAMPLE_CNF: &str = include_str!("../data/nae_example.cnf");
pub const SHA256SUMS: &str = include_str!("../data/SHA256SUMS");

/// File name and contents of every checksummed item.
pub fn files() -> Vec<(&'static str, &'static str)> {
    let mut out: Vec<(&str, &str)> = vec![
        ("graphs1.g6", GRAPHS[0]),
        ("graphs2.g6", GRAPHS[1]),
        ("graphs3.g6", GRAPHS[2]),
        ("graphs4.g6", GRAPHS[3]),
        ("graphs5.g6", GRAPHS[4]),
        ("graphs6.g6", GRAPHS[5]),
        ("graphs7.g6", GRAPHS[6]),
    ];
    out.extend([
        ("kts15.json", KTS15_JSON),
        ("nae_example.cnf", NAE_EXAMPLE_CNF),
    ]);
    out
}
