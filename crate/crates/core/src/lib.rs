//! Position colourings of graphs: colourings whose classes are general
//! position, monophonic position or mutual-visibility sets.
//!
//! The crate provides exact oracles for the six position properties, an
//! exact partition solver for the corresponding chromatic numbers, graph
//! family generators, closed-form predictions, explicit constructions and
//! the NAE3-SAT reduction.

pub mod budget;
pub mod catalogue;
pub mod closed_forms;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod position;
pub mod reduction;
pub mod solver;
pub mod suites;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{ComponentStructure, DistanceMatrix, Graph, ProductKind};
pub use position::{PositionKind, PositionWitness};
pub use solver::{BoundPair, CertifiedColouring, Colouring, Optimality};

#[cfg(test)]
pub(crate) mod testutil;
