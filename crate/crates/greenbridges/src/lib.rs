//! Solvers, generators, and a benchmark harness for the reserve green
//! bridges placement problem: given a graph with edge costs and a set of
//! habitats (vertex sets), find a minimum-cost edge subset under which every
//! habitat induces a connected subgraph.

pub mod approx;
pub mod bench;
pub mod error;
pub mod generators;
pub mod graph;
pub mod habitat_graph;
pub mod io;
pub mod matching;
pub mod metrics;
pub mod planar;
pub mod setpacking;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{EdgeCosts, Graph, Habitat, HabitatClass, Instance, Solution};
