//! Multiset star-transposition graphs `ST(k, l)` and pancake graphs
//! `PC(k, l)`: construction, positional colorings, efficient dominating sets
//! (perfect codes) and mechanical verification of their structure.

pub mod builder;
pub mod chains;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod export;
pub mod graph;
pub mod multiset;
pub mod report;
pub mod structure;
pub mod suites;

pub use builder::{build_graph, pancake_graph, star_graph, GeneratorFamily, PermGraph};
pub use error::{Error, Result};
pub use graph::{analyze, Graph, Metrics};
pub use multiset::{enumerate_vertices, MString, Params};
