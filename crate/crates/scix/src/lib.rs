//! Strong chromatic index and maximum induced matchings on structured graph
//! classes.
//!
//! The class-specific algorithms — the tree/co-tree formulas and the
//! decomposition-tree recursions for tree-cographs, the greedy trapezoid
//! coloring for permutation graphs, the clique sweep for bipartite
//! permutation graphs, and the `L(G)^2` clique route for chordal bipartite
//! graphs — are all validated against an exact brute-force oracle built on
//! `L(G)^2` with exact clique, coloring and independent-set solvers.
//!
//! Everything is pure and deterministic; graphs are immutable after
//! construction and safe to share across threads.

pub mod bitset;
pub mod chordal_bipartite;
pub mod cli;
pub mod graph;
pub mod linegraph;
pub mod oracle;
pub mod pattern;
pub mod permutation;
pub mod solver;
pub mod testkit;
pub mod tree_cograph;

pub use graph::{Bipartition, EdgeId, Graph, Side, TwoColoring};
pub use linegraph::{line_graph, line_graph_square, EdgeColoring, EdgeGraph, EdgeSet};
pub use permutation::Permutation;
pub use tree_cograph::DecompTree;
