//! Minimum-weight connected safe sets.
//!
//! A vertex set `S` of a weighted graph is *safe* when every component of
//! `G[S]` weighs at least as much as every component of `G − S` it touches.
//! This crate finds light connected safe sets in vertex-weighted trees
//! (exact pseudopolynomial DP, a 2-approximation, a PTAS and a scaled
//! scheme for bounded weight ratios) and small connected safe sets in
//! unweighted block graphs. Exhaustive oracles and seeded instance
//! generators back the test suites.

pub mod approx2;
pub mod blockgraph;
pub mod exact;
pub mod fptas;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod ptas;
pub mod rational;

pub use graph::{DualWeights, Graph, GraphError, SimpleGraph, Vertex, VertexSet, Weight, WeightedTree};
pub use rational::Rational;

/// A vertex set together with its weight under the weight function the
/// solver optimized (w⁻ for dual-weight instances).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub weight: Weight,
    pub set: VertexSet,
}
