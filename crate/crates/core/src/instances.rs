//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64`; integer
//! ranges are drawn by rejection sampling on `next_u64`, so a given
//! `(parameters, seed)` yields the same instance on every platform and
//! every compatible `rand_chacha` release.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::blockgraph::block_decomposition;
use crate::graph::{Graph, GraphError, SimpleGraph, Vertex, Weight, WeightedTree};

/// Recorded in generated files.
pub const GENERATOR: &str = "chacha8 v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `lo..=hi`.
    pub fn uniform(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi);
        let span = (hi - lo).wrapping_add(1);
        if span == 0 {
            return self.0.next_u64();
        }
        let zone = u64::MAX - (u64::MAX - span + 1) % span;
        loop {
            let x = self.0.next_u64();
            if x <= zone {
                return lo + x % span;
            }
        }
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.uniform(0, len as u64 - 1) as usize
    }
}

fn prufer_edges(seq: &[Vertex], n: usize) -> Vec<(Vertex, Vertex)> {
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    edges
}

/// Uniform labeled tree on `n` vertices (Prüfer decoding) with weights
/// uniform in `w_min..=w_max`.
pub fn random_tree(n: usize, seed: u64, w_max: Weight, w_min: Weight) -> Result<WeightedTree, InstanceError> {
    if n == 0 {
        return Err(InstanceError::BadRange("n must be at least 1".into()));
    }
    if w_min > w_max {
        return Err(InstanceError::BadRange(format!("w_min {w_min} > w_max {w_max}")));
    }
    let mut rng = SeededRng::new(seed);
    let edges = match n {
        1 => Vec::new(),
        2 => vec![(1, 2)],
        _ => {
            let seq: Vec<Vertex> = (0..n - 2).map(|_| 1 + rng.index(n)).collect();
            prufer_edges(&seq, n)
        }
    };
    let weights = (0..n).map(|_| rng.uniform(w_min, w_max)).collect();
    Ok(WeightedTree::new(n, &edges, weights)?)
}

/// Star with center 1 of weight 1 and leaves `2..` weighted `c₁, …, c_m, K+1`.
/// Requires `max c < K < Σc` and `2 min c ≥ max c`.
pub fn subset_sum_star(c: &[u64], k: u64) -> Result<WeightedTree, InstanceError> {
    let fail = |m: String| Err(InstanceError::PreconditionViolated(m));
    if c.is_empty() || c.contains(&0) {
        return fail("c must be a nonempty sequence of positive integers".into());
    }
    let max = *c.iter().max().unwrap();
    let min = *c.iter().min().unwrap();
    let sum: u128 = c.iter().map(|&x| x as u128).sum();
    if max >= k {
        return fail(format!("max c = {max} must be < K = {k}"));
    }
    if k as u128 >= sum {
        return fail(format!("K = {k} must be < sum c = {sum}"));
    }
    if 2 * min as u128 > u64::MAX as u128 || 2 * min < max {
        return fail(format!("2 * min c = {} must be >= max c = {max}", 2 * min as u128));
    }
    let n = c.len() + 2;
    let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
    let mut weights = Vec::with_capacity(n);
    weights.push(1);
    weights.extend_from_slice(c);
    weights.push(k + 1);
    let tree = WeightedTree::new(n, &edges, weights)?;
    assert!(
        tree.total_weight() as u128 <= 4 * n as u128 * min as u128,
        "total weight exceeds 4 n min c"
    );
    Ok(tree)
}

/// A random restricted subset-sum instance `(c, K)` with `len` entries
/// bounded by `max_c`, suitable for [`subset_sum_star`].
pub fn random_subset_sum(len: usize, max_c: u64, seed: u64) -> Result<(Vec<u64>, u64), InstanceError> {
    if len < 2 || max_c < 2 {
        return Err(InstanceError::BadRange("need len >= 2 and max_c >= 2".into()));
    }
    let mut rng = SeededRng::new(seed);
    loop {
        let lo = rng.uniform(1, max_c);
        let hi = (2 * lo).min(max_c);
        let c: Vec<u64> = (0..len).map(|_| rng.uniform(lo, hi)).collect();
        let max = *c.iter().max().unwrap();
        let sum: u64 = c.iter().sum();
        if max + 1 <= sum - 1 {
            let k = rng.uniform(max + 1, sum - 1);
            return Ok((c, k));
        }
    }
}

/// Cliques of the given sizes, each new one glued at a uniformly chosen
/// existing vertex. Vertex ids are assigned in creation order.
pub fn random_block_graph(sizes: &[usize], seed: u64) -> Result<SimpleGraph, InstanceError> {
    if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
        return Err(InstanceError::BadRange("block sizes must be nonempty and at least 2".into()));
    }
    let mut rng = SeededRng::new(seed);
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, &s) in sizes.iter().enumerate() {
        let mut members = Vec::with_capacity(s);
        if i > 0 {
            members.push(1 + rng.index(n));
        }
        while members.len() < s {
            n += 1;
            members.push(n);
        }
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    let g = SimpleGraph::new(n, &edges)?;
    block_decomposition(&g).expect("glued cliques form a block graph");
    Ok(g)
}

/// Random block sizes in `2..=max_block` until the order would exceed `max_n`.
pub fn random_block_sizes(max_n: usize, max_block: usize, seed: u64) -> Vec<usize> {
    assert!(max_n >= 2 && max_block >= 2);
    let mut rng = SeededRng::new(seed);
    let target = rng.uniform(2, max_n as u64) as usize;
    let mut sizes = Vec::new();
    let mut n = 1;
    loop {
        let room = (target + 1 - n).min(max_block);
        if room < 2 {
            break;
        }
        let s = rng.uniform(2, room as u64) as usize;
        sizes.push(s);
        n += s - 1;
    }
    sizes
}

/// Same tree, weights uniform in `base..=M·base`.
pub fn ratio_bounded_weights(tree: &WeightedTree, m: u64, seed: u64, base: Weight) -> Result<WeightedTree, InstanceError> {
    if m == 0 || base == 0 {
        return Err(InstanceError::BadRange("M and base must be at least 1".into()));
    }
    let hi = m
        .checked_mul(base)
        .ok_or_else(|| InstanceError::BadRange("M * base overflows".into()))?;
    let mut rng = SeededRng::new(seed);
    let weights = (0..tree.order()).map(|_| rng.uniform(base, hi)).collect();
    Ok(tree.with_weights(weights)?)
}

/// Independent `(w⁻, w⁺)` pairs uniform in `0..=w_max`.
pub fn random_dual_weights(n: usize, w_max: Weight, seed: u64) -> (Vec<Weight>, Vec<Weight>) {
    let mut rng = SeededRng::new(seed);
    (0..n).map(|_| (rng.uniform(0, w_max), rng.uniform(0, w_max))).unzip()
}
