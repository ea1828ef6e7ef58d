//! Exhaustive reference solvers for small instances.
//!
//! Everything here works on 64-bit vertex masks (bit `v - 1` is vertex
//! `v`) and stays deliberately naive.

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet, Weight};

pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {n} vertices, oracle cap is {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
}

/// Best set found by an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOptimum {
    pub weight: Weight,
    pub set: VertexSet,
}

struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
}

impl MaskGraph {
    fn new<G: Graph + ?Sized>(g: &G, cap: usize) -> Result<Self, OracleError> {
        let n = g.order();
        if n > cap.min(63) {
            return Err(OracleError::InstanceTooLarge { n, cap });
        }
        let adj = (1..=n)
            .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | bit(v)))
            .collect();
        Ok(Self { n, adj })
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[i];
        }
        out & !set
    }

    /// Components of the subgraph induced by `within`, lowest bit first.
    fn components(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = within;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            loop {
                let grown = comp | (self.neighborhood(comp) & within);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    fn is_connected(&self, set: u64) -> bool {
        set == 0 || self.components(set).len() == 1
    }
}

fn bit(v: Vertex) -> u64 {
    1u64 << (v - 1)
}

fn mask_weight(mask: u64, w: &[Weight]) -> Weight {
    let mut total = 0;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += w[i];
    }
    total
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn mask_is_safe(g: &MaskGraph, set: u64, minus: &[Weight], plus: &[Weight]) -> bool {
    let outside = g.components(g.full() & !set);
    if set == 0 {
        return outside.iter().all(|&d| mask_weight(d, plus) == 0);
    }
    let inside = g.components(set);
    inside.iter().all(|&c| {
        let wc = mask_weight(c, minus);
        let nc = g.neighborhood(c);
        outside
            .iter()
            .filter(|&&d| d & nc != 0)
            .all(|&d| wc >= mask_weight(d, plus))
    })
}

/// Calls `visit` on every connected vertex mask, `0` first. Each set is
/// produced exactly once: a set is grown from its minimum vertex by adding
/// frontier vertices, and a frontier vertex that has been branched on is
/// excluded from the later sibling branches.
fn for_each_connected_mask<F: FnMut(u64)>(g: &MaskGraph, mut visit: F) {
    visit(0);
    for root in 0..g.n {
        let below = (1u64 << root) - 1;
        let start = 1u64 << root;
        extend(g, start, g.adj[root] & !below & !start, below, &mut visit);
    }
}

fn extend<F: FnMut(u64)>(g: &MaskGraph, set: u64, frontier: u64, excluded: u64, visit: &mut F) {
    visit(set);
    let mut frontier = frontier;
    let mut excluded = excluded;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        let vb = 1u64 << v;
        frontier &= !vb;
        let grown = set | vb;
        let fresh = g.adj[v] & !grown & !excluded & !frontier;
        extend(g, grown, frontier | fresh, excluded, visit);
        excluded |= vb;
    }
}

/// Every connected vertex subset of `g` (including ∅), in a fixed order.
pub fn enumerate_connected_sets<G: Graph + ?Sized>(g: &G, cap: usize) -> Result<Vec<VertexSet>, OracleError> {
    let mg = MaskGraph::new(g, cap)?;
    let mut out = Vec::new();
    for_each_connected_mask(&mg, |m| out.push(to_set(m)));
    Ok(out)
}

fn better(weight: Weight, mask: u64, best: &Option<(Weight, u64)>) -> bool {
    match best {
        None => true,
        Some((bw, bm)) => {
            (weight, mask.count_ones()).cmp(&(*bw, bm.count_ones())).then_with(|| to_set(mask).cmp(&to_set(*bm)))
                == std::cmp::Ordering::Less
        }
    }
}

/// Minimum w⁻-weight connected (w⁻, w⁺)-safe set. `minus[i]`/`plus[i]`
/// belong to vertex `i + 1`. Ties go to fewer vertices, then to the
/// lexicographically smaller id list.
pub fn brute_connected_safe_min<G: Graph + ?Sized>(
    g: &G,
    minus: &[Weight],
    plus: &[Weight],
    cap: usize,
) -> Result<OracleOptimum, OracleError> {
    let mg = MaskGraph::new(g, cap)?;
    let mut best: Option<(Weight, u64)> = None;
    for_each_connected_mask(&mg, |m| {
        let w = mask_weight(m, minus);
        if better(w, m, &best) && mask_is_safe(&mg, m, minus, plus) {
            best = Some((w, m));
        }
    });
    let (weight, mask) = best.expect("the full vertex set is always safe");
    Ok(OracleOptimum {
        weight,
        set: to_set(mask),
    })
}

/// Minimum-weight w-safe set over all 2ⁿ subsets (connectivity not required).
pub fn brute_safe_min<G: Graph + ?Sized>(g: &G, w: &[Weight], cap: usize) -> Result<OracleOptimum, OracleError> {
    let mg = MaskGraph::new(g, cap)?;
    let mut best: Option<(Weight, u64)> = None;
    for m in 0..=mg.full() {
        let wm = mask_weight(m, w);
        if better(wm, m, &best) && mask_is_safe(&mg, m, w, w) {
            best = Some((wm, m));
        }
    }
    let (weight, mask) = best.expect("the full vertex set is always safe");
    Ok(OracleOptimum {
        weight,
        set: to_set(mask),
    })
}

/// Whether `set` is connected, by mask flood fill (independent of `graph`).
pub fn brute_is_connected<G: Graph + ?Sized>(g: &G, set: &VertexSet) -> Result<bool, OracleError> {
    let mg = MaskGraph::new(g, 63)?;
    Ok(mg.is_connected(set.iter().fold(0, |m, v| m | bit(v))))
}

/// Safety by mask arithmetic (independent of [`crate::graph::safety_violation`]).
pub fn brute_is_safe<G: Graph + ?Sized>(
    g: &G,
    minus: &[Weight],
    plus: &[Weight],
    set: &VertexSet,
) -> Result<bool, OracleError> {
    let mg = MaskGraph::new(g, 63)?;
    Ok(mask_is_safe(&mg, set.iter().fold(0, |m, v| m | bit(v)), minus, plus))
}

/// Whether some subsequence of `c` sums to exactly `k`.
pub fn subset_sum_feasible(c: &[u64], k: u64) -> bool {
    let Ok(k) = usize::try_from(k) else {
        return false;
    };
    let mut reach = vec![false; k + 1];
    reach[0] = true;
    for &x in c {
        let Ok(x) = usize::try_from(x) else { continue };
        if x > k {
            continue;
        }
        for t in (x..=k).rev() {
            if reach[t - x] {
                reach[t] = true;
            }
        }
    }
    reach[k]
}
