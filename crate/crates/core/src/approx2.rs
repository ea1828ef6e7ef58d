//! Factor-2 approximation for the connected safe number of a weighted tree.
//!
//! An integer `W` is *r-nice* if some connected `S ∋ r` has
//! `W ≤ w(S) ≤ W + w_max` and every component of `T − S` weighs at most
//! `W`. Such an `S` is safe. The smallest nice integer `W_min` is at most
//! `cs(T, w)`, so its certificate weighs at most `2 cs(T, w)`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::graph::{Graph, RootedView, Vertex, VertexSet, Weight, WeightedTree};
use crate::Solution;

/// Vertices in non-increasing subtree weight, every prefix connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightOrder {
    pub root: Vertex,
    pub order: Vec<Vertex>,
    /// `c[i]` is the subtree weight of `order[i]`.
    pub c: Vec<Weight>,
    /// 1-based positions `i` with `c(u(i)) > c(u(i+1))`.
    pub breaks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceCertificate {
    /// The r-nice integer W.
    pub bound: Weight,
    pub root: Vertex,
    pub order: WeightOrder,
    /// Length of the order prefix the certificate was grown from.
    pub prefix_len: usize,
    pub set: VertexSet,
    pub set_weight: Weight,
}

/// Elementary step counter for complexity checks.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCount(pub u64);

fn weight_order(tree: &WeightedTree, rooted: &RootedView, ops: &mut OpCount) -> WeightOrder {
    let n = tree.order();
    let sub = rooted.subtree_weights(|v| tree.weight(v));
    ops.0 += 2 * n as u64;
    let root = rooted.root();
    let mut heap = BinaryHeap::new();
    heap.push((sub[root], Reverse(root)));
    let mut order = Vec::with_capacity(n);
    while let Some((_, Reverse(u))) = heap.pop() {
        order.push(u);
        ops.0 += 1;
        for &v in rooted.children(u) {
            heap.push((sub[v], Reverse(v)));
            ops.0 += 1;
        }
    }
    let c: Vec<Weight> = order.iter().map(|&v| sub[v]).collect();
    let breaks = (1..n).filter(|&i| c[i - 1] > c[i]).collect();
    ops.0 += n as u64;
    WeightOrder {
        root,
        order,
        c,
        breaks,
    }
}

/// Order `u(1..n)` for the tree rooted at `root`; ties in subtree weight go
/// to the smaller id among the vertices whose parent is already placed.
pub fn subtree_weight_order(tree: &WeightedTree, root: Vertex) -> WeightOrder {
    weight_order(tree, &tree.rooted(root), &mut OpCount::default())
}

/// The smallest r-nice integer and a certificate for it. Requires w(T) > 0.
pub fn smallest_r_nice(tree: &WeightedTree, root: Vertex) -> NiceCertificate {
    smallest_r_nice_counted(tree, root, &mut OpCount::default())
}

fn smallest_r_nice_counted(tree: &WeightedTree, root: Vertex, ops: &mut OpCount) -> NiceCertificate {
    let n = tree.order();
    let rooted = tree.rooted(root);
    ops.0 += n as u64;
    let ord = weight_order(tree, &rooted, ops);
    let w_max = tree.max_weight() as i128;

    // prefix[i] = w(u(1)) + ... + w(u(i))
    let mut prefix = vec![0i128; n + 1];
    for i in 1..=n {
        prefix[i] = prefix[i - 1] + tree.weight(ord.order[i - 1]) as i128;
    }
    let mut cut_points = Vec::with_capacity(ord.breaks.len() + 2);
    cut_points.push(1);
    cut_points.extend(ord.breaks.iter().copied());
    cut_points.push(n);

    let mut best: Option<(i128, usize)> = None;
    for &i in &cut_points {
        ops.0 += 1;
        let next_c = if i < n { ord.c[i] as i128 } else { i128::MIN };
        let term = next_c.max(prefix[i] - w_max);
        if best.is_none_or(|(b, _)| term < b) {
            best = Some((term, i));
        }
    }
    let (bound, prefix_len) = best.expect("at least one cut point");
    let bound = bound.max(0) as Weight;

    let mut in_set = vec![false; n + 1];
    let mut weight: Weight = 0;
    for &v in &ord.order[..prefix_len] {
        in_set[v] = true;
        weight += tree.weight(v);
    }
    let mut frontier: Vec<Vertex> = ord.order[..prefix_len]
        .iter()
        .flat_map(|&u| rooted.children(u).iter().copied())
        .filter(|&v| !in_set[v])
        .collect();
    frontier.sort_unstable();
    let mut queue: VecDeque<Vertex> = frontier.into();
    while weight < bound {
        let v = queue.pop_front().expect("w(T) ≥ W_r, so the frontier cannot run dry");
        ops.0 += 1;
        in_set[v] = true;
        weight += tree.weight(v);
        queue.extend(rooted.children(v).iter().copied());
    }
    NiceCertificate {
        bound,
        root,
        order: ord,
        prefix_len,
        set: (1..=n).filter(|&v| in_set[v]).collect(),
        set_weight: weight,
    }
}

/// Output of [`two_approx_detailed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoApprox {
    pub solution: Solution,
    /// Smallest nice integer; `None` when w(T) = 0.
    pub w_min: Option<Weight>,
    pub certificate: Option<NiceCertificate>,
    pub ops: OpCount,
}

/// Connected w-safe set of weight at most `2 cs(T, w)`.
pub fn two_approx(tree: &WeightedTree) -> Solution {
    two_approx_detailed(tree).solution
}

pub fn two_approx_detailed(tree: &WeightedTree) -> TwoApprox {
    let mut ops = OpCount::default();
    if tree.total_weight() == 0 {
        return TwoApprox {
            solution: Solution {
                weight: 0,
                set: VertexSet::empty(),
            },
            w_min: None,
            certificate: None,
            ops,
        };
    }
    let mut best: Option<NiceCertificate> = None;
    for r in 1..=tree.order() {
        let cert = smallest_r_nice_counted(tree, r, &mut ops);
        if best.as_ref().is_none_or(|b| cert.bound < b.bound) {
            best = Some(cert);
        }
    }
    let cert = best.expect("tree has a vertex");
    TwoApprox {
        solution: Solution {
            weight: cert.set_weight,
            set: cert.set.clone(),
        },
        w_min: Some(cert.bound),
        certificate: Some(cert),
        ops,
    }
}
