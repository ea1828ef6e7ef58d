//! Trees, simple graphs, vertex sets and the safety verifier.
//!
//! Vertices are dense 1-based ids. Per-vertex scratch arrays inside this
//! crate are sized `n + 1` and indexed directly by id; slot 0 is unused.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Weight = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("expected {expected} {what}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("vertex id {vertex} is outside 1..={n}")]
    BadVertexId { vertex: Vertex, n: usize },
    #[error("edge {0}-{1} closes a cycle")]
    Cyclic(Vertex, Vertex),
    #[error("vertex {0} is not reachable from vertex 1")]
    Disconnected(Vertex),
    #[error("vertex {vertex} has negative weight {weight}")]
    NegativeWeight { vertex: Vertex, weight: i64 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0}-{1} appears twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("total weight does not fit in 64 bits")]
    WeightOverflow,
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

/// Undirected graph with 1-based vertex ids.
pub trait Graph {
    fn order(&self) -> usize;
    /// Neighbors of `v` in ascending id order.
    fn neighbors(&self, v: Vertex) -> &[Vertex];

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.order() {
            Err(GraphError::BadVertexId {
                vertex: v,
                n: self.order(),
            })
        } else {
            Ok(())
        }
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 1..=self.order() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

fn sorted_adjacency(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<Vec<Vertex>> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

fn checked_total(weights: &[Weight]) -> Result<Weight> {
    weights
        .iter()
        .try_fold(0u64, |acc, &w| acc.checked_add(w))
        .ok_or(GraphError::WeightOverflow)
}

/// A tree with one non-negative integer weight per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    weights: Vec<Weight>,
    total: Weight,
}

impl WeightedTree {
    /// `weights[i]` is the weight of vertex `i + 1`.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)], weights: Vec<Weight>) -> Result<Self> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if weights.len() != n {
            return Err(GraphError::LengthMismatch {
                what: "weights",
                expected: n,
                found: weights.len(),
            });
        }
        let mut dsu = Dsu::new(n + 1);
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::BadVertexId { vertex: x, n });
                }
            }
            if !dsu.union(u, v) {
                return Err(GraphError::Cyclic(u, v));
            }
        }
        if let Some(v) = (2..=n).find(|&v| dsu.find(v) != dsu.find(1)) {
            return Err(GraphError::Disconnected(v));
        }
        let total = checked_total(&weights)?;
        Ok(Self {
            adj: sorted_adjacency(n, edges),
            edges: edges.to_vec(),
            weights,
            total,
        })
    }

    pub fn weight(&self, v: Vertex) -> Weight {
        self.weights[v - 1]
    }

    /// Weights in vertex order (`[i]` belongs to vertex `i + 1`).
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn total_weight(&self) -> Weight {
        self.total
    }

    pub fn max_weight(&self) -> Weight {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    pub fn min_weight(&self) -> Weight {
        self.weights.iter().copied().min().unwrap_or(0)
    }

    pub fn weight_of(&self, set: &VertexSet) -> Weight {
        set.iter().map(|v| self.weight(v)).sum()
    }

    /// Edges in the order they were supplied.
    pub fn edge_list(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Same topology, different weights.
    pub fn with_weights(&self, weights: Vec<Weight>) -> Result<Self> {
        Self::new(self.order(), &self.edges, weights)
    }

    pub fn rooted(&self, root: Vertex) -> RootedView {
        RootedView::new(self, root)
    }

    pub fn as_graph(&self) -> SimpleGraph {
        SimpleGraph {
            adj: self.adj.clone(),
            edges: self.edges.clone(),
        }
    }
}

impl Graph for WeightedTree {
    fn order(&self) -> usize {
        self.weights.len()
    }

    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }
}

/// Validating builder over signed input, as read from files.
pub fn build_tree(n: usize, edges: &[(Vertex, Vertex)], w: &[i64]) -> Result<WeightedTree> {
    WeightedTree::new(n, edges, unsigned_weights(w)?)
}

pub fn unsigned_weights(w: &[i64]) -> Result<Vec<Weight>> {
    w.iter()
        .enumerate()
        .map(|(i, &x)| {
            u64::try_from(x).map_err(|_| GraphError::NegativeWeight {
                vertex: i + 1,
                weight: x,
            })
        })
        .collect()
}

/// The pair (w⁻, w⁺) of a generalized instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualWeights {
    minus: Vec<Weight>,
    plus: Vec<Weight>,
}

impl DualWeights {
    pub fn new(n: usize, minus: Vec<Weight>, plus: Vec<Weight>) -> Result<Self> {
        for (what, len) in [("w- entries", minus.len()), ("w+ entries", plus.len())] {
            if len != n {
                return Err(GraphError::LengthMismatch {
                    what,
                    expected: n,
                    found: len,
                });
            }
        }
        checked_total(&minus)?;
        checked_total(&plus)?;
        Ok(Self { minus, plus })
    }

    /// w⁻ = w⁺ = w.
    pub fn uniform(tree: &WeightedTree) -> Self {
        Self {
            minus: tree.weights().to_vec(),
            plus: tree.weights().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.minus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minus.is_empty()
    }

    pub fn minus(&self, v: Vertex) -> Weight {
        self.minus[v - 1]
    }

    pub fn plus(&self, v: Vertex) -> Weight {
        self.plus[v - 1]
    }

    pub fn minus_weights(&self) -> &[Weight] {
        &self.minus
    }

    pub fn plus_weights(&self) -> &[Weight] {
        &self.plus
    }

    pub fn minus_of(&self, set: &VertexSet) -> Weight {
        set.iter().map(|v| self.minus(v)).sum()
    }

    pub fn plus_of(&self, set: &VertexSet) -> Weight {
        set.iter().map(|v| self.plus(v)).sum()
    }

    pub fn total_minus(&self) -> Weight {
        self.minus.iter().sum()
    }

    pub fn total_plus(&self) -> Weight {
        self.plus.iter().sum()
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::BadVertexId { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
        }
        let adj = sorted_adjacency(n, edges);
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self {
            adj,
            edges: edges.to_vec(),
        })
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_list(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

impl Graph for SimpleGraph {
    fn order(&self) -> usize {
        self.adj.len() - 1
    }

    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn min(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    /// Membership flags of length `n + 1`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n + 1];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn check_in<G: Graph + ?Sized>(&self, g: &G) -> Result<()> {
        match self.0.last() {
            Some(&v) if v > g.order() => g.check_vertex(v),
            _ if self.0.first() == Some(&0) => g.check_vertex(0),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Labels the vertices with `inside[v] == true` by connected component of
/// the induced subgraph. Components are numbered by ascending minimum id;
/// vertices outside get `usize::MAX`.
pub(crate) fn label_components<G: Graph + ?Sized>(g: &G, inside: &[bool]) -> (Vec<usize>, usize) {
    let n = g.order();
    let mut label = vec![usize::MAX; n + 1];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 1..=n {
        if !inside[start] || label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if inside[v] && label[v] == usize::MAX {
                    label[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn group(label: &[usize], count: usize) -> Vec<VertexSet> {
    let mut parts = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        if l != usize::MAX {
            parts[l].push(v);
        }
    }
    parts.into_iter().map(VertexSet).collect()
}

/// Components of G − S, ordered by minimum vertex id.
pub fn components_of_complement<G: Graph + ?Sized>(g: &G, s: &VertexSet) -> Result<Vec<VertexSet>> {
    s.check_in(g)?;
    let outside: Vec<bool> = s.mask(g.order()).into_iter().map(|x| !x).collect();
    let mut outside = outside;
    outside[0] = false;
    let (label, count) = label_components(g, &outside);
    Ok(group(&label, count))
}

/// Components of G[S], ordered by minimum vertex id.
pub fn components_of_induced<G: Graph + ?Sized>(g: &G, s: &VertexSet) -> Result<Vec<VertexSet>> {
    s.check_in(g)?;
    let (label, count) = label_components(g, &s.mask(g.order()));
    Ok(group(&label, count))
}

/// True iff G[S] has at most one component. The empty set counts as connected.
pub fn is_connected_set<G: Graph + ?Sized>(g: &G, s: &VertexSet) -> Result<bool> {
    Ok(components_of_induced(g, s)?.len() <= 1)
}

/// A component C of G[S] and an adjacent component D of G − S with
/// w⁻(C) < w⁺(D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub inside: VertexSet,
    pub outside: VertexSet,
    pub inside_weight: Weight,
    pub outside_weight: Weight,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C={} D={} {}<{}",
            self.inside, self.outside, self.inside_weight, self.outside_weight
        )
    }
}

/// First violated (C, D) pair, scanning C then D by minimum id.
///
/// The empty set is treated as a zero-weight piece facing every component
/// of G, so it passes only when the whole graph has w⁺-weight zero.
pub fn safety_violation<G, F1, F2>(g: &G, minus: F1, plus: F2, s: &VertexSet) -> Result<Option<Violation>>
where
    G: Graph + ?Sized,
    F1: Fn(Vertex) -> Weight,
    F2: Fn(Vertex) -> Weight,
{
    let outside_parts = components_of_complement(g, s)?;
    if s.is_empty() {
        return Ok(outside_parts.into_iter().find_map(|d| {
            let wd: Weight = d.iter().map(&plus).sum();
            (wd > 0).then(|| Violation {
                inside: VertexSet::empty(),
                outside: d,
                inside_weight: 0,
                outside_weight: wd,
            })
        }));
    }
    let n = g.order();
    let (in_label, in_count) = label_components(g, &s.mask(n));
    let mut out_label = vec![usize::MAX; n + 1];
    for (i, d) in outside_parts.iter().enumerate() {
        for v in d.iter() {
            out_label[v] = i;
        }
    }
    let mut in_w = vec![0 as Weight; in_count];
    for v in 1..=n {
        if in_label[v] != usize::MAX {
            in_w[in_label[v]] += minus(v);
        }
    }
    let out_w: Vec<Weight> = outside_parts
        .iter()
        .map(|d| d.iter().map(&plus).sum())
        .collect();

    let mut worst: Option<(usize, usize)> = None;
    for u in 1..=n {
        let c = in_label[u];
        if c == usize::MAX {
            continue;
        }
        for &v in g.neighbors(u) {
            let d = out_label[v];
            if d != usize::MAX && in_w[c] < out_w[d] && worst.is_none_or(|w| (c, d) < w) {
                worst = Some((c, d));
            }
        }
    }
    Ok(worst.map(|(c, d)| {
        let inside = group(&in_label, in_count).swap_remove(c);
        Violation {
            inside,
            outside: outside_parts[d].clone(),
            inside_weight: in_w[c],
            outside_weight: out_w[d],
        }
    }))
}

/// (w⁻, w⁺)-safety of `s` in `tree`.
pub fn is_dual_safe(tree: &WeightedTree, dw: &DualWeights, s: &VertexSet) -> Result<bool> {
    if dw.len() != tree.order() {
        return Err(GraphError::LengthMismatch {
            what: "dual weight entries",
            expected: tree.order(),
            found: dw.len(),
        });
    }
    Ok(safety_violation(tree, |v| dw.minus(v), |v| dw.plus(v), s)?.is_none())
}

/// Plain w-safety, for any graph and weight slice (`w[i]` ↔ vertex `i + 1`).
pub fn is_safe<G: Graph + ?Sized>(g: &G, w: &[Weight], s: &VertexSet) -> Result<bool> {
    let f = |v: Vertex| w[v - 1];
    Ok(safety_violation(g, f, f, s)?.is_none())
}

/// A tree rooted at `root` with children in ascending id order.
#[derive(Debug, Clone)]
pub struct RootedView {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    bfs: Vec<Vertex>,
}

impl RootedView {
    pub fn new<G: Graph + ?Sized>(g: &G, root: Vertex) -> Self {
        let n = g.order();
        let mut parent = vec![None; n + 1];
        let mut children = vec![Vec::new(); n + 1];
        let mut seen = vec![false; n + 1];
        let mut bfs = Vec::with_capacity(n);
        seen[root] = true;
        bfs.push(root);
        let mut head = 0;
        while head < bfs.len() {
            let u = bfs[head];
            head += 1;
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    children[u].push(v);
                    bfs.push(v);
                }
            }
        }
        Self {
            root,
            parent,
            children,
            bfs,
        }
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    /// Breadth-first order from the root.
    pub fn bfs_order(&self) -> &[Vertex] {
        &self.bfs
    }

    /// c(u) = f(T_u) for every u; index 0 unused.
    pub fn subtree_weights<F: Fn(Vertex) -> Weight>(&self, f: F) -> Vec<Weight> {
        let mut c = vec![0; self.parent.len()];
        for &u in self.bfs.iter().rev() {
            c[u] += f(u);
            if let Some(p) = self.parent[u] {
                c[p] += c[u];
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t1() -> WeightedTree {
        WeightedTree::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], vec![2, 1, 3, 1, 2]).unwrap()
    }

    #[test]
    fn build_tree_cases() {
        let single = build_tree(1, &[], &[5]).unwrap();
        assert_eq!(single.order(), 1);
        assert_eq!(single.total_weight(), 5);
        assert_eq!(t1().total_weight(), 9);
        assert_eq!(
            build_tree(3, &[(1, 2), (2, 3), (1, 3)], &[1, 1, 1]),
            Err(GraphError::Cyclic(1, 3))
        );
        assert_eq!(
            build_tree(3, &[(1, 2)], &[1, 1, 1]),
            Err(GraphError::Disconnected(3))
        );
        assert_eq!(
            build_tree(2, &[(1, 4)], &[1, 1]),
            Err(GraphError::BadVertexId { vertex: 4, n: 2 })
        );
        assert_eq!(
            build_tree(2, &[(1, 2)], &[1, -3]),
            Err(GraphError::NegativeWeight {
                vertex: 2,
                weight: -3
            })
        );
        assert_eq!(
            WeightedTree::new(2, &[(1, 2)], vec![u64::MAX, 1]),
            Err(GraphError::WeightOverflow)
        );
        assert_eq!(build_tree(0, &[], &[]), Err(GraphError::Empty));
    }

    #[test]
    fn complement_components() {
        let t = t1();
        assert_eq!(
            components_of_complement(&t, &VertexSet::from([3])).unwrap(),
            vec![VertexSet::from([1, 2]), VertexSet::from([4, 5])]
        );
        assert_eq!(
            components_of_complement(&t, &VertexSet::empty()).unwrap(),
            vec![VertexSet::full(5)]
        );
        assert!(components_of_complement(&t, &VertexSet::full(5))
            .unwrap()
            .is_empty());
        assert!(matches!(
            components_of_complement(&t, &VertexSet::from([6])),
            Err(GraphError::BadVertexId { vertex: 6, .. })
        ));
    }

    #[test]
    fn connectivity() {
        let t = t1();
        assert!(is_connected_set(&t, &VertexSet::from([1, 2, 3])).unwrap());
        assert!(!is_connected_set(&t, &VertexSet::from([1, 3])).unwrap());
        assert!(is_connected_set(&t, &VertexSet::empty()).unwrap());
    }

    #[test]
    fn dual_safety_examples() {
        let t = t1();
        let dw = DualWeights::uniform(&t);
        assert!(is_dual_safe(&t, &dw, &VertexSet::from([3])).unwrap());
        assert!(!is_dual_safe(&t, &dw, &VertexSet::from([1])).unwrap());
        assert!(is_dual_safe(&t, &dw, &VertexSet::full(5)).unwrap());
        assert!(!is_dual_safe(&t, &dw, &VertexSet::empty()).unwrap());

        let v = safety_violation(&t, |v| t.weight(v), |v| t.weight(v), &VertexSet::from([1]))
            .unwrap()
            .unwrap();
        assert_eq!(v.to_string(), "C={1} D={2,3,4,5} 2<7");
    }

    #[test]
    fn empty_set_safe_only_for_zero_weight() {
        let z = WeightedTree::new(3, &[(1, 2), (2, 3)], vec![0, 0, 0]).unwrap();
        assert!(is_dual_safe(&z, &DualWeights::uniform(&z), &VertexSet::empty()).unwrap());
    }

    #[test]
    fn supersets_of_safe_sets_are_not_automatically_safe() {
        // Path 1-2-3-4, weights (1,4,3,1). {2} is connected and safe, yet
        // adding vertex 4 creates the piece {4} facing {3} (1 < 3).
        let t = WeightedTree::new(4, &[(1, 2), (2, 3), (3, 4)], vec![1, 4, 3, 1]).unwrap();
        let dw = DualWeights::uniform(&t);
        assert!(is_dual_safe(&t, &dw, &VertexSet::from([2])).unwrap());
        assert!(!is_dual_safe(&t, &dw, &VertexSet::from([2, 4])).unwrap());
        // Connected growth keeps it safe: outside pieces only shrink.
        assert!(is_dual_safe(&t, &dw, &VertexSet::from([2, 3])).unwrap());
    }

    #[test]
    fn rooted_view_subtree_sums() {
        let t = t1();
        let r = t.rooted(3);
        assert_eq!(r.children(3), &[2, 4]);
        assert_eq!(r.parent(3), None);
        let c = r.subtree_weights(|v| t.weight(v));
        assert_eq!(&c[1..], &[2, 3, 9, 3, 2]);
    }

    #[test]
    fn simple_graph_validation() {
        assert_eq!(SimpleGraph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            SimpleGraph::new(2, &[(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        let k3 = SimpleGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(k3.has_edge(3, 1));
        assert_eq!(k3.edges(), vec![(1, 2), (1, 3), (2, 3)]);
    }
}
