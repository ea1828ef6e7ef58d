//! Small connected safe sets in unweighted block graphs.
//!
//! Every connected block graph of order `n` and clique number `ω` has a
//! connected safe set of at most `max{⌈n/3⌉, ⌈ω/2⌉}` vertices. When
//! `⌈ω/2⌉` exceeds `⌈n/3⌉` half of a largest block, taken to include its
//! cut vertices, is such a set. Otherwise a local search over connected
//! `⌈n/3⌉`-sets drives the largest outside component down to at most
//! `⌈n/3⌉` vertices.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{is_connected_set, is_safe, label_components, Graph, SimpleGraph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockGraphError {
    #[error("graph is not connected (vertex {0} unreachable from 1)")]
    NotConnected(Vertex),
    #[error("not a block graph: {u} and {v} share a block but are not adjacent")]
    NotBlockGraph { u: Vertex, v: Vertex },
    #[error("local search stalled at largest outside component {largest} > {bound}")]
    SearchStalled { largest: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks sorted by their smallest vertex.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Edges `(block index, cut vertex)` of the block-cut tree.
    pub block_cut_edges: Vec<(usize, Vertex)>,
    pub omega: usize,
}

impl BlockDecomposition {
    /// Cut vertices of the whole graph lying in block `i`.
    pub fn cut_vertices_in(&self, i: usize) -> VertexSet {
        self.blocks[i].iter().filter(|&v| self.cut_vertices.contains(v)).collect()
    }
}

fn biconnected_components(g: &SimpleGraph) -> Vec<VertexSet> {
    let n = g.order();
    let mut disc = vec![0usize; n + 1];
    let mut low = vec![0usize; n + 1];
    let mut timer = 1;
    let mut blocks = Vec::new();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(1, 0, 0)];
    disc[1] = timer;
    low[1] = timer;
    while let Some(top) = stack.last_mut() {
        let (v, p, i) = *top;
        if i < g.neighbors(v).len() {
            top.2 += 1;
            let u = g.neighbors(v)[i];
            if disc[u] == 0 {
                timer += 1;
                disc[u] = timer;
                low[u] = timer;
                edges.push((v, u));
                stack.push((u, v, 0));
            } else if u != p && disc[u] < disc[v] {
                edges.push((v, u));
                low[v] = low[v].min(disc[u]);
            }
            continue;
        }
        stack.pop();
        let Some(&(pv, _, _)) = stack.last() else { break };
        low[pv] = low[pv].min(low[v]);
        if low[v] >= disc[pv] {
            let mut block = Vec::new();
            while let Some(e) = edges.pop() {
                block.extend([e.0, e.1]);
                if e == (pv, v) {
                    break;
                }
            }
            blocks.push(block.into_iter().collect::<VertexSet>());
        }
    }
    blocks
}

pub fn block_decomposition(g: &SimpleGraph) -> Result<BlockDecomposition, BlockGraphError> {
    let n = g.order();
    let (labels, count) = label_components(g, &vec![true; n + 1]);
    if count > 1 {
        let v = (1..=n).find(|&v| labels[v] != labels[1]).expect("more than one component");
        return Err(BlockGraphError::NotConnected(v));
    }
    let mut blocks = if n == 1 {
        vec![VertexSet::from([1])]
    } else {
        biconnected_components(g)
    };
    blocks.sort();
    for b in &blocks {
        let vs = b.as_slice();
        for (i, &u) in vs.iter().enumerate() {
            if let Some(&v) = vs[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return Err(BlockGraphError::NotBlockGraph { u, v });
            }
        }
    }
    let mut membership = vec![0usize; n + 1];
    for b in &blocks {
        for v in b.iter() {
            membership[v] += 1;
        }
    }
    let cut_vertices: VertexSet = (1..=n).filter(|&v| membership[v] >= 2).collect();
    let mut block_cut_edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for v in b.iter().filter(|&v| membership[v] >= 2) {
            block_cut_edges.push((i, v));
        }
    }
    let omega = blocks.iter().map(VertexSet::len).max().unwrap_or(1);
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_cut_edges,
        omega,
    })
}

/// Number of blocks holding at most one cut vertex.
pub fn endblock_count(g: &SimpleGraph) -> Result<usize, BlockGraphError> {
    let d = block_decomposition(g)?;
    Ok((0..d.blocks.len()).filter(|&i| d.cut_vertices_in(i).len() <= 1).count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundBranch {
    /// Half of a largest block.
    LargeBlock,
    /// Local search over `⌈n/3⌉`-sets.
    LocalSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockBound {
    pub set: VertexSet,
    /// `max{⌈n/3⌉, ⌈ω/2⌉}`.
    pub bound: usize,
    pub omega: usize,
    pub branch: BoundBranch,
    /// Whether the exchange moves alone did not reach a safe set and the
    /// steepest-descent search had to finish the job.
    pub used_fallback: bool,
}

/// Connected safe set with at most `max{⌈n/3⌉, ⌈ω/2⌉}` vertices.
pub fn safe_upper_construct(g: &SimpleGraph) -> Result<VertexSet, BlockGraphError> {
    Ok(safe_upper_construct_detailed(g)?.set)
}

pub fn safe_upper_construct_detailed(g: &SimpleGraph) -> Result<BlockBound, BlockGraphError> {
    let d = block_decomposition(g)?;
    let n = g.order();
    let third = n.div_ceil(3);
    let half = d.omega.div_ceil(2);
    let bound = third.max(half);
    let ones = vec![1; n];

    if half > third {
        let i = (0..d.blocks.len())
            .find(|&i| d.blocks[i].len() == d.omega)
            .expect("some block has size omega");
        let cuts = d.cut_vertices_in(i);
        let free = d.blocks[i].iter().filter(|&v| !cuts.contains(v));
        let set: VertexSet = cuts.iter().chain(free).take(half).collect();
        assert!(
            set.is_subset(&d.blocks[i]) && cuts.is_subset(&set),
            "a largest block has at most half its size in cut vertices"
        );
        gate(g, &ones, &set, bound);
        return Ok(BlockBound {
            set,
            bound,
            omega: d.omega,
            branch: BoundBranch::LargeBlock,
            used_fallback: false,
        });
    }

    let search = Search::new(g, third);
    let (set, used_fallback) = search.run()?;
    gate(g, &ones, &set, bound);
    Ok(BlockBound {
        set,
        bound,
        omega: d.omega,
        branch: BoundBranch::LocalSearch,
        used_fallback,
    })
}

fn gate(g: &SimpleGraph, ones: &[u64], set: &VertexSet, bound: usize) {
    assert!(set.len() <= bound, "set exceeds the size bound");
    assert!(is_connected_set(g, set).expect("ids in range"), "set is not connected");
    assert!(is_safe(g, ones, set).expect("ids in range"), "set is not safe");
}

/// (largest outside component, sum of squared component sizes)
type Score = (usize, usize);

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    size: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph, size: usize) -> Self {
        Self { g, n: g.order(), size }
    }

    fn run(&self) -> Result<(VertexSet, bool), BlockGraphError> {
        let ecc = self.eccentricities();
        let mut seeds: Vec<Vertex> = (1..=self.n).collect();
        seeds.sort_by_key(|&v| (ecc[v], v));

        let start = self.grow(seeds[0], |v| ecc[v]);
        let (inside, score) = self.exchange_moves(start);
        if score.0 <= self.size {
            return Ok((self.to_set(&inside), false));
        }
        let mut worst = score.0;
        for &seed in &seeds {
            let start = self.grow_toward_largest(seed);
            let (inside, score) = self.steepest_descent(start);
            if score.0 <= self.size {
                return Ok((self.to_set(&inside), true));
            }
            worst = worst.min(score.0);
        }
        Err(BlockGraphError::SearchStalled {
            largest: worst,
            bound: self.size,
        })
    }

    fn to_set(&self, inside: &[bool]) -> VertexSet {
        (1..=self.n).filter(|&v| inside[v]).collect()
    }

    fn bfs(&self, sources: &[Vertex], allowed: impl Fn(Vertex) -> bool) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n + 1];
        let mut queue = VecDeque::new();
        for &s in sources {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                if dist[v] == usize::MAX && allowed(v) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn eccentricities(&self) -> Vec<usize> {
        let mut ecc = vec![0; self.n + 1];
        for v in 1..=self.n {
            ecc[v] = self.bfs(&[v], |_| true)[1..].iter().copied().max().unwrap_or(0);
        }
        ecc
    }

    fn score(&self, inside: &[bool]) -> (Score, Vec<usize>, Vec<usize>) {
        let outside: Vec<bool> = (0..=self.n).map(|v| v > 0 && !inside[v]).collect();
        let (labels, count) = label_components(self.g, &outside);
        let mut sizes = vec![0usize; count];
        for v in 1..=self.n {
            if outside[v] {
                sizes[labels[v]] += 1;
            }
        }
        let largest = sizes.iter().copied().max().unwrap_or(0);
        let squares = sizes.iter().map(|s| s * s).sum();
        ((largest, squares), labels, sizes)
    }

    fn connected(&self, inside: &[bool]) -> bool {
        let Some(start) = (1..=self.n).find(|&v| inside[v]) else {
            return true;
        };
        let dist = self.bfs(&[start], |v| inside[v]);
        (1..=self.n).all(|v| !inside[v] || dist[v] != usize::MAX)
    }

    /// Connected set of `size` vertices grown from `seed`, preferring the
    /// smallest key among vertices adjacent to the current set.
    fn grow(&self, seed: Vertex, key: impl Fn(Vertex) -> usize) -> Vec<bool> {
        let mut inside = vec![false; self.n + 1];
        inside[seed] = true;
        for _ in 1..self.size {
            let next = (1..=self.n)
                .filter(|&v| !inside[v] && self.g.neighbors(v).iter().any(|&u| inside[u]))
                .min_by_key(|&v| (key(v), v))
                .expect("graph is connected");
            inside[next] = true;
        }
        inside
    }

    /// Like [`Self::grow`], always stepping into the current largest
    /// outside component.
    fn grow_toward_largest(&self, seed: Vertex) -> Vec<bool> {
        let mut inside = vec![false; self.n + 1];
        inside[seed] = true;
        for _ in 1..self.size {
            let (_, labels, sizes) = self.score(&inside);
            let next = (1..=self.n)
                .filter(|&v| !inside[v] && self.g.neighbors(v).iter().any(|&u| inside[u]))
                .max_by_key(|&v| (sizes[labels[v]], std::cmp::Reverse(v)))
                .expect("graph is connected");
            inside[next] = true;
        }
        inside
    }

    /// Move a vertex of the set whose removal keeps it connected, chosen
    /// farthest from the largest outside component, into that component.
    fn exchange_moves(&self, mut inside: Vec<bool>) -> (Vec<bool>, Score) {
        let (mut score, mut labels, mut sizes) = self.score(&inside);
        while score.0 > self.size {
            let big = (1..=self.n)
                .filter(|&v| !inside[v])
                .map(|v| labels[v])
                .find(|&l| sizes[l] == score.0)
                .expect("largest component exists");
            let members: Vec<Vertex> = (1..=self.n).filter(|&v| !inside[v] && labels[v] == big).collect();
            let dist = self.bfs(&members, |_| true);
            let mut movable: Vec<Vertex> = (1..=self.n)
                .filter(|&x| inside[x] && {
                    inside[x] = false;
                    let ok = self.connected(&inside);
                    inside[x] = true;
                    ok
                })
                .collect();
            movable.sort_by_key(|&x| (std::cmp::Reverse(dist[x]), x));
            let mut moved = false;
            'outer: for &x in &movable {
                inside[x] = false;
                for &y in &members {
                    if self.g.neighbors(y).iter().any(|&u| inside[u]) {
                        inside[y] = true;
                        let (s, l, z) = self.score(&inside);
                        if s < score {
                            (score, labels, sizes) = (s, l, z);
                            moved = true;
                            break 'outer;
                        }
                        inside[y] = false;
                    }
                }
                inside[x] = true;
            }
            if !moved {
                break;
            }
        }
        (inside, score)
    }

    /// Best improving swap over all connectivity-preserving exchanges.
    fn steepest_descent(&self, mut inside: Vec<bool>) -> (Vec<bool>, Score) {
        let (mut score, _, _) = self.score(&inside);
        while score.0 > self.size {
            let mut best: Option<(Score, Vertex, Vertex)> = None;
            let members: Vec<Vertex> = (1..=self.n).filter(|&x| inside[x]).collect();
            for x in members {
                inside[x] = false;
                for y in 1..=self.n {
                    if inside[y] || y == x || !self.g.neighbors(y).iter().any(|&u| inside[u]) {
                        continue;
                    }
                    inside[y] = true;
                    if self.connected(&inside) {
                        let (s, _, _) = self.score(&inside);
                        if s < score && best.is_none_or(|(b, _, _)| s < b) {
                            best = Some((s, x, y));
                        }
                    }
                    inside[y] = false;
                }
                inside[x] = true;
            }
            let Some((s, x, y)) = best else { break };
            inside[x] = false;
            inside[y] = true;
            score = s;
        }
        (inside, score)
    }
}
