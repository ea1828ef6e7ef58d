//! Exact pseudopolynomial solver for minimum w⁻-weight connected
//! (w⁻, w⁺)-safe sets in trees.
//!
//! Root the tree, order each vertex's children `v_1..v_k` by id and let
//! `T(u, I)` be `u` plus the subtrees of the children indexed by `I`. For
//! `b = 1` the table entry `p(u, I)(1, s, a)` is the least bound on the w⁺
//! weight of outside pieces touching the piece `C_u` of a connected set
//! `S ∋ u` with `w⁻(S) = s` and `w⁻(C_u) = a`; for `b = 0` it is the
//! largest w⁻ weight every inside piece touching `D_u` can guarantee, where
//! `u ∉ S` and `w⁺(D_u) = a`. Only `I = ∅`, `I = {i}` and `I = [i]` are
//! ever needed.
//!
//! Two table layouts produce the same values:
//!
//! * [`Strategy::Dense`] stores every `(b, s, a)` cell of every slice and
//!   evaluates the merge of two prefixes by scanning all `(s', a')` splits,
//!   `O(n W⁴)` overall.
//! * [`Strategy::Collapsed`] uses that feasible `b = 1` cells have `s = a`
//!   and that `b = 0` cells only take the values `-∞`, `s` or `+∞`. It keeps
//!   `O(W)` cells per slice for `b = 1`, a byte per `b = 0` cell, derives the
//!   `{i}` slices on demand and merges by pairing non-`+∞` cells only.

use std::cmp::{max, min};

use thiserror::Error;

use crate::graph::{Graph, RootedView, Vertex, VertexSet, Weight, WeightedTree};
use crate::graph::DualWeights;
use crate::Solution;

/// `Z≥0 ∪ {±∞}` with `-∞ < finite < +∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedInt {
    NegInf,
    Finite(u64),
    PosInf,
}

use ExtendedInt::{Finite, NegInf, PosInf};

/// Which children of a vertex a slice covers (1-based child indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexSet {
    Empty,
    Single(usize),
    Prefix(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Collapsed,
    Dense,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DpError {
    #[error("budget {budget} needs about {cells} table cells, cap is {cap}")]
    BudgetOverflow { budget: u64, cells: u128, cap: u128 },
    #[error("dual weights cover {found} vertices, tree has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("root {0} is not a vertex of the tree")]
    BadRoot(Vertex),
}

#[derive(Debug, Clone)]
pub struct DpOptions {
    pub strategy: Strategy,
    pub root: Vertex,
    /// Upper bound on materialized table cells; `None` picks a per-strategy default.
    pub max_cells: Option<u128>,
}

impl Default for DpOptions {
    fn default() -> Self {
        Self {
            strategy: Strategy::Collapsed,
            root: 1,
            max_cells: None,
        }
    }
}

impl DpOptions {
    pub fn dense() -> Self {
        Self {
            strategy: Strategy::Dense,
            ..Self::default()
        }
    }
}

const COLLAPSED_CELL_CAP: u128 = 1 << 28;
const DENSE_CELL_CAP: u128 = 1 << 24;

/// Full `(b, s, a)` table for one `(u, I)`, indices in `[W]₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSlice {
    width: usize,
    one: Vec<ExtendedInt>,
    zero: Vec<ExtendedInt>,
}

impl DenseSlice {
    fn filled(budget: usize) -> Self {
        let width = budget + 1;
        Self {
            width,
            one: vec![PosInf; width * width],
            zero: vec![NegInf; width * width],
        }
    }

    pub fn budget(&self) -> usize {
        self.width - 1
    }

    /// `None` when an index lies outside `[W]₀`.
    pub fn get(&self, b: bool, s: u64, a: u64) -> Option<ExtendedInt> {
        let (s, a) = (usize::try_from(s).ok()?, usize::try_from(a).ok()?);
        if s >= self.width || a >= self.width {
            return None;
        }
        let i = s * self.width + a;
        Some(if b { self.one[i] } else { self.zero[i] })
    }

    fn one_at(&self, s: i64, a: i64) -> ExtendedInt {
        self.lookup(true, s, a).unwrap_or(PosInf)
    }

    fn zero_at(&self, s: i64, a: i64) -> ExtendedInt {
        self.lookup(false, s, a).unwrap_or(NegInf)
    }

    fn lookup(&self, b: bool, s: i64, a: i64) -> Option<ExtendedInt> {
        if s < 0 || a < 0 {
            None
        } else {
            self.get(b, s as u64, a as u64)
        }
    }
}

/// Slice for `I = ∅`: `T(u, ∅)` is the single vertex `u`.
pub fn base_case(minus_u: Weight, plus_u: Weight, budget: usize) -> DenseSlice {
    let mut sl = DenseSlice::filled(budget);
    let w = sl.width;
    if minus_u <= budget as u64 {
        let m = minus_u as usize;
        sl.one[m * w + m] = NegInf;
    }
    if plus_u <= budget as u64 {
        sl.zero[plus_u as usize] = PosInf;
    }
    sl
}

/// Slice for `I = {i}` from the complete slice of child `v_i`.
/// `child_plus` is w⁺ of the subtree rooted at `v_i`.
pub fn single_child_case(
    minus_u: Weight,
    plus_u: Weight,
    child: &DenseSlice,
    child_plus: Weight,
    updates: &mut u64,
) -> DenseSlice {
    let budget = child.budget();
    let mut sl = DenseSlice::filled(budget);
    let w = sl.width;
    let (mu, pu) = (minus_u as i64, plus_u as i64);
    for s in 0..w as i64 {
        for a in 0..w as i64 {
            let i = s as usize * w + a as usize;
            *updates += 1;
            // A zero-weight child side can join without changing s or a,
            // so the two cases of each recurrence may overlap.
            sl.one[i] = if s == a && s >= mu {
                let alone = if s == mu { Finite(child_plus) } else { PosInf };
                min(alone, child.one_at(s - mu, a - mu))
            } else {
                PosInf
            };
            sl.zero[i] = if a >= pu {
                let mut best = NegInf;
                if a == pu {
                    for a2 in 0..w as i64 {
                        *updates += 1;
                        if child.one_at(s, a2) <= Finite(a2 as u64) {
                            best = Finite(a2 as u64);
                        }
                    }
                }
                max(best, child.zero_at(s, a - pu))
            } else {
                NegInf
            };
        }
    }
    sl
}

/// Slice for `I = [i]`, `i ≥ 2`, from `[i-1]` and `{i}`.
///
/// `child_plus` is w⁺ of the subtree at `v_i`; `prev_plus_without_u` is
/// w⁺ of `T(u, [i-1])` minus w⁺(u). When `u ∉ S` and `S` is connected, `S`
/// lies entirely on one side: the other side joins `D_u`.
pub fn combine_case(
    minus_u: Weight,
    prev: &DenseSlice,
    single: &DenseSlice,
    child_plus: Weight,
    prev_plus_without_u: Weight,
    updates: &mut u64,
) -> DenseSlice {
    let budget = prev.budget();
    let mut sl = DenseSlice::filled(budget);
    let w = sl.width as i64;
    let mu = minus_u as i64;
    let (x1, x2) = (child_plus as i64, prev_plus_without_u as i64);
    for s in 0..w {
        let s_lo = max(0, s + mu - (w - 1));
        let s_hi = min(w - 1, s + mu);
        for a in 0..w {
            let a_lo = max(0, a + mu - (w - 1));
            let a_hi = min(w - 1, a + mu);
            let mut best = PosInf;
            for s1 in s_lo..=s_hi {
                let s2 = s + mu - s1;
                for a1 in a_lo..=a_hi {
                    *updates += 1;
                    let left = prev.one_at(s1, a1);
                    if left == PosInf {
                        continue;
                    }
                    let cand = max(left, single.one_at(s2, a + mu - a1));
                    best = min(best, cand);
                }
            }
            *updates += 1;
            let i = (s * w + a) as usize;
            sl.one[i] = best;
            sl.zero[i] = max(prev.zero_at(s, a - x1), single.zero_at(s, a - x2));
        }
    }
    sl
}

/// Collapsed slice: `one[s]` is the `(1, s, s)` cell; `zero` holds one of
/// `ZERO_NEG`, `ZERO_S`, `ZERO_POS` per `(s, a)`.
#[derive(Debug, Clone)]
struct CompactSlice {
    width: usize,
    one: Vec<ExtendedInt>,
    zero: Vec<u8>,
}

const ZERO_NEG: u8 = 0;
const ZERO_S: u8 = 1;
const ZERO_POS: u8 = 2;

fn zero_value(state: u8, s: u64) -> ExtendedInt {
    match state {
        ZERO_NEG => NegInf,
        ZERO_S => Finite(s),
        _ => PosInf,
    }
}

enum Storage {
    Dense {
        empty: Vec<DenseSlice>,
        single: Vec<Vec<DenseSlice>>,
        /// `prefix[u][i - 2]` is `[i]` for `i ≥ 2`.
        prefix: Vec<Vec<DenseSlice>>,
    },
    Collapsed {
        /// `prefix[u][i - 1]` is `[i]`.
        prefix: Vec<Vec<CompactSlice>>,
    },
}

/// All slices for one rooting, budget and weight pair.
pub struct DpTable {
    budget: usize,
    rooted: RootedView,
    minus: Vec<Weight>,
    plus: Vec<Weight>,
    /// w⁺ of the subtree at each vertex.
    sub_plus: Vec<Weight>,
    /// `prefix_plus[u][i]` is w⁺ of `T(u, [i])`.
    prefix_plus: Vec<Vec<Weight>>,
    storage: Storage,
    updates: u64,
}

impl DpTable {
    pub fn build(tree: &WeightedTree, dw: &DualWeights, budget: u64, opts: &DpOptions) -> Result<Self, DpError> {
        let n = tree.order();
        if dw.len() != n {
            return Err(DpError::LengthMismatch {
                expected: n,
                found: dw.len(),
            });
        }
        if opts.root == 0 || opts.root > n {
            return Err(DpError::BadRoot(opts.root));
        }
        let width = budget as u128 + 1;
        let (cells, default_cap) = match opts.strategy {
            Strategy::Dense => ((3 * n as u128) * 2 * width * width, DENSE_CELL_CAP),
            Strategy::Collapsed => ((n as u128).saturating_sub(1) * (width * width + width), COLLAPSED_CELL_CAP),
        };
        let cap = opts.max_cells.unwrap_or(default_cap);
        if cells > cap || budget > u32::MAX as u64 {
            return Err(DpError::BudgetOverflow { budget, cells, cap });
        }
        let budget = budget as usize;

        let rooted = RootedView::new(tree, opts.root);
        let mut minus = vec![0; n + 1];
        let mut plus = vec![0; n + 1];
        for v in 1..=n {
            minus[v] = dw.minus(v);
            plus[v] = dw.plus(v);
        }
        let sub_plus = rooted.subtree_weights(|v| plus[v]);
        let prefix_plus = (0..=n)
            .map(|u| {
                if u == 0 {
                    return Vec::new();
                }
                let mut acc = plus[u];
                let mut out = vec![acc];
                for &v in rooted.children(u) {
                    acc += sub_plus[v];
                    out.push(acc);
                }
                out
            })
            .collect();

        let storage = match opts.strategy {
            Strategy::Dense => Storage::Dense {
                empty: Vec::new(),
                single: Vec::new(),
                prefix: Vec::new(),
            },
            Strategy::Collapsed => Storage::Collapsed { prefix: Vec::new() },
        };
        let mut table = Self {
            budget,
            rooted,
            minus,
            plus,
            sub_plus,
            prefix_plus,
            storage,
            updates: 0,
        };
        match opts.strategy {
            Strategy::Dense => table.fill_dense(),
            Strategy::Collapsed => table.fill_collapsed(),
        }
        Ok(table)
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn root(&self) -> Vertex {
        self.rooted.root()
    }

    /// Counted cell writes plus inner split/scan steps.
    pub fn table_updates(&self) -> u64 {
        self.updates
    }

    fn child(&self, u: Vertex, i: usize) -> Vertex {
        self.rooted.children(u)[i - 1]
    }

    fn final_index(&self, u: Vertex) -> IndexSet {
        match self.rooted.children(u).len() {
            0 => IndexSet::Empty,
            k => IndexSet::Prefix(k),
        }
    }

    fn fill_dense(&mut self) {
        let n = self.minus.len() - 1;
        let mut empty: Vec<DenseSlice> = Vec::with_capacity(n + 1);
        empty.push(DenseSlice::filled(0));
        for u in 1..=n {
            empty.push(base_case(self.minus[u], self.plus[u], self.budget));
            self.updates += ((self.budget + 1) * (self.budget + 1)) as u64;
        }
        let mut single: Vec<Vec<DenseSlice>> = vec![Vec::new(); n + 1];
        let mut prefix: Vec<Vec<DenseSlice>> = vec![Vec::new(); n + 1];
        let order: Vec<Vertex> = self.rooted.bfs_order().iter().rev().copied().collect();
        for u in order {
            let kids = self.rooted.children(u).to_vec();
            for (idx, &v) in kids.iter().enumerate() {
                let child_final: &DenseSlice = match kids_of(&self.rooted, v) {
                    0 => &empty[v],
                    1 => &single[v][0],
                    k => &prefix[v][k - 2],
                };
                let sl = single_child_case(self.minus[u], self.plus[u], child_final, self.sub_plus[v], &mut self.updates);
                single[u].push(sl);
                if idx >= 1 {
                    let i = idx + 1;
                    let prev = if i == 2 { &single[u][0] } else { &prefix[u][i - 3] };
                    let combined = combine_case(
                        self.minus[u],
                        prev,
                        &single[u][idx],
                        self.sub_plus[v],
                        self.prefix_plus[u][i - 1] - self.plus[u],
                        &mut self.updates,
                    );
                    prefix[u].push(combined);
                }
            }
        }
        self.storage = Storage::Dense { empty, single, prefix };
    }

    fn fill_collapsed(&mut self) {
        let n = self.minus.len() - 1;
        let w = self.budget + 1;
        let order: Vec<Vertex> = self.rooted.bfs_order().iter().rev().copied().collect();
        let mut prefix: Vec<Vec<CompactSlice>> = vec![Vec::new(); n + 1];
        for u in order {
            let k = self.rooted.children(u).len();
            for i in 1..=k {
                let sl = if i == 1 {
                    let mut one = vec![PosInf; w];
                    let mut zero = vec![ZERO_NEG; w * w];
                    for s in 0..w {
                        one[s] = self.single_one(&prefix, u, 1, s as u64);
                        for a in 0..w {
                            zero[s * w + a] = self.single_zero(&prefix, u, 1, s as u64, a as u64);
                        }
                    }
                    self.updates += (w * w + w) as u64;
                    CompactSlice { width: w, one, zero }
                } else {
                    self.combine_collapsed(&prefix, u, i)
                };
                prefix[u].push(sl);
            }
        }
        self.storage = Storage::Collapsed { prefix };
    }

    fn combine_collapsed(&mut self, prefix: &[Vec<CompactSlice>], u: Vertex, i: usize) -> CompactSlice {
        let w = self.budget + 1;
        let mu = self.minus[u];
        let prev = &prefix[u][i - 2];
        let left: Vec<(u64, ExtendedInt)> = (0..w)
            .filter(|&s| prev.one[s] != PosInf)
            .map(|s| (s as u64, prev.one[s]))
            .collect();
        let right: Vec<(u64, ExtendedInt)> = (0..w as u64)
            .map(|s| (s, self.single_one(prefix, u, i, s)))
            .filter(|&(_, v)| v != PosInf)
            .collect();
        let mut one = vec![PosInf; w];
        let mut updates = (w + w * w) as u64;
        for &(s1, l) in &left {
            for &(s2, r) in &right {
                updates += 1;
                if s1 + s2 < mu {
                    continue;
                }
                let s = s1 + s2 - mu;
                if s < w as u64 {
                    let cand = max(l, r);
                    if cand < one[s as usize] {
                        one[s as usize] = cand;
                    }
                }
            }
        }
        let v = self.child(u, i);
        let x1 = self.sub_plus[v];
        let x2 = self.prefix_plus[u][i - 1] - self.plus[u];
        let mut zero = vec![ZERO_NEG; w * w];
        for s in 0..w {
            for a in 0..w as u64 {
                let from_prev = if a >= x1 {
                    prev.zero[s * w + (a - x1) as usize]
                } else {
                    ZERO_NEG
                };
                let from_single = if a >= x2 {
                    self.single_zero(prefix, u, i, s as u64, a - x2)
                } else {
                    ZERO_NEG
                };
                zero[s * w + a as usize] = from_prev.max(from_single);
            }
        }
        self.updates += updates;
        CompactSlice { width: w, one, zero }
    }

    /// `(1, s, s)` of a final slice in collapsed storage.
    fn final_one(&self, prefix: &[Vec<CompactSlice>], v: Vertex, s: u64) -> ExtendedInt {
        match prefix[v].last() {
            None => {
                if s == self.minus[v] {
                    NegInf
                } else {
                    PosInf
                }
            }
            Some(sl) => sl.one[s as usize],
        }
    }

    fn final_zero(&self, prefix: &[Vec<CompactSlice>], v: Vertex, s: u64, a: u64) -> u8 {
        if a > self.budget as u64 {
            return ZERO_NEG;
        }
        match prefix[v].last() {
            None => {
                if s == 0 && a == self.plus[v] {
                    ZERO_POS
                } else {
                    ZERO_NEG
                }
            }
            Some(sl) => sl.zero[s as usize * sl.width + a as usize],
        }
    }

    fn single_one(&self, prefix: &[Vec<CompactSlice>], u: Vertex, i: usize, s: u64) -> ExtendedInt {
        let v = self.child(u, i);
        let mu = self.minus[u];
        if s < mu {
            return PosInf;
        }
        let alone = if s == mu { Finite(self.sub_plus[v]) } else { PosInf };
        min(alone, self.final_one(prefix, v, s - mu))
    }

    fn single_zero(&self, prefix: &[Vec<CompactSlice>], u: Vertex, i: usize, s: u64, a: u64) -> u8 {
        let v = self.child(u, i);
        let pu = self.plus[u];
        if a < pu {
            return ZERO_NEG;
        }
        let cut_at_u = if a == pu && self.final_one(prefix, v, s) <= Finite(s) {
            ZERO_S
        } else {
            ZERO_NEG
        };
        cut_at_u.max(self.final_zero(prefix, v, s, a - pu))
    }

    /// `p(u, I)(b, s, a)`. Indices outside `[W]₀` read as `+∞` for `b = 1`
    /// and `-∞` for `b = 0`. `Prefix(1)` is the same slice as `Single(1)`.
    pub fn value(&self, u: Vertex, index: IndexSet, b: bool, s: i64, a: i64) -> ExtendedInt {
        let missing = if b { PosInf } else { NegInf };
        let wmax = self.budget as i64;
        if s < 0 || a < 0 || s > wmax || a > wmax {
            return missing;
        }
        let (su, au) = (s as u64, a as u64);
        let index = match index {
            IndexSet::Prefix(1) => IndexSet::Single(1),
            other => other,
        };
        match &self.storage {
            Storage::Dense { empty, single, prefix } => {
                let sl = match index {
                    IndexSet::Empty => &empty[u],
                    IndexSet::Single(i) => &single[u][i - 1],
                    IndexSet::Prefix(i) => &prefix[u][i - 2],
                };
                sl.get(b, su, au).unwrap_or(missing)
            }
            Storage::Collapsed { prefix } => {
                if b && s != a {
                    return PosInf;
                }
                match index {
                    IndexSet::Empty => {
                        if b {
                            if su == self.minus[u] {
                                NegInf
                            } else {
                                PosInf
                            }
                        } else if su == 0 && au == self.plus[u] {
                            PosInf
                        } else {
                            NegInf
                        }
                    }
                    IndexSet::Single(i) => {
                        if b {
                            self.single_one(prefix, u, i, su)
                        } else {
                            zero_value(self.single_zero(prefix, u, i, su, au), su)
                        }
                    }
                    IndexSet::Prefix(i) => {
                        let sl = &prefix[u][i - 1];
                        if b {
                            sl.one[s as usize]
                        } else {
                            zero_value(sl.zero[s as usize * sl.width + a as usize], su)
                        }
                    }
                }
            }
        }
    }

    /// Smallest `s` with `p(r, [d(r)])(1, s, a) ≤ a` or `p(r, [d(r)])(0, s, a) ≥ a`
    /// for some `a ≤ s`, as `(s, b, a)`. At equal `s` the `b = 0` cells are
    /// tried first, so an all-zero instance yields the empty set.
    pub fn optimum(&self) -> Option<(u64, bool, u64)> {
        let r = self.root();
        let idx = self.final_index(r);
        for s in 0..=self.budget as i64 {
            for a in 0..=s {
                if self.value(r, idx, false, s, a) >= Finite(a as u64) {
                    return Some((s as u64, false, a as u64));
                }
                if self.value(r, idx, true, s, a) <= Finite(a as u64) {
                    return Some((s as u64, true, a as u64));
                }
            }
        }
        None
    }

    /// A vertex set realizing cell `(u, I, b, s, a)`, following the same
    /// recurrences that filled the table.
    pub fn witness(&self, u: Vertex, index: IndexSet, b: bool, s: u64, a: u64) -> VertexSet {
        let mut out = Vec::new();
        let mut stack = vec![(u, index, b, s as i64, a as i64)];
        while let Some((u, index, b, s, a)) = stack.pop() {
            let index = match index {
                IndexSet::Prefix(1) => IndexSet::Single(1),
                other => other,
            };
            let mu = self.minus[u] as i64;
            let pu = self.plus[u] as i64;
            match (index, b) {
                (IndexSet::Empty, true) => out.push(u),
                (IndexSet::Empty, false) => {}
                (IndexSet::Single(i), true) => {
                    out.push(u);
                    let v = self.child(u, i);
                    let alone = s == mu && self.value(u, index, true, s, a) == Finite(self.sub_plus[v]);
                    if !alone {
                        stack.push((v, self.final_index(v), true, s - mu, a - mu));
                    }
                }
                (IndexSet::Single(i), false) => {
                    let v = self.child(u, i);
                    let vi = self.final_index(v);
                    if a == pu && self.value(u, index, false, s, a) != self.value(v, vi, false, s, a - pu) {
                        let a2 = (0..=self.budget as i64)
                            .rev()
                            .find(|&a2| self.value(v, vi, true, s, a2) <= Finite(a2 as u64))
                            .expect("cell is not -inf");
                        stack.push((v, vi, true, s, a2));
                    } else {
                        stack.push((v, vi, false, s, a - pu));
                    }
                }
                (IndexSet::Prefix(i), true) => {
                    let target = self.value(u, index, true, s, a);
                    let prev = IndexSet::Prefix(i - 1);
                    let single = IndexSet::Single(i);
                    let split = (0..=min(self.budget as i64, s + mu))
                        .find(|&s1| {
                            let s2 = s + mu - s1;
                            max(self.value(u, prev, true, s1, s1), self.value(u, single, true, s2, s2)) == target
                        })
                        .expect("cell is not +inf");
                    let s2 = s + mu - split;
                    stack.push((u, prev, true, split, split));
                    stack.push((u, single, true, s2, s2));
                }
                (IndexSet::Prefix(i), false) => {
                    let target = self.value(u, index, false, s, a);
                    let v = self.child(u, i);
                    let x1 = self.sub_plus[v] as i64;
                    let x2 = (self.prefix_plus[u][i - 1] - self.plus[u]) as i64;
                    let prev = IndexSet::Prefix(i - 1);
                    if self.value(u, prev, false, s, a - x1) == target {
                        stack.push((u, prev, false, s, a - x1));
                    } else {
                        stack.push((u, IndexSet::Single(i), false, s, a - x2));
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Optimum and a witness set.
    pub fn solution(&self) -> Option<Solution> {
        let (s, b, a) = self.optimum()?;
        let r = self.root();
        let set = self.witness(r, self.final_index(r), b, s, a);
        Some(Solution { weight: s, set })
    }
}

fn kids_of(rooted: &RootedView, v: Vertex) -> usize {
    rooted.children(v).len()
}

/// Result of [`solve_exact_with`], with the operation count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub solution: Option<Solution>,
    pub table_updates: u64,
}

/// Minimum w⁻-weight connected (w⁻, w⁺)-safe set among those of w⁻-weight
/// at most `budget`; `None` if there is none.
pub fn solve_exact(tree: &WeightedTree, dw: &DualWeights, budget: u64) -> Result<Option<Solution>, DpError> {
    Ok(solve_exact_with(tree, dw, budget, &DpOptions::default())?.solution)
}

pub fn solve_exact_with(
    tree: &WeightedTree,
    dw: &DualWeights,
    budget: u64,
    opts: &DpOptions,
) -> Result<ExactOutcome, DpError> {
    let table = DpTable::build(tree, dw, budget, opts)?;
    Ok(ExactOutcome {
        solution: table.solution(),
        table_updates: table.table_updates(),
    })
}

/// w⁻(V): the whole vertex set is always safe, so this budget always succeeds.
pub fn default_budget(dw: &DualWeights) -> u64 {
    dw.total_minus()
}
