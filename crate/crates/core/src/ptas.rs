//! Polynomial-time approximation scheme for the connected safe number of a
//! weighted tree.
//!
//! Given ε, run the internal procedure with ε′ = ε/3. It starts from the
//! 2-approximation `S₁` and a granularity `∂W = ⌊ε′ w(S₁) / 2⌋`:
//!
//! * `∂W = 0` means `w(S₁) < 2/ε′`; the exact DP is cheap and is used.
//! * Otherwise the answer is the lightest of `S₁`, the best safe piece
//!   `V(T*)` cut out by a small set of heavy vertices, and the sets that
//!   [`bounded_connected_set`] finds on the grid `W_i = (i-1) ∂W` with
//!   slack `2 ∂W`. Every candidate is a connected w-safe set and one of
//!   them is within `1 + 3ε′` of optimal.

use itertools::Itertools;
use std::collections::VecDeque;

use thiserror::Error;

use crate::approx2::two_approx;
use crate::exact::{solve_exact, DpError};
use crate::graph::{components_of_complement, is_safe, DualWeights, Graph, Vertex, VertexSet, Weight, WeightedTree};
use crate::{Rational, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PtasError {
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("enumeration needs {subsets} subsets, work budget is {budget}; epsilon is too small for this instance")]
    CapTooLarge { subsets: u128, budget: u128 },
    #[error(transparent)]
    Dp(#[from] DpError),
}

/// Limit on the number of heavy-vertex subsets any single enumeration may visit.
pub const DEFAULT_SUBSET_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtasParams {
    pub epsilon: Rational,
    /// ε/3, the parameter the internal procedure runs with.
    pub epsilon_internal: Rational,
    pub d_w: Weight,
    /// Vertices heavier than `d_w`.
    pub heavy: VertexSet,
    pub baseline: Solution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtasBranch {
    /// `∂W = 0`: solved exactly.
    Exact,
    /// Candidate search over heavy subsets and the weight grid.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtasOutcome {
    pub solution: Solution,
    pub branch: PtasBranch,
    pub params: PtasParams,
}

fn binomial_prefix_sum(n: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for j in 0..=k.min(n) {
        total = total.saturating_add(term);
        term = term.saturating_mul((n - j) as u128) / (j as u128 + 1);
    }
    total
}

fn check_work(n: usize, k: usize, budget: u128) -> Result<(), PtasError> {
    let subsets = binomial_prefix_sum(n, k);
    if subsets > budget {
        Err(PtasError::CapTooLarge { subsets, budget })
    } else {
        Ok(())
    }
}

/// `{r}` plus every vertex whose subtree (rooted at `r`) weighs more than `bound`.
pub fn forced_core(tree: &WeightedTree, root: Vertex, bound: Weight) -> VertexSet {
    let rooted = tree.rooted(root);
    let c = rooted.subtree_weights(|v| tree.weight(v));
    (1..=tree.order()).filter(|&v| v == root || c[v] > bound).collect()
}

/// A connected `S ∋ root` with `bound ≤ w(S) ≤ bound + slack` whose
/// outside components all weigh at most `bound`, or `None` if there is
/// none. Both parameters must be positive.
///
/// Such an `S` contains the forced core, and its heavy vertices outside
/// the core (`w > slack`) form a set `L′` with `|L′| · slack < bound + slack`.
/// Each candidate `L′` fixes the smallest tree `T′` spanning core and
/// `L′`, and the region `T″` reachable from the root without touching the
/// other heavy vertices. `S` exists for `L′` iff `w(T′) ≤ bound + slack`,
/// `T′` meets no other heavy vertex and `w(T″) ≥ bound`; it is then grown
/// from `T′` inside `T″` with light vertices.
pub fn bounded_connected_set(
    tree: &WeightedTree,
    root: Vertex,
    bound: Weight,
    slack: Weight,
) -> Result<Option<VertexSet>, PtasError> {
    bounded_connected_set_with_budget(tree, root, bound, slack, DEFAULT_SUBSET_BUDGET)
}

pub fn bounded_connected_set_with_budget(
    tree: &WeightedTree,
    root: Vertex,
    bound: Weight,
    slack: Weight,
    work_budget: u128,
) -> Result<Option<VertexSet>, PtasError> {
    assert!(bound >= 1 && slack >= 1, "bound and slack must be positive");
    if tree.total_weight() < bound {
        return Ok(None);
    }
    let n = tree.order();
    let rooted = tree.rooted(root);
    let c = rooted.subtree_weights(|v| tree.weight(v));
    let mut in_core = vec![false; n + 1];
    for v in 1..=n {
        in_core[v] = v == root || c[v] > bound;
    }
    let heavy: Vec<Vertex> = (1..=n).filter(|&v| !in_core[v] && tree.weight(v) > slack).collect();
    let mut is_heavy = vec![false; n + 1];
    for &v in &heavy {
        is_heavy[v] = true;
    }
    let limit = bound + slack;
    let max_size = ((limit - 1) / slack) as usize;
    check_work(heavy.len(), max_size, work_budget)?;
    let core_weight: Weight = (1..=n).filter(|&v| in_core[v]).map(|v| tree.weight(v)).sum();
    if core_weight > limit {
        return Ok(None);
    }

    for size in 0..=max_size.min(heavy.len()) {
        for chosen in heavy.iter().copied().combinations(size) {
            // T′: core plus root paths of the chosen heavy vertices.
            let mut in_tp = in_core.clone();
            let mut tp_weight = core_weight;
            let mut clean = true;
            for &x in &chosen {
                let mut v = x;
                while !in_tp[v] {
                    if is_heavy[v] && !chosen.contains(&v) {
                        clean = false;
                        break;
                    }
                    in_tp[v] = true;
                    tp_weight += tree.weight(v);
                    v = rooted.parent(v).expect("the root is in the core");
                }
                if !clean {
                    break;
                }
            }
            if !clean || tp_weight > limit {
                continue;
            }

            // T″: reachable from the root avoiding unchosen heavy vertices.
            let blocked = |v: Vertex| is_heavy[v] && !chosen.contains(&v);
            let mut in_tpp = vec![false; n + 1];
            let mut tpp_weight = 0;
            let mut queue = VecDeque::from([root]);
            in_tpp[root] = true;
            while let Some(u) = queue.pop_front() {
                tpp_weight += tree.weight(u);
                for &v in tree.neighbors(u) {
                    if !in_tpp[v] && !blocked(v) {
                        in_tpp[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            if tpp_weight < bound {
                continue;
            }

            let mut weight = tp_weight;
            let mut frontier: Vec<Vertex> = (1..=n)
                .filter(|&v| in_tp[v])
                .flat_map(|u| tree.neighbors(u).iter().copied())
                .filter(|&v| !in_tp[v] && in_tpp[v])
                .collect();
            frontier.sort_unstable();
            frontier.dedup();
            let mut queue: VecDeque<Vertex> = frontier.into();
            while weight < bound {
                let v = queue.pop_front().expect("w(T″) ≥ bound");
                if in_tp[v] {
                    continue;
                }
                in_tp[v] = true;
                weight += tree.weight(v);
                for &x in tree.neighbors(v) {
                    if !in_tp[x] && in_tpp[x] {
                        queue.push_back(x);
                    }
                }
            }
            debug_assert!(weight <= limit);
            return Ok(Some((1..=n).filter(|&v| in_tp[v]).collect()));
        }
    }
    Ok(None)
}

fn lighter(a: &Solution, b: &Solution) -> bool {
    (a.weight, &a.set) < (b.weight, &b.set)
}

/// Lightest safe set of the form "component of `T − (heavy ∖ L′)` holding
/// all of `L′`" over `|L′| ≤ cap` (every component of `T − heavy` when
/// `L′ = ∅`).
pub fn case1_component_search(
    tree: &WeightedTree,
    heavy: &VertexSet,
    cap: usize,
    work_budget: u128,
) -> Result<Option<Solution>, PtasError> {
    check_work(heavy.len(), cap, work_budget)?;
    let w = tree.weights();
    let mut best: Option<Solution> = None;
    let mut consider = |set: VertexSet| {
        let cand = Solution {
            weight: tree.weight_of(&set),
            set,
        };
        if best.as_ref().is_none_or(|b| lighter(&cand, b)) && is_safe(tree, w, &cand.set).expect("ids in range") {
            best = Some(cand);
        }
    };
    for piece in components_of_complement(tree, heavy).expect("ids in range") {
        consider(piece);
    }
    let members: Vec<Vertex> = heavy.iter().collect();
    for size in 1..=cap.min(members.len()) {
        for chosen in members.iter().copied().combinations(size) {
            let removed: VertexSet = members.iter().copied().filter(|v| !chosen.contains(v)).collect();
            let parts = components_of_complement(tree, &removed).expect("ids in range");
            let Some(piece) = parts.into_iter().find(|p| p.contains(chosen[0])) else {
                continue;
            };
            if chosen.iter().all(|&v| piece.contains(v)) {
                consider(piece);
            }
        }
    }
    Ok(best)
}

/// Connected w-safe set of weight at most `(1 + ε) cs(T, w)`.
pub fn ptas_solve(tree: &WeightedTree, epsilon: Rational) -> Result<Solution, PtasError> {
    Ok(ptas_solve_detailed(tree, epsilon, DEFAULT_SUBSET_BUDGET)?.solution)
}

pub fn ptas_solve_detailed(tree: &WeightedTree, epsilon: Rational, work_budget: u128) -> Result<PtasOutcome, PtasError> {
    if epsilon.is_zero() {
        return Err(PtasError::NonPositiveEpsilon);
    }
    let (p, q) = (epsilon.num() as u128, epsilon.den() as u128);
    let epsilon_internal = Rational::new(epsilon.num(), epsilon.den() * 3).expect("nonzero denominator");
    let baseline = two_approx(tree);
    let d_w = (p * baseline.weight as u128 / (6 * q)) as Weight;
    let heavy: VertexSet = (1..=tree.order()).filter(|&v| tree.weight(v) > d_w).collect();
    let params = PtasParams {
        epsilon,
        epsilon_internal,
        d_w,
        heavy: heavy.clone(),
        baseline: baseline.clone(),
    };

    if d_w == 0 {
        let solution = solve_exact(tree, &DualWeights::uniform(tree), baseline.weight)?
            .expect("the baseline is a connected safe set within budget");
        return Ok(PtasOutcome {
            solution,
            branch: PtasBranch::Exact,
            params,
        });
    }

    // 4/ε′ = 12q/p
    let cap = (12 * q / p) as usize;
    let grid = (12 * q).div_ceil(p) as u64 + 1;

    let mut best = baseline.clone();
    if let Some(c) = case1_component_search(tree, &heavy, cap, work_budget)? {
        if lighter(&c, &best) {
            best = c;
        }
    }
    for i in 2..=grid {
        let bound = (i - 1) * d_w;
        if bound > tree.total_weight() || bound > best.weight {
            break;
        }
        for r in 1..=tree.order() {
            if let Some(set) = bounded_connected_set_with_budget(tree, r, bound, 2 * d_w, work_budget)? {
                let cand = Solution {
                    weight: tree.weight_of(&set),
                    set,
                };
                debug_assert!(is_safe(tree, tree.weights(), &cand.set).unwrap());
                if lighter(&cand, &best) {
                    best = cand;
                }
            }
        }
    }
    Ok(PtasOutcome {
        solution: best,
        branch: PtasBranch::Search,
        params,
    })
}
