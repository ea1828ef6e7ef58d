//! Scaled-weight scheme for trees whose weights lie within a factor `M` of
//! each other.
//!
//! With `S₁` the 2-approximation and `t = ε² w(S₁) / n`, weights are
//! rounded to `⌊w/t⌋` and `⌈w/t⌉`. A set safe under the rounded pair is
//! safe under `w`, and the exact DP over the rounded weights runs with a
//! budget polynomial in `n / ε`. The result weighs at most
//! `(1 + 3ε + 2ε²) cs(T, w) + w_max`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::approx2::two_approx;
use crate::exact::{solve_exact, DpError};
use crate::graph::{is_dual_safe, DualWeights, Graph, GraphError, VertexSet, Weight, WeightedTree};
use crate::{Rational, Solution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    /// ε ≤ min{1/3, 1/M} failed.
    EpsilonBound { epsilon: Rational, ratio_bound: u64 },
    /// w_max ≤ M · w_min failed.
    WeightRatio { w_max: Weight, w_min: Weight, ratio_bound: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FptasError {
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("ratio bound must be at least 1")]
    BadRatioBound,
    #[error("precondition violated: {}", describe(.0))]
    PreconditionViolated(Precondition),
    #[error("the empty set is not safe and cannot be extended")]
    EmptyStart,
    #[error("extension reached the whole vertex set without becoming safe")]
    NotExtensible,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Dp(#[from] DpError),
}

fn describe(p: &Precondition) -> String {
    match p {
        Precondition::EpsilonBound { epsilon, ratio_bound } => {
            format!("epsilon {epsilon} exceeds min(1/3, 1/{ratio_bound})")
        }
        Precondition::WeightRatio {
            w_max,
            w_min,
            ratio_bound,
        } => format!("w_max {w_max} > {ratio_bound} * w_min {w_min}"),
    }
}

/// Scaling data for one run. `t = t_num / t_den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleContext {
    pub t_num: u128,
    pub t_den: u128,
    pub ratio_bound: u64,
    pub epsilon: Rational,
    pub scaled: DualWeights,
}

/// `(⌊w(u)/t⌋, ⌈w(u)/t⌉)` for `t = t_num / t_den > 0`.
pub fn scale_weights(weights: &[Weight], t_num: u128, t_den: u128) -> Result<DualWeights, GraphError> {
    assert!(t_num > 0 && t_den > 0, "t must be positive");
    let narrow = |x: u128| Weight::try_from(x).map_err(|_| GraphError::WeightOverflow);
    let mut minus = Vec::with_capacity(weights.len());
    let mut plus = Vec::with_capacity(weights.len());
    for &w in weights {
        let scaled = w as u128 * t_den;
        minus.push(narrow(scaled / t_num)?);
        plus.push(narrow(scaled.div_ceil(t_num))?);
    }
    DualWeights::new(weights.len(), minus, plus)
}

/// Grows `start` breadth-first (ascending ids) until it is dual-safe.
pub fn extend_to_dual_safe(tree: &WeightedTree, dw: &DualWeights, start: &VertexSet) -> Result<VertexSet, FptasError> {
    if is_dual_safe(tree, dw, start)? {
        return Ok(start.clone());
    }
    if start.is_empty() {
        return Err(FptasError::EmptyStart);
    }
    let n = tree.order();
    let mut inside = start.mask(n);
    let mut queued = inside.clone();
    let mut frontier: Vec<_> = start
        .iter()
        .flat_map(|u| tree.neighbors(u).iter().copied())
        .filter(|&v| !inside[v])
        .collect();
    frontier.sort_unstable();
    frontier.dedup();
    for &v in &frontier {
        queued[v] = true;
    }
    let mut queue: VecDeque<_> = frontier.into();
    while let Some(v) = queue.pop_front() {
        inside[v] = true;
        for &x in tree.neighbors(v) {
            if !queued[x] {
                queued[x] = true;
                queue.push_back(x);
            }
        }
        let set: VertexSet = (1..=n).filter(|&u| inside[u]).collect();
        if is_dual_safe(tree, dw, &set)? {
            return Ok(set);
        }
    }
    Err(FptasError::NotExtensible)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptasOutcome {
    pub solution: Solution,
    /// `None` when `t < 1` and the instance was solved exactly.
    pub scale: Option<ScaleContext>,
    /// DP budget actually used (in scaled units on the scaled path).
    pub budget: Weight,
    pub baseline: Solution,
}

/// Checks `0 < ε ≤ min{1/3, 1/M}` and `w_max ≤ M · w_min`.
pub fn check_preconditions(tree: &WeightedTree, epsilon: Rational, ratio_bound: u64) -> Result<(), FptasError> {
    if epsilon.is_zero() {
        return Err(FptasError::NonPositiveEpsilon);
    }
    if ratio_bound == 0 {
        return Err(FptasError::BadRatioBound);
    }
    let (p, q) = (epsilon.num() as u128, epsilon.den() as u128);
    if 3 * p > q || p * ratio_bound as u128 > q {
        return Err(FptasError::PreconditionViolated(Precondition::EpsilonBound { epsilon, ratio_bound }));
    }
    let (w_max, w_min) = (tree.max_weight(), tree.min_weight());
    if w_max as u128 > ratio_bound as u128 * w_min as u128 {
        return Err(FptasError::PreconditionViolated(Precondition::WeightRatio {
            w_max,
            w_min,
            ratio_bound,
        }));
    }
    Ok(())
}

/// Connected w-safe set of weight at most `(1 + 3ε + 2ε²) cs(T, w) + w_max`.
pub fn fptas_solve(tree: &WeightedTree, epsilon: Rational, ratio_bound: u64) -> Result<Solution, FptasError> {
    Ok(fptas_solve_detailed(tree, epsilon, ratio_bound)?.solution)
}

pub fn fptas_solve_detailed(tree: &WeightedTree, epsilon: Rational, ratio_bound: u64) -> Result<FptasOutcome, FptasError> {
    check_preconditions(tree, epsilon, ratio_bound)?;
    let n = tree.order() as u128;
    let (p, q) = (epsilon.num() as u128, epsilon.den() as u128);
    let baseline = two_approx(tree);
    let t_num = p * p * baseline.weight as u128;
    let t_den = q * q * n;

    if t_num < t_den {
        let solution = solve_exact(tree, &DualWeights::uniform(tree), baseline.weight)?
            .expect("the baseline is a connected safe set within budget");
        return Ok(FptasOutcome {
            solution,
            scale: None,
            budget: baseline.weight,
            baseline,
        });
    }

    let scaled = scale_weights(tree.weights(), t_num, t_den)?;
    let extended = extend_to_dual_safe(tree, &scaled, &baseline.set)?;
    let budget = scaled.minus_of(&extended);
    // (1 + 3ε + M) n / ε²
    let ceiling = ((q * q + 3 * p * q + ratio_bound as u128 * p * p) * n).div_ceil(p * p);
    assert!(
        budget as u128 <= ceiling,
        "scaled budget {budget} exceeds the analytic ceiling {ceiling}"
    );
    let found = solve_exact(tree, &scaled, budget)?.expect("the extended set is within budget");
    let solution = Solution {
        weight: tree.weight_of(&found.set),
        set: found.set,
    };
    Ok(FptasOutcome {
        solution,
        scale: Some(ScaleContext {
            t_num,
            t_den,
            ratio_bound,
            epsilon,
            scaled,
        }),
        budget,
        baseline,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected_set, is_safe};
    use crate::oracle::{brute_connected_safe_min, DEFAULT_CAP};

    fn t1() -> WeightedTree {
        WeightedTree::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], vec![2, 1, 3, 1, 2]).unwrap()
    }

    #[test]
    fn scaling_examples() {
        let d = scale_weights(&[2, 1, 3, 1, 2], 2, 1).unwrap();
        assert_eq!(d.minus_weights(), &[1, 0, 1, 0, 1]);
        assert_eq!(d.plus_weights(), &[1, 1, 2, 1, 1]);
        let d = scale_weights(&[2, 1, 3, 1, 2], 1, 1).unwrap();
        assert_eq!(d.minus_weights(), d.plus_weights());
        assert_eq!(d.minus_weights(), &[2, 1, 3, 1, 2]);
        let d = scale_weights(&[3], 3, 2).unwrap();
        assert_eq!((d.minus(1), d.plus(1)), (2, 2));
    }

    #[test]
    fn extension_examples() {
        let t = t1();
        let d = scale_weights(t.weights(), 2, 1).unwrap();
        let s = extend_to_dual_safe(&t, &d, &VertexSet::from([3])).unwrap();
        assert!(s.contains(3) && is_dual_safe(&t, &d, &s).unwrap());
        assert!(is_connected_set(&t, &s).unwrap());

        let full = VertexSet::full(5);
        assert_eq!(extend_to_dual_safe(&t, &d, &full).unwrap(), full);

        let u = DualWeights::uniform(&t);
        assert_eq!(extend_to_dual_safe(&t, &u, &VertexSet::from([3])).unwrap(), VertexSet::from([3]));
        assert_eq!(
            extend_to_dual_safe(&t, &u, &VertexSet::empty()),
            Err(FptasError::EmptyStart)
        );
    }

    #[test]
    fn preconditions() {
        let t = t1();
        let third: Rational = "1/3".parse().unwrap();
        assert!(check_preconditions(&t, third, 3).is_ok());
        assert!(matches!(
            fptas_solve(&t, third, 1),
            Err(FptasError::PreconditionViolated(Precondition::WeightRatio { .. }))
        ));
        assert!(matches!(
            fptas_solve(&t, "1/2".parse().unwrap(), 3),
            Err(FptasError::PreconditionViolated(Precondition::EpsilonBound { .. }))
        ));
        assert!(matches!(
            fptas_solve(&t, third, 4),
            Err(FptasError::PreconditionViolated(Precondition::EpsilonBound { .. }))
        ));
    }

    #[test]
    fn exact_path_on_small_instance() {
        let out = fptas_solve_detailed(&t1(), "1/3".parse().unwrap(), 3).unwrap();
        assert!(out.scale.is_none());
        assert_eq!(out.solution.weight, 3);
    }

    #[test]
    fn scaled_path_meets_guarantee() {
        // Heavy uniform-ish weights push t above 1.
        let edges: Vec<_> = (1..9).map(|v| (v, v + 1)).chain([(3, 10), (10, 11), (11, 12)]).collect();
        let w = vec![400, 500, 450, 600, 420, 480, 550, 410, 590, 440, 470, 520];
        let t = WeightedTree::new(12, &edges, w).unwrap();
        let eps: Rational = "1/3".parse().unwrap();
        let out = fptas_solve_detailed(&t, eps, 2).unwrap();
        assert!(out.scale.is_some());
        let opt = brute_connected_safe_min(&t, t.weights(), t.weights(), DEFAULT_CAP).unwrap();
        let s = &out.solution;
        assert!(is_safe(&t, t.weights(), &s.set).unwrap());
        assert!(is_connected_set(&t, &s.set).unwrap());
        // (1 + 3ε + 2ε²) = 20/9
        assert!(9 * s.weight <= 20 * opt.weight + 9 * t.max_weight());
    }
}
