use proptest::prelude::*;

use safeset_core::approx2::{smallest_r_nice, two_approx_detailed};
use safeset_core::blockgraph::{block_decomposition, safe_upper_construct_detailed, BoundBranch};
use safeset_core::exact::{solve_exact, solve_exact_with, DpOptions, DpTable, IndexSet};
use safeset_core::fptas::{extend_to_dual_safe, scale_weights};
use safeset_core::graph::{
    components_of_complement, is_connected_set, is_dual_safe, is_safe, safety_violation, DualWeights, Graph,
    WeightedTree,
};
use safeset_core::instances::{
    random_block_graph, random_block_sizes, random_dual_weights, random_subset_sum, random_tree, ratio_bounded_weights,
    subset_sum_star,
};
use safeset_core::oracle::{
    brute_connected_safe_min, brute_is_connected, brute_is_safe, enumerate_connected_sets, subset_sum_feasible, DEFAULT_CAP,
};
use safeset_core::ptas::bounded_connected_set;
use safeset_core::VertexSet;

fn tree(n: usize, seed: u64, w_max: u64) -> WeightedTree {
    random_tree(n, seed, w_max, 0).unwrap()
}

fn dual(t: &WeightedTree, seed: u64, w_max: u64) -> DualWeights {
    let (m, p) = random_dual_weights(t.order(), w_max, seed);
    DualWeights::new(t.order(), m, p).unwrap()
}

fn index_sets(k: usize) -> Vec<IndexSet> {
    let mut out = vec![IndexSet::Empty];
    out.extend((1..=k).map(IndexSet::Single));
    out.extend((2..=k).map(IndexSet::Prefix));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dense_and_collapsed_tables_agree(n in 1usize..=7, seed in any::<u64>(), budget in 0u64..=9) {
        let t = tree(n, seed, 4);
        let dw = dual(&t, seed ^ 1, 4);
        let dense = DpTable::build(&t, &dw, budget, &DpOptions::dense()).unwrap();
        let compact = DpTable::build(&t, &dw, budget, &DpOptions::default()).unwrap();
        let rooted = t.rooted(1);
        for u in 1..=n {
            for idx in index_sets(rooted.children(u).len()) {
                for b in [false, true] {
                    for s in 0..=budget as i64 {
                        for a in 0..=budget as i64 {
                            prop_assert_eq!(
                                dense.value(u, idx, b, s, a),
                                compact.value(u, idx, b, s, a),
                                "u={} {:?} b={} s={} a={}", u, idx, b, s, a
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exact_matches_oracle(n in 1usize..=10, seed in any::<u64>(), dual_mode in any::<bool>()) {
        let t = tree(n, seed, 6);
        let dw = if dual_mode { dual(&t, seed ^ 7, 6) } else { DualWeights::uniform(&t) };
        let got = solve_exact(&t, &dw, dw.total_minus()).unwrap().unwrap();
        let best = brute_connected_safe_min(&t, dw.minus_weights(), dw.plus_weights(), DEFAULT_CAP).unwrap();
        prop_assert_eq!(got.weight, best.weight);
        prop_assert_eq!(dw.minus_of(&got.set), got.weight);
        prop_assert!(is_dual_safe(&t, &dw, &got.set).unwrap());
        prop_assert!(is_connected_set(&t, &got.set).unwrap());
    }

    #[test]
    fn exact_is_root_invariant(n in 1usize..=8, seed in any::<u64>()) {
        let t = tree(n, seed, 5);
        let dw = dual(&t, seed, 5);
        let weights: Vec<_> = (1..=n)
            .map(|root| {
                let opts = DpOptions { root, ..DpOptions::default() };
                solve_exact_with(&t, &dw, dw.total_minus(), &opts).unwrap().solution.unwrap().weight
            })
            .collect();
        prop_assert!(weights.windows(2).all(|w| w[0] == w[1]), "{:?}", weights);
    }

    #[test]
    fn exact_budget_is_monotone(n in 1usize..=8, seed in any::<u64>()) {
        let t = tree(n, seed, 5);
        let dw = DualWeights::uniform(&t);
        let mut found = None;
        for budget in 0..=dw.total_minus() {
            let got = solve_exact(&t, &dw, budget).unwrap().map(|s| s.weight);
            match (found, got) {
                (None, Some(w)) => {
                    prop_assert!(w <= budget);
                    found = Some(w);
                }
                (Some(f), g) => prop_assert_eq!(g, Some(f)),
                (None, None) => {}
            }
        }
        prop_assert!(found.is_some());
    }

    #[test]
    fn safety_checks_agree(n in 1usize..=10, seed in any::<u64>(), mask in any::<u16>()) {
        let t = tree(n, seed, 6);
        let dw = dual(&t, seed, 6);
        let s: VertexSet = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        prop_assert_eq!(
            is_dual_safe(&t, &dw, &s).unwrap(),
            brute_is_safe(&t, dw.minus_weights(), dw.plus_weights(), &s).unwrap()
        );
        prop_assert_eq!(is_connected_set(&t, &s).unwrap(), brute_is_connected(&t, &s).unwrap());
    }

    #[test]
    fn connected_growth_preserves_safety(n in 2usize..=10, seed in any::<u64>()) {
        let t = tree(n, seed, 6);
        let w = t.weights();
        for s in enumerate_connected_sets(&t, DEFAULT_CAP).unwrap() {
            if s.is_empty() || !is_safe(&t, w, &s).unwrap() {
                continue;
            }
            for v in 1..=n {
                if s.contains(v) || !t.neighbors(v).iter().any(|&u| s.contains(u)) {
                    continue;
                }
                let grown: VertexSet = s.iter().chain([v]).collect();
                prop_assert!(is_safe(&t, w, &grown).unwrap(), "{} + {}", s, v);
            }
        }
    }

    #[test]
    fn two_approx_guarantees(n in 1usize..=10, seed in any::<u64>()) {
        let t = tree(n, seed, 6);
        let best = brute_connected_safe_min(&t, t.weights(), t.weights(), DEFAULT_CAP).unwrap();
        let out = two_approx_detailed(&t);
        let s = &out.solution;
        prop_assert!(s.weight <= 2 * best.weight);
        prop_assert!(is_safe(&t, t.weights(), &s.set).unwrap());
        prop_assert!(is_connected_set(&t, &s.set).unwrap());
        if let Some(w_min) = out.w_min {
            prop_assert!(w_min <= best.weight);
            prop_assert!(s.weight <= w_min + t.max_weight());
            for d in components_of_complement(&t, &s.set).unwrap() {
                prop_assert!(t.weight_of(&d) <= w_min);
            }
        }
    }

    #[test]
    fn r_nice_certificates_are_valid(n in 1usize..=12, seed in any::<u64>(), root_pick in any::<usize>()) {
        let t = random_tree(n, seed, 8, 1).unwrap();
        let root = 1 + root_pick % n;
        let c = smallest_r_nice(&t, root);
        prop_assert!(c.set.contains(root));
        prop_assert!(c.bound <= c.set_weight && c.set_weight <= c.bound + t.max_weight());
        for d in components_of_complement(&t, &c.set).unwrap() {
            prop_assert!(t.weight_of(&d) <= c.bound);
        }
        // No smaller integer is r-nice.
        if c.bound > 0 {
            let smaller = c.bound - 1;
            let nice = enumerate_connected_sets(&t, DEFAULT_CAP).unwrap().into_iter().any(|s| {
                let w = t.weight_of(&s);
                s.contains(root)
                    && smaller <= w
                    && w <= smaller + t.max_weight()
                    && components_of_complement(&t, &s).unwrap().iter().all(|d| t.weight_of(d) <= smaller)
            });
            prop_assert!(!nice);
        }
    }

    #[test]
    fn bounded_sets_meet_their_window(n in 1usize..=10, seed in any::<u64>(), bound in 1u64..=30, slack in 1u64..=6) {
        let t = tree(n, seed, 8);
        for r in 1..=n {
            if let Some(s) = bounded_connected_set(&t, r, bound, slack).unwrap() {
                let w = t.weight_of(&s);
                prop_assert!(s.contains(r) && bound <= w && w <= bound + slack);
                prop_assert!(is_connected_set(&t, &s).unwrap());
                for d in components_of_complement(&t, &s).unwrap() {
                    prop_assert!(t.weight_of(&d) <= bound);
                }
                prop_assert!(is_safe(&t, t.weights(), &s).unwrap());
            }
        }
    }

    #[test]
    fn scaled_safety_implies_safety(n in 1usize..=10, seed in any::<u64>(), mask in any::<u16>(), t_num in 1u128..=20, t_den in 1u128..=5) {
        let t = tree(n, seed, 12);
        let scaled = scale_weights(t.weights(), t_num, t_den).unwrap();
        let s: VertexSet = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if is_dual_safe(&t, &scaled, &s).unwrap() {
            prop_assert!(is_safe(&t, t.weights(), &s).unwrap());
        }
        for v in 1..=n {
            let w = t.weight(v) as u128;
            prop_assert!(scaled.minus(v) as u128 * t_num <= w * t_den);
            prop_assert!(scaled.plus(v) as u128 * t_num >= w * t_den);
        }
    }

    #[test]
    fn rounding_stays_within_epsilon(n in 1usize..=10, seed in any::<u64>()) {
        // ε = 1/3, weights in [4, 12], t = 4/3 so every w ≥ t/ε.
        let base = random_tree(n, seed, 1, 1).unwrap();
        let t = ratio_bounded_weights(&base, 3, seed, 4).unwrap();
        let (p, q, t_num, t_den) = (1u128, 3u128, 4u128, 3u128);
        let scaled = scale_weights(t.weights(), t_num, t_den).unwrap();
        for v in 1..=n {
            let w = t.weight(v) as u128;
            // (1 − ε) w/t ≤ w⁻ and w⁺ ≤ (1 + ε) w/t
            prop_assert!((q - p) * w * t_den <= q * scaled.minus(v) as u128 * t_num);
            prop_assert!(q * scaled.plus(v) as u128 * t_num <= (q + p) * w * t_den);
        }
    }

    #[test]
    fn extension_cost_is_bounded(n in 1usize..=9, seed in any::<u64>()) {
        let base = random_tree(n, seed, 1, 1).unwrap();
        let t = ratio_bounded_weights(&base, 3, seed, 4).unwrap();
        let (t_num, t_den) = (4u128, 3u128);
        let scaled = scale_weights(t.weights(), t_num, t_den).unwrap();
        let extra = (t.max_weight() as u128 * t_den).div_ceil(t_num);
        for s in enumerate_connected_sets(&t, DEFAULT_CAP).unwrap() {
            if s.is_empty() || !is_safe(&t, t.weights(), &s).unwrap() {
                continue;
            }
            let ext = extend_to_dual_safe(&t, &scaled, &s).unwrap();
            prop_assert!(s.is_subset(&ext));
            prop_assert!(is_connected_set(&t, &ext).unwrap());
            prop_assert!(is_dual_safe(&t, &scaled, &ext).unwrap());
            // (1 + 3ε) = 2
            prop_assert!(scaled.minus_of(&ext) as u128 <= 2 * scaled.minus_of(&s) as u128 + extra, "{} -> {}", s, ext);
        }
    }

    #[test]
    fn subset_sum_stars(len in 2usize..=6, seed in any::<u64>()) {
        let (c, k) = random_subset_sum(len, 12, seed).unwrap();
        let t = subset_sum_star(&c, k).unwrap();
        let best = brute_connected_safe_min(&t, t.weights(), t.weights(), DEFAULT_CAP).unwrap();
        prop_assert!(best.weight == k + 1 || best.weight == k + 2);
        prop_assert_eq!(best.weight == k + 1, subset_sum_feasible(&c, k));
        prop_assert!(best.set.contains(1));
        let exact = solve_exact(&t, &DualWeights::uniform(&t), k + 2).unwrap().unwrap();
        prop_assert_eq!(exact.weight, best.weight);
        prop_assert!(exact.set.contains(1));
    }

    #[test]
    fn block_graph_construction(seed in any::<u64>(), max_block in 2usize..=7) {
        let sizes = random_block_sizes(12, max_block, seed);
        let g = random_block_graph(&sizes, seed).unwrap();
        let d = block_decomposition(&g).unwrap();
        let out = safe_upper_construct_detailed(&g).unwrap();
        let ones = vec![1; g.order()];
        prop_assert!(out.set.len() <= out.bound);
        prop_assert!(safety_violation(&g, |_| 1, |_| 1, &out.set).unwrap().is_none());
        prop_assert!(is_connected_set(&g, &out.set).unwrap());
        let cs = brute_connected_safe_min(&g, &ones, &ones, DEFAULT_CAP).unwrap();
        prop_assert!(cs.weight as usize <= out.bound);
        if out.branch == BoundBranch::LargeBlock {
            prop_assert_eq!(out.set.len(), d.omega.div_ceil(2));
            let holder = d.blocks.iter().position(|b| b.len() == d.omega && out.set.is_subset(b));
            prop_assert!(holder.is_some());
            prop_assert!(d.cut_vertices_in(holder.unwrap()).is_subset(&out.set));
        }
    }
}
