//! Recorded generator outputs. A change here means previously written
//! instance files can no longer be regenerated from their headers.

use safeset_core::blockgraph::{block_decomposition, endblock_count};
use safeset_core::instances::{random_block_graph, random_tree, ratio_bounded_weights};
use safeset_core::Graph;

#[test]
fn random_tree_n5_seed42() {
    let t = random_tree(5, 42, 6, 0).unwrap();
    assert_eq!(t.weights(), &[0, 6, 1, 5, 4]);
    assert_eq!(t.edge_list(), &[(2, 3), (3, 4), (1, 3), (1, 5)]);
}

#[test]
fn ratio_bounded_m2_base1() {
    let t = random_tree(5, 42, 6, 0).unwrap();
    let r = ratio_bounded_weights(&t, 2, 42, 1).unwrap();
    assert_eq!(r.weights(), &[2, 1, 1, 1, 1]);
    assert_eq!(r.edge_list(), t.edge_list());
}

#[test]
fn block_graph_sizes_3_2_4_seed7() {
    let g = random_block_graph(&[3, 2, 4], 7).unwrap();
    assert_eq!(g.order(), 7);
    let d = block_decomposition(&g).unwrap();
    assert_eq!(d.blocks.len(), 3);
    assert_eq!(d.omega, 4);
    assert_eq!(endblock_count(&g).unwrap(), 2);
}

#[test]
fn block_graph_of_edges_is_a_tree() {
    for seed in 0..20 {
        let g = random_block_graph(&[2, 2, 2], seed).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 3));
        let d = block_decomposition(&g).unwrap();
        assert!(d.blocks.iter().all(|b| b.len() == 2));
    }
}
