use std::path::{Path, PathBuf};
use std::process::Command;

use proptest::prelude::*;
use safeset_cli::{parse_instance, run, write_instance, Instance};
use safeset_core::graph::{is_dual_safe, DualWeights, Graph, VertexSet, WeightedTree};
use safeset_core::instances::{random_block_graph, random_dual_weights, random_tree, SeededRng};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn safeset(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_safeset")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_in_process(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("safeset").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn solvers_on_path_example() {
    let t1 = fixture("t1.tree");
    let t1 = t1.to_str().unwrap();
    let expect = [
        ("exact", "safeset weight=3 size=1 vertices=3\n"),
        ("approx2", "safeset weight=5 size=3 vertices=2,3,4\n"),
        ("ptas", "safeset weight=3 size=1 vertices=3\n"),
        ("fptas", "safeset weight=3 size=1 vertices=3\n"),
    ];
    for (alg, line) in expect {
        assert_eq!(safeset(&["solve", alg, "--input", t1]), (0, line.to_string(), String::new()), "{alg}");
    }
    let (code, out, _) = safeset(&["oracle", "--input", t1]);
    assert_eq!((code, out.as_str()), (0, "safeset weight=3 size=1 vertices=3\n"));
}

#[test]
fn exit_codes() {
    let t1 = fixture("t1.tree");
    let t1 = t1.to_str().unwrap();
    let (code, out, _) = safeset(&["solve", "exact", "--input", t1, "--budget", "2"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("infeasible:"), "{out}");

    assert_eq!(safeset(&["verify", "--input", t1, "--set", "3"]).0, 0);
    let (code, out, _) = safeset(&["verify", "--input", t1, "--set", "1"]);
    assert_eq!((code, out.as_str()), (1, "UNSAFE C={1} D={2,3,4,5} 2<7\n"));

    assert_eq!(safeset(&["solve", "ptas", "--input", t1, "--eps", "0"]).0, 2);
    assert_eq!(safeset(&["solve", "simplex", "--input", t1]).0, 2);
    assert_eq!(safeset(&["verify", "--input", t1, "--set", "9"]).0, 2);
    assert_eq!(safeset(&["solve", "exact", "--input", "/nonexistent/x.tree"]).0, 3);
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tree");
    std::fs::write(&path, "tree 2\nnode 1 1\nedge 1 2\n").unwrap();
    let (code, _, err) = safeset(&["solve", "exact", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column 1: missing node 2"), "{err}");
}

#[test]
fn generated_files_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str]); 3] = [
        ("tree_n5_seed42.tree", &["gen", "tree", "--n", "5", "--seed", "42", "--w-max", "6"]),
        (
            "ratio2_n5_seed42.tree",
            &["gen", "tree", "--n", "5", "--seed", "42", "--w-max", "6", "--ratio", "2", "--base", "1"],
        ),
        ("block_3_2_4_seed7.graph", &["gen", "blockgraph", "--sizes", "3,2,4", "--seed", "7"]),
    ];
    for (name, args) in cases {
        let out = dir.path().join(name);
        let mut args = args.to_vec();
        args.extend(["--out", out.to_str().unwrap()]);
        assert_eq!(safeset(&args).0, 0, "{name}");
        let got = std::fs::read_to_string(&out).unwrap();
        let want = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(got, want, "{name}");
        // stdout and --out agree
        let (_, stdout, _) = safeset(&args[..args.len() - 2]);
        assert_eq!(stdout, want, "{name}");
    }
}

#[test]
fn star_subset_sum_instance() {
    let (code, out, _) = safeset(&["gen", "star-subset-sum", "--c", "4,5,7", "--k", "9"]);
    assert_eq!(code, 0);
    let Instance::Tree(t) = parse_instance(&out).unwrap() else {
        panic!("expected a tree");
    };
    assert_eq!(t.order(), 5);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.tree");
    std::fs::write(&path, &out).unwrap();
    let (code, line, _) = safeset(&["solve", "exact", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    // 4 + 5 = 9 is reachable, so the optimum is K + 1
    assert!(line.starts_with("safeset weight=10 "), "{line}");
}

#[test]
fn blockbound_reports_construction() {
    let g = fixture("block_3_2_4_seed7.graph");
    let (code, out, _) = safeset(&["blockbound", "--input", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let head = lines.next().unwrap();
    assert!(head.starts_with("bound=3 omega=4 branch="), "{head}");
    let sol = lines.next().unwrap();
    assert!(sol.starts_with("safeset weight=3 size=3 "), "{sol}");
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["t1.tree", "tree_n5_seed42.tree"] {
        std::fs::copy(fixture(name), dir.path().join(name)).unwrap();
    }
    let csv = dir.path().join("out.csv");
    std::fs::create_dir(dir.path().join("sub")).unwrap();
    let args = ["bench", "--dir", dir.path().to_str().unwrap(), "--out", csv.to_str().unwrap()];
    let (code, _) = run_in_process(&args);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "instance,n,total_weight,solver,weight,oracle,ratio,millis");
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.len() == 8));
    assert_eq!(rows[0][0], "t1.tree");
    assert!(rows.iter().any(|r| r[0] == "tree_n5_seed42.tree"));
    for r in rows.iter().filter(|r| r[0] == "t1.tree") {
        assert_eq!((r[1], r[2], r[5]), ("5", "9", "3"));
        let w: u64 = r[4].parse().unwrap();
        assert!((3..=6).contains(&w), "{r:?}");
    }
}

#[test]
fn verify_agrees_with_dual_safety() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.tree");
    let mut rng = SeededRng::new(5);
    for seed in 0..1000u64 {
        let n = 1 + (seed % 9) as usize;
        let shape = random_tree(n, seed, 1, 1).unwrap();
        let (minus, plus) = random_dual_weights(n, 5, seed);
        let tree = WeightedTree::new(n, shape.edge_list(), minus.clone()).unwrap();
        let dw = DualWeights::new(n, minus, plus).unwrap();
        let set: VertexSet = (1..=n).filter(|_| rng.index(2) == 1).collect();
        let instance = Instance::DualTree(tree.clone(), dw.clone());
        std::fs::write(&path, write_instance(&instance, &[])).unwrap();
        let ids: Vec<String> = set.iter().map(|v| v.to_string()).collect();
        let (code, out) = run_in_process(&["verify", "--input", path.to_str().unwrap(), "--set", &ids.join(",")]);
        let safe = is_dual_safe(&tree, &dw, &set).unwrap();
        assert_eq!(code == 0, safe, "seed {seed} set {set}: {out}");
        assert_eq!(out.starts_with("SAFE"), safe);
    }
}

fn arb_instance() -> impl Strategy<Value = Instance> {
    (1usize..12, any::<u64>(), 0u8..3).prop_map(|(n, seed, kind)| match kind {
        0 => Instance::Tree(random_tree(n, seed, 20, 0).unwrap()),
        1 => {
            let shape = random_tree(n, seed, 1, 1).unwrap();
            let (minus, plus) = random_dual_weights(n, 20, seed);
            let tree = WeightedTree::new(n, shape.edge_list(), minus.clone()).unwrap();
            Instance::DualTree(tree, DualWeights::new(n, minus, plus).unwrap())
        }
        _ => {
            let sizes: Vec<usize> = (0..1 + n % 4).map(|i| 2 + (i + n) % 3).collect();
            let g = random_block_graph(&sizes, seed).unwrap();
            let w = (0..g.order() as u64).map(|v| (v * (seed % 97)) % 7).collect();
            Instance::Graph(g, w)
        }
    })
}

proptest! {
    #[test]
    fn write_then_parse_round_trips(instance in arb_instance(), comment in "[a-z0-9 =]{0,20}") {
        let text = write_instance(&instance, &[comment]);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &instance);
        prop_assert_eq!(write_instance(&back, &[]), write_instance(&instance, &[]));
    }
}
