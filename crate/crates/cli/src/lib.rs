//! Command-line front end: instance files, solvers, verification,
//! generators and a CSV benchmark runner.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use safeset_core::approx2::two_approx;
use safeset_core::blockgraph::{safe_upper_construct_detailed, BoundBranch};
use safeset_core::exact::solve_exact;
use safeset_core::fptas::fptas_solve;
use safeset_core::graph::{is_connected_set, safety_violation, DualWeights, Graph, VertexSet, Weight, WeightedTree};
use safeset_core::instances::{random_block_graph, random_tree, ratio_bounded_weights, subset_sum_star, GENERATOR};
use safeset_core::oracle::{brute_connected_safe_min, brute_safe_min, DEFAULT_CAP};
use safeset_core::ptas::ptas_solve;
use safeset_core::{Rational, Solution};
use thiserror::Error;

pub use format::{parse_instance, write_instance, write_solution, Instance, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Solver(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Io(_) | CliError::Solver(_) => 3,
        }
    }
}

fn solver_err(e: impl std::fmt::Display) -> CliError {
    CliError::Solver(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "safeset", version, about = "Minimum-weight connected safe sets in trees and block graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a connected safe set of a tree.
    Solve(SolveArgs),
    /// Exhaustive optimum (small instances only).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Minimize over all safe sets, not only connected ones.
        #[arg(long)]
        safe_number: bool,
    },
    /// Check whether a vertex set is safe.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex ids (may be empty).
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Small connected safe set of an unweighted block graph.
    Blockbound {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run every applicable solver on each instance in a directory.
    Bench {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algorithm {
    Exact,
    Approx2,
    Ptas,
    Fptas,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(value_enum)]
    algorithm: Algorithm,
    #[arg(long)]
    input: PathBuf,
    /// Weight budget for the exact solver (default: the 2-approximation's weight).
    #[arg(long)]
    budget: Option<Weight>,
    /// Approximation parameter as p/q.
    #[arg(long)]
    eps: Option<String>,
    /// Bound M on w_max / w_min for fptas (default: ceil(w_max / w_min)).
    #[arg(long)]
    ratio: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Random labeled tree.
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        w_max: Weight,
        #[arg(long, default_value_t = 0)]
        w_min: Weight,
        /// Reweight uniformly in [base, ratio * base] instead.
        #[arg(long, requires = "base")]
        ratio: Option<u64>,
        #[arg(long, requires = "ratio")]
        base: Option<Weight>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Star built from a restricted subset-sum instance.
    StarSubsetSum {
        /// Comma-separated positive integers.
        #[arg(long)]
        c: String,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random block graph from clique sizes.
    Blockgraph {
        /// Comma-separated block sizes, each at least 2.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a command: text for stdout and the exit status.
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command) -> Result<Output, CliError> {
    match cmd {
        Command::Solve(args) => solve(args),
        Command::Oracle { input, safe_number } => oracle(&load(&input)?, safe_number),
        Command::Verify { input, set } => verify(&load(&input)?, &set),
        Command::Gen { kind } => generate(kind),
        Command::Blockbound { input } => blockbound(&load(&input)?),
        Command::Bench { dir, out } => bench(&dir, &out),
    }
}

pub fn load(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn single_tree<'a>(instance: &'a Instance, what: &str) -> Result<&'a WeightedTree, CliError> {
    match instance {
        Instance::Tree(t) => Ok(t),
        other => Err(CliError::Usage(format!("{what} needs a `tree` instance, got `{}`", other.kind()))),
    }
}

fn parse_eps(text: &str) -> Result<Rational, CliError> {
    let eps: Rational = text
        .parse()
        .map_err(|e| CliError::Usage(format!("--eps: {e} (give an exact fraction such as 1/3)")))?;
    if eps.num() == 0 {
        return Err(CliError::Usage("--eps must be positive".into()));
    }
    Ok(eps)
}

/// `⌈w_max / w_min⌉`, or 1 for an all-zero tree.
pub fn default_ratio(tree: &WeightedTree) -> Result<u64, CliError> {
    let (hi, lo) = (tree.max_weight(), tree.min_weight());
    match (hi, lo) {
        (0, _) => Ok(1),
        (_, 0) => Err(CliError::Solver(
            "fptas: a zero weight next to a positive one has no finite weight ratio".into(),
        )),
        _ => Ok(hi.div_ceil(lo)),
    }
}

fn solution_line(s: &Solution) -> String {
    write_solution(&s.set, s.weight) + "\n"
}

fn solve(args: SolveArgs) -> Result<Output, CliError> {
    let instance = load(&args.input)?;
    if args.algorithm != Algorithm::Exact && args.budget.is_some() {
        return Err(CliError::Usage("--budget only applies to the exact solver".into()));
    }
    if matches!(args.algorithm, Algorithm::Exact | Algorithm::Approx2) && (args.eps.is_some() || args.ratio.is_some()) {
        return Err(CliError::Usage("--eps/--ratio only apply to ptas and fptas".into()));
    }
    let solution = match args.algorithm {
        Algorithm::Exact => {
            let (tree, dw) = match &instance {
                Instance::Tree(t) => (t, DualWeights::uniform(t)),
                Instance::DualTree(t, dw) => (t, dw.clone()),
                Instance::Graph(..) => return Err(CliError::Usage("solve needs a tree instance".into())),
            };
            let budget = match (args.budget, &instance) {
                (Some(b), _) => b,
                (None, Instance::Tree(t)) => two_approx(t).weight,
                (None, _) => dw.total_minus(),
            };
            match solve_exact(tree, &dw, budget).map_err(solver_err)? {
                Some(s) => s,
                None => {
                    return Ok(Output {
                        stdout: format!("infeasible: no connected safe set of weight at most {budget}\n"),
                        code: 1,
                    })
                }
            }
        }
        Algorithm::Approx2 => two_approx(single_tree(&instance, "approx2")?),
        Algorithm::Ptas => {
            let tree = single_tree(&instance, "ptas")?;
            let eps = parse_eps(args.eps.as_deref().unwrap_or("1"))?;
            if args.ratio.is_some() {
                return Err(CliError::Usage("--ratio only applies to fptas".into()));
            }
            ptas_solve(tree, eps).map_err(solver_err)?
        }
        Algorithm::Fptas => {
            let tree = single_tree(&instance, "fptas")?;
            let m = match args.ratio {
                Some(m) => m,
                None => default_ratio(tree)?,
            };
            let eps = match &args.eps {
                Some(e) => parse_eps(e)?,
                None => Rational::new(1, m.max(3)).expect("nonzero denominator"),
            };
            fptas_solve(tree, eps, m).map_err(solver_err)?
        }
    };
    Ok(Output::ok(solution_line(&solution)))
}

fn oracle(instance: &Instance, safe_number: bool) -> Result<Output, CliError> {
    let best = match (instance, safe_number) {
        (Instance::Tree(t), false) => brute_connected_safe_min(t, t.weights(), t.weights(), DEFAULT_CAP),
        (Instance::Tree(t), true) => brute_safe_min(t, t.weights(), DEFAULT_CAP),
        (Instance::DualTree(t, dw), false) => brute_connected_safe_min(t, dw.minus_weights(), dw.plus_weights(), DEFAULT_CAP),
        (Instance::DualTree(..), true) => {
            return Err(CliError::Usage("--safe-number needs single weights".into()));
        }
        (Instance::Graph(g, w), false) => brute_connected_safe_min(g, w, w, DEFAULT_CAP),
        (Instance::Graph(g, w), true) => brute_safe_min(g, w, DEFAULT_CAP),
    }
    .map_err(solver_err)?;
    Ok(Output::ok(write_solution(&best.set, best.weight) + "\n"))
}

pub fn parse_set(text: &str, n: usize) -> Result<VertexSet, CliError> {
    if text.is_empty() {
        return Ok(VertexSet::empty());
    }
    let mut ids = Vec::new();
    for tok in text.split(',') {
        let v: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("--set: bad vertex id {tok:?}")))?;
        if v == 0 || v > n {
            return Err(CliError::Usage(format!("--set: vertex {v} outside 1..{n}")));
        }
        ids.push(v);
    }
    Ok(ids.into_iter().collect())
}

fn verify(instance: &Instance, set: &str) -> Result<Output, CliError> {
    let s = parse_set(set, instance.order())?;
    let violation = match instance {
        Instance::Tree(t) => safety_violation(t, |v| t.weight(v), |v| t.weight(v), &s),
        Instance::DualTree(t, dw) => safety_violation(t, |v| dw.minus(v), |v| dw.plus(v), &s),
        Instance::Graph(g, w) => safety_violation(g, |v| w[v - 1], |v| w[v - 1], &s),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(match violation {
        None => Output::ok("SAFE\n".into()),
        Some(v) => Output {
            stdout: format!("UNSAFE {v}\n"),
            code: 1,
        },
    })
}

fn emit(text: String, out: Option<PathBuf>) -> Result<Output, CliError> {
    match out {
        None => Ok(Output::ok(text)),
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Output::ok(String::new()))
        }
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("{what}: bad entry {t:?}"))))
        .collect()
}

fn generate(kind: GenKind) -> Result<Output, CliError> {
    let generator = format!("generator {GENERATOR}");
    match kind {
        GenKind::Tree {
            n,
            seed,
            w_max,
            w_min,
            ratio,
            base,
            out,
        } => {
            let mut tree = random_tree(n, seed, w_max, w_min).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut params = format!("gen tree n={n} seed={seed} w_max={w_max} w_min={w_min}");
            if let (Some(m), Some(b)) = (ratio, base) {
                tree = ratio_bounded_weights(&tree, m, seed, b).map_err(|e| CliError::Usage(e.to_string()))?;
                write!(params, " ratio={m} base={b}").unwrap();
            }
            emit(write_instance(&Instance::Tree(tree), &[generator, params]), out)
        }
        GenKind::StarSubsetSum { c, k, out } => {
            let values = parse_list(&c, "--c")?;
            let tree = subset_sum_star(&values, k).map_err(|e| CliError::Usage(e.to_string()))?;
            let params = format!("gen star-subset-sum c={c} k={k}");
            emit(write_instance(&Instance::Tree(tree), &[params]), out)
        }
        GenKind::Blockgraph { sizes, seed, out } => {
            let sizes: Vec<usize> = parse_list(&sizes, "--sizes")?.into_iter().map(|s| s as usize).collect();
            let g = random_block_graph(&sizes, seed).map_err(|e| CliError::Usage(e.to_string()))?;
            let list: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
            let params = format!("gen blockgraph sizes={} seed={seed}", list.join(","));
            let ones = vec![1; g.order()];
            emit(write_instance(&Instance::Graph(g, ones), &[generator, params]), out)
        }
    }
}

fn blockbound(instance: &Instance) -> Result<Output, CliError> {
    let Instance::Graph(g, _) = instance else {
        return Err(CliError::Usage("blockbound needs a `graph` instance".into()));
    };
    let report = safe_upper_construct_detailed(g).map_err(solver_err)?;
    let branch = match report.branch {
        BoundBranch::LargeBlock => "large-block",
        BoundBranch::LocalSearch => "local-search",
    };
    let mut text = format!(
        "bound={} omega={} branch={branch} fallback={}\n",
        report.bound, report.omega, report.used_fallback
    );
    text += &write_solution(&report.set, report.set.len() as Weight);
    text.push('\n');
    Ok(Output::ok(text))
}

/// One CSV row per (instance, solver).
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub total_weight: Weight,
    pub solver: &'static str,
    pub weight: Result<Weight, String>,
    pub oracle: Option<Weight>,
    pub millis: f64,
}

impl BenchRow {
    fn ratio(&self) -> String {
        match (&self.weight, self.oracle) {
            (Ok(w), Some(0)) => if *w == 0 { "1".into() } else { "inf".into() },
            (Ok(w), Some(o)) => format!("{:.4}", *w as f64 / o as f64),
            _ => String::new(),
        }
    }

    fn csv(&self) -> String {
        let weight = match &self.weight {
            Ok(w) => w.to_string(),
            Err(e) => format!("error: {}", e.replace([',', '\n'], " ")),
        };
        let oracle = self.oracle.map(|o| o.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{:.3}",
            self.instance,
            self.n,
            self.total_weight,
            self.solver,
            weight,
            oracle,
            self.ratio(),
            self.millis
        )
    }
}

pub const BENCH_HEADER: &str = "instance,n,total_weight,solver,weight,oracle,ratio,millis";

fn timed<F: FnOnce() -> Result<Weight, String>>(f: F) -> (Result<Weight, String>, f64) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed().as_secs_f64() * 1000.0)
}

/// Rows for one instance.
pub fn bench_instance(name: &str, instance: &Instance) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    let n = instance.order();
    let mut push = |solver, total_weight, (weight, millis): (Result<Weight, String>, f64), oracle| {
        rows.push(BenchRow {
            instance: name.to_string(),
            n,
            total_weight,
            solver,
            weight,
            oracle,
            millis,
        })
    };
    match instance {
        Instance::Tree(t) => {
            let oracle = brute_connected_safe_min(t, t.weights(), t.weights(), DEFAULT_CAP).ok().map(|o| o.weight);
            let total = t.total_weight();
            push(
                "exact",
                total,
                timed(|| {
                    let budget = two_approx(t).weight;
                    solve_exact(t, &DualWeights::uniform(t), budget)
                        .map_err(|e| e.to_string())?
                        .map(|s| s.weight)
                        .ok_or_else(|| "no solution within budget".to_string())
                }),
                oracle,
            );
            push("approx2", total, timed(|| Ok(two_approx(t).weight)), oracle);
            push(
                "ptas",
                total,
                timed(|| ptas_solve(t, Rational::integer(1)).map(|s| s.weight).map_err(|e| e.to_string())),
                oracle,
            );
            push(
                "fptas",
                total,
                timed(|| {
                    let m = default_ratio(t).map_err(|e| e.to_string())?;
                    let eps = Rational::new(1, m.max(3)).expect("nonzero denominator");
                    fptas_solve(t, eps, m).map(|s| s.weight).map_err(|e| e.to_string())
                }),
                oracle,
            );
        }
        Instance::DualTree(t, dw) => {
            let oracle = brute_connected_safe_min(t, dw.minus_weights(), dw.plus_weights(), DEFAULT_CAP)
                .ok()
                .map(|o| o.weight);
            push(
                "exact",
                dw.total_minus(),
                timed(|| {
                    solve_exact(t, dw, dw.total_minus())
                        .map_err(|e| e.to_string())?
                        .map(|s| s.weight)
                        .ok_or_else(|| "no solution within budget".to_string())
                }),
                oracle,
            );
        }
        Instance::Graph(g, _) => {
            let ones = vec![1; g.order()];
            let oracle = brute_connected_safe_min(g, &ones, &ones, DEFAULT_CAP).ok().map(|o| o.weight);
            push(
                "blockbound",
                g.order() as Weight,
                timed(|| {
                    let r = safe_upper_construct_detailed(g).map_err(|e| e.to_string())?;
                    debug_assert!(is_connected_set(g, &r.set).unwrap());
                    Ok(r.set.len() as Weight)
                }),
                oracle,
            );
        }
    }
    rows
}

fn bench(dir: &Path, out: &Path) -> Result<Output, CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", dir.display()));
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    files.retain(|p| p.is_file());
    files.sort();
    let mut csv = String::from(BENCH_HEADER);
    csv.push('\n');
    for path in &files {
        let instance = load(path)?;
        let name = path.file_name().unwrap_or_default().to_string_lossy();
        for row in bench_instance(&name, &instance) {
            csv += &row.csv();
            csv.push('\n');
        }
    }
    std::fs::write(out, csv).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    Ok(Output::ok(format!("wrote {} instances to {}\n", files.len(), out.display())))
}
