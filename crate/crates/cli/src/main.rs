use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use treedyn::block::{block_tree_for_set, block_tree_to_dot, enumerate_block, enumerate_block_items};
use treedyn::dynamics::{run_orbit_with_guard, orbit_guard, step, Coloring, ProcessKind};
use treedyn::edges::{edge_class, EdgeClass};
use treedyn::fixed::{check_count_bounds, count_fix, enumerate_fix, fib_bound};
use treedyn::generate::{enumerate_trees, random_tree_with, MAX_ENUMERATION_N};
use treedyn::io::{parse_tree, tree_to_dot, write_tree};
use treedyn::oracle::{csv_row, verify_tree_with, Mutation, CSV_HEADER};
use treedyn::pure::{enumerate_pure, pure_sets};
use treedyn::report::{BlockEnumerationJson, EnumerationJson};
use treedyn::{EdgeSubset, Error, Tree};

const EXIT_PARSE: u8 = 1;
const EXIT_CONSTRAINT: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

/// Fixed points and 2-cycles of the minority and majority processes on trees.
///
/// Exit codes: 1 parse error, 2 constraint violation, 3 orbit guard
/// exceeded, 4 mismatch against the brute-force oracle.
#[derive(Parser)]
#[command(name = "treedyn", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List legal edge sets with their colorings.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Fixed)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = ProcessArg::Min)]
        process: ProcessArg,
        /// Print only the counts.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
        /// Also print the complement of every representative.
        #[arg(long)]
        both_representatives: bool,
    },
    /// Run the process from a coloring until it becomes periodic.
    Simulate {
        file: PathBuf,
        /// One character per node, e.g. 01101.
        #[arg(long)]
        coloring: String,
        #[arg(long, value_enum, default_value_t = ProcessArg::Min)]
        process: ProcessArg,
        /// Round limit; defaults to 4 n^2.
        #[arg(long)]
        max_rounds: Option<usize>,
    },
    /// Compare every enumerator with the brute-force oracle on all trees up to a size.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = ProcessesArg::Both)]
        processes: ProcessesArg,
        /// Print per-tree oracle counts as CSV.
        #[arg(long)]
        csv: bool,
        #[arg(long, value_enum, hide = true)]
        mutate: Option<MutateArg>,
    },
    /// Family sizes on uniformly random labelled trees, as CSV.
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a tree or a block tree.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = WhatArg::Tree)]
        what: WhatArg,
        /// Block edge set as comma-separated edge indices.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ProcessArg::Min)]
        process: ProcessArg,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Fixed,
    Pure,
    Block,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProcessArg {
    Min,
    Maj,
}

impl From<ProcessArg> for ProcessKind {
    fn from(p: ProcessArg) -> Self {
        match p {
            ProcessArg::Min => ProcessKind::Minority,
            ProcessArg::Maj => ProcessKind::Majority,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProcessesArg {
    Both,
    Min,
    Maj,
}

impl ProcessesArg {
    fn kinds(self) -> Vec<ProcessKind> {
        match self {
            ProcessesArg::Both => ProcessKind::BOTH.to_vec(),
            ProcessesArg::Min => vec![ProcessKind::Minority],
            ProcessesArg::Maj => vec![ProcessKind::Majority],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MutateArg {
    StrictFixBudget,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Tree,
    Blocktree,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::GuardExceeded(_) => EXIT_GUARD,
            _ => EXIT_CONSTRAINT,
        };
        Failure::new(code, e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Ok(parse_tree(&text)?)
}

fn print_json<T: serde::Serialize>(value: &T) -> CliResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::new(EXIT_CONSTRAINT, e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn cmd_enumerate(
    tree: &Tree,
    kind: KindArg,
    process: ProcessKind,
    count_only: bool,
    json: bool,
    both: bool,
) -> CliResult {
    if let KindArg::Block = kind {
        if count_only {
            let sets = enumerate_block(tree)?.len();
            println!("representatives: {sets}, total: {sets}");
            return Ok(());
        }
        let items = enumerate_block_items(tree, process)?;
        if json {
            return print_json(&BlockEnumerationJson::from_items(tree.n(), process, &items, both));
        }
        for item in &items {
            let blocks: Vec<String> = item
                .block_tree
                .blocks()
                .map(|(nodes, k)| format!("{k:?}{nodes:?}").to_lowercase())
                .collect();
            println!("edges {:?}  coloring {}  blocks {}", item.edges, item.canonical_coloring, blocks.join(" "));
            if both {
                println!("edges {:?}  coloring {}", item.edges, item.canonical_coloring.complement());
            }
        }
        println!("representatives: {}, total: {}", items.len(), items.len());
        return Ok(());
    }

    if count_only {
        let reps = match kind {
            KindArg::Fixed => count_fix(tree, process) as usize,
            _ => pure_sets(tree).sets.len(),
        };
        println!("representatives: {reps}, total: {}", 2 * reps);
        return Ok(());
    }
    let result = match kind {
        KindArg::Fixed => enumerate_fix(tree, process),
        _ => enumerate_pure(tree, process),
    };
    if json {
        return print_json(&EnumerationJson::from_result(tree.n(), &result, both));
    }
    for r in &result.items {
        println!("edges {:?}  coloring {}", r.edges, r.coloring);
        if both {
            println!("edges {:?}  coloring {}", r.edges, r.coloring.complement());
        }
    }
    println!("representatives: {}, total: {}", result.items.len(), result.total);
    Ok(())
}

fn cmd_simulate(tree: &Tree, coloring: &str, process: ProcessKind, max_rounds: Option<usize>) -> CliResult {
    let start: Coloring = coloring.parse()?;
    let guard = max_rounds.unwrap_or_else(|| orbit_guard(tree.n()));
    let orbit = run_orbit_with_guard(tree, &start, process, guard)?;
    let mut c = start;
    for round in 0..=orbit.transient + orbit.period {
        println!("round {round}: {c}");
        c = step(tree, &c, process)?;
    }
    println!("transient: {}", orbit.transient);
    println!("period: {}", orbit.period);
    Ok(())
}

fn cmd_verify(max_n: usize, processes: &[ProcessKind], csv: bool, mutation: Mutation) -> CliResult {
    if max_n == 0 || max_n > MAX_ENUMERATION_N {
        return Err(Failure::new(
            EXIT_CONSTRAINT,
            format!("--max-n must be in 1..={MAX_ENUMERATION_N}"),
        ));
    }
    if csv {
        println!("{CSV_HEADER}");
    }
    for n in 1..=max_n {
        let trees = enumerate_trees(n)?;
        let reports = trees
            .par_iter()
            .map(|t| verify_tree_with(t, processes, mutation))
            .collect::<Result<Vec<_>, _>>()?;
        for (i, (tree, report)) in trees.iter().zip(&reports).enumerate() {
            if csv {
                for (kind, counts) in &report.counts {
                    println!("{}", csv_row(&format!("n{n}_{i}"), *kind, counts));
                }
            }
            if let Some(m) = &report.mismatch {
                eprintln!("mismatch on tree n{n}_{i} ({} {}): {}", m.process, m.family, m.detail);
                eprint!("{}", write_tree(tree));
                return Err(Failure::new(EXIT_MISMATCH, "verification failed"));
            }
        }
        if !csv {
            println!("n = {n}: {} trees ok", trees.len());
        }
    }
    Ok(())
}

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    (mean, var)
}

/// Block sets are counted by scanning subsets of E^{2.5}; skip larger ones.
const STATS_BLOCK_LIMIT: usize = 20;

struct Sample {
    delta: usize,
    e_fix: u64,
    e_pure: usize,
    e_block: Option<usize>,
    e3: usize,
}

fn cmd_stats(n: usize, samples: usize, seed: u64) -> CliResult {
    if n < 2 || samples == 0 {
        return Err(Failure::new(EXIT_CONSTRAINT, "stats needs --n >= 2 and --samples >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trees = (0..samples)
        .map(|_| random_tree_with(n, &mut rng))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Sample> = trees
        .par_iter()
        .map(|t| {
            let e25 = edge_class(t, EdgeClass::E25).len();
            let e_block = (e25 <= STATS_BLOCK_LIMIT).then(|| enumerate_block(t).map(|s| s.len()).unwrap_or(0));
            Sample {
                delta: t.max_degree(),
                e_fix: count_fix(t, ProcessKind::Minority),
                e_pure: pure_sets(t).sets.len(),
                e_block,
                e3: edge_class(t, EdgeClass::E3).len(),
            }
        })
        .collect();

    println!("sample,n,max_degree,e_fix,e_pure,e_block,fix_bound_slack,e3_bound_slack");
    for (i, (t, s)) in trees.iter().zip(&rows).enumerate() {
        let total = 2 * s.e_fix as u128;
        check_count_bounds(t, total)?;
        let slack = fib_bound(n, s.delta) - total;
        let e3_slack = if n >= 4 {
            format!("{:.1}", (n as f64 - 4.0) / 2.0 - s.e3 as f64)
        } else {
            String::new()
        };
        let block = s.e_block.map(|b| b.to_string()).unwrap_or_default();
        println!("{i},{n},{},{},{},{block},{slack},{e3_slack}", s.delta, s.e_fix, s.e_pure);
    }
    let fix: Vec<f64> = rows.iter().map(|s| s.e_fix as f64).collect();
    let pure: Vec<f64> = rows.iter().map(|s| s.e_pure as f64).collect();
    let block: Vec<f64> = rows.iter().filter_map(|s| s.e_block.map(|b| b as f64)).collect();
    for (name, xs) in [("e_fix", &fix), ("e_pure", &pure), ("e_block", &block)] {
        if xs.is_empty() {
            println!("# {name}: no samples");
        } else {
            let (mean, var) = mean_var(xs);
            println!("# {name}: mean {mean:.4}, variance {var:.4}, samples {}", xs.len());
        }
    }
    Ok(())
}

fn cmd_export(tree: &Tree, what: WhatArg, edges: &[usize], process: ProcessKind, dot: bool) -> CliResult {
    match what {
        WhatArg::Tree => {
            if dot {
                print!("{}", tree_to_dot(tree));
            } else {
                print!("{}", write_tree(tree));
            }
        }
        WhatArg::Blocktree => {
            let f = EdgeSubset::from_edges(tree, edges.iter().copied())?;
            let bt = block_tree_for_set(tree, &f, process)?;
            if dot {
                print!("{}", block_tree_to_dot(tree, &bt));
            } else {
                for (b, (nodes, kind)) in bt.blocks().enumerate() {
                    println!("block {b} {}: {nodes:?}", format!("{kind:?}").to_lowercase());
                }
                for &(a, b, e) in bt.forest.quotient_edges() {
                    println!("edge {e}: block {a} -- block {b}");
                }
            }
        }
    }
    Ok(())
}

fn configure_threads() -> CliResult {
    if let Ok(value) = std::env::var("TREEDYN_THREADS") {
        let threads: usize = value
            .parse()
            .map_err(|_| Failure::new(EXIT_PARSE, format!("TREEDYN_THREADS={value:?} is not a number")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::new(EXIT_CONSTRAINT, e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    configure_threads()?;
    match cli.command {
        Command::Enumerate {
            file,
            kind,
            process,
            count_only,
            json,
            both_representatives,
        } => cmd_enumerate(&read_tree(&file)?, kind, process.into(), count_only, json, both_representatives),
        Command::Simulate {
            file,
            coloring,
            process,
            max_rounds,
        } => cmd_simulate(&read_tree(&file)?, &coloring, process.into(), max_rounds),
        Command::Verify {
            max_n,
            processes,
            csv,
            mutate,
        } => {
            let mutation = match mutate {
                Some(MutateArg::StrictFixBudget) => Mutation::StrictFixBudget,
                None => Mutation::None,
            };
            cmd_verify(max_n, &processes.kinds(), csv, mutation)
        }
        Command::Stats { n, samples, seed } => cmd_stats(n, samples, seed),
        Command::Export {
            file,
            what,
            edges,
            process,
            dot,
        } => cmd_export(&read_tree(&file)?, what, &edges, process.into(), dot),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
