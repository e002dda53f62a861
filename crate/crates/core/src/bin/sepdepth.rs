use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sepdepth::generators::{
    basic, broom_limited, corner_graph_limited, double_broom_limited, exp_sep_graph, random_family,
    BasicKind, RandomFamily,
};
use sepdepth::oracle::treedepth_bruteforce_with_budget;
use sepdepth::pace::{parse_gr, write_gr, write_tree, GrDocument, TreeDocument};
use sepdepth::report::{analyze, search_ratio};
use sepdepth::{
    enumerate_minimal_separators, treedepth, verify_treedepth_decomposition, Budgets, Error, Graph,
    Pruning, SolveConfig, TwMode,
};

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sepdepth",
    version,
    about = "Exact treedepth via minimal separators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PruneArg {
    TwoTw,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwModeArg {
    Exact,
    Heuristic,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an optimal treedepth decomposition
    Solve {
        /// Input .gr file (stdin when omitted)
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "two-tw")]
        prune: PruneArg,
        #[arg(long, value_enum, default_value = "exact")]
        tw_mode: TwModeArg,
        /// Print solver statistics to stderr
        #[arg(long)]
        stats: bool,
    },
    /// List minimal separators, one per line, 1-based
    Seps {
        input: Option<PathBuf>,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Check a tree document against a graph
    Verify { graph: PathBuf, tree: PathBuf },
    /// Brute-force treedepth for small graphs
    Oracle { input: Option<PathBuf> },
    /// Write a generated graph in .gr format
    Generate {
        /// path, cycle, complete, biclique, grid, broom, double-broom, corner,
        /// exp-sep, ktree, cograph or outerplanar
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report bounds, treedepth, separators and graph classes
    Analyze { input: Option<PathBuf> },
    /// Sample graphs and report the largest smallest-optimal-separator to
    /// treewidth ratio
    SearchRatio {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn io_err(path: &Path, e: io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| io_err(p, e)),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    let doc = parse_gr(&read_input(path)?)?;
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    Ok(doc.to_graph())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_err(p, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn params<const N: usize>(family: &str, p: &[usize]) -> Result<[usize; N], Failure> {
    p.try_into().map_err(|_| {
        Failure::Lib(Error::Input(format!(
            "{family} takes {N} parameter(s), got {}",
            p.len()
        )))
    })
}

fn generate(family: &str, p: &[usize], seed: u64, budgets: &Budgets) -> Result<Graph, Failure> {
    let limit = budgets.generator_vertices;
    let g = match family {
        "path" => basic(BasicKind::Path(params::<1>(family, p)?[0]))?,
        "cycle" => basic(BasicKind::Cycle(params::<1>(family, p)?[0]))?,
        "complete" => basic(BasicKind::Complete(params::<1>(family, p)?[0]))?,
        "biclique" => {
            let [a, b] = params(family, p)?;
            basic(BasicKind::CompleteBipartite(a, b))?
        }
        "grid" => {
            let [r, c] = params(family, p)?;
            basic(BasicKind::Grid(r, c))?
        }
        "broom" => {
            let [n, m, k] = params(family, p)?;
            broom_limited(n, m, k, limit)?.graph
        }
        "double-broom" => {
            let [n, m, k] = params(family, p)?;
            double_broom_limited(n, m, k, limit)?.graph
        }
        "corner" => {
            let [n, m, k, l] = params(family, p)?;
            corner_graph_limited(n, m, k, l, limit)?.graph
        }
        "exp-sep" => exp_sep_graph(params::<1>(family, p)?[0])?,
        "ktree" => {
            let [n, k] = params(family, p)?;
            random_family(RandomFamily::KTree { k }, n, seed)?
        }
        "cograph" => random_family(RandomFamily::Cograph, params::<1>(family, p)?[0], seed)?,
        "outerplanar" => random_family(
            RandomFamily::MaximalOuterplanar,
            params::<1>(family, p)?[0],
            seed,
        )?,
        other => {
            return Err(Failure::Lib(Error::Input(format!(
                "unknown family `{other}`"
            ))))
        }
    };
    if g.vertex_count() > limit {
        return Err(Failure::Lib(Error::Budget {
            what: "generator",
            size: g.vertex_count(),
            budget: limit,
        }));
    }
    Ok(g)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budgets = Budgets::from_env()?;
    match cli.command {
        Command::Solve {
            input,
            out,
            prune,
            tw_mode,
            stats,
        } => {
            let g = read_graph(input.as_deref())?;
            let cfg = SolveConfig {
                pruning: match prune {
                    PruneArg::TwoTw => Pruning::TwoTw,
                    PruneArg::None => Pruning::None,
                },
                tw_mode: match tw_mode {
                    TwModeArg::Exact => TwMode::ExactWithinBudget,
                    TwModeArg::Heuristic => TwMode::HeuristicOnly,
                },
                memo_limit: None,
                exact_tw_budget: budgets.exact_tw,
            };
            let sol = treedepth(&g, &cfg)?;
            if stats {
                let s = &sol.stats;
                eprintln!("subproblems={}", s.subproblems);
                eprintln!("separators_enumerated={}", s.separators_enumerated);
                eprintln!("separators_pruned={}", s.separators_pruned);
                eprintln!("max_separator_size={}", s.max_separator_size);
            }
            emit(out.as_deref(), &write_tree(&sol.decomposition))
        }
        Command::Seps { input, max_size } => {
            let g = read_graph(input.as_deref())?;
            let mut text = String::new();
            for s in enumerate_minimal_separators(&g, max_size).iter() {
                let line: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
                text.push_str(&line.join(" "));
                text.push('\n');
            }
            emit(None, &text)
        }
        Command::Verify { graph, tree } => {
            let g = read_graph(Some(&graph))?;
            let doc = TreeDocument::parse_unchecked(&read_input(Some(&tree))?, g.vertex_count())?;
            let (valid, height) = verify_treedepth_decomposition(&g, &doc.to_decomposition())?;
            println!("{height}");
            if !valid {
                return Err(Failure::Verify("not a treedepth decomposition".into()));
            }
            if height != doc.depth {
                return Err(Failure::Verify(format!(
                    "declared depth {} but the tree has height {height}",
                    doc.depth
                )));
            }
            Ok(())
        }
        Command::Oracle { input } => {
            let g = read_graph(input.as_deref())?;
            let td = treedepth_bruteforce_with_budget(&g, budgets.oracle_td)?;
            emit(None, &format!("{td}\n"))
        }
        Command::Generate {
            family,
            params,
            seed,
            out,
        } => {
            let g = generate(&family, &params, seed, &budgets)?;
            emit(out.as_deref(), &write_gr(&GrDocument::from_graph(&g)))
        }
        Command::Analyze { input } => {
            let g = read_graph(input.as_deref())?;
            let report = analyze(&g, &budgets)?;
            emit(
                None,
                &format!("{}\n{}", report.to_text(), report.to_key_values()),
            )
        }
        Command::SearchRatio {
            max_n,
            samples,
            seed,
        } => {
            let r = search_ratio(max_n, samples, seed, &budgets)?;
            let mut text = format!(
                "samples={}\nmeasured={}\nviolations={}\nmax_ratio={}\n",
                r.samples,
                r.measured,
                r.violations,
                r.max_ratio.map_or("n/a".into(), |x| format!("{x:.6}"))
            );
            if let Some(w) = &r.witness {
                text.push_str("witness:\n");
                text.push_str(&write_gr(&GrDocument::from_graph(w)));
            }
            emit(None, &text)?;
            if r.violations > 0 {
                return Err(Failure::Verify(format!(
                    "{} samples exceed twice the treewidth",
                    r.violations
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget { .. } | Error::MemoLimit { .. } => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
