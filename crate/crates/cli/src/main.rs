//! `crcs`: decide, kernelize, reduce and generate color-swap
//! reconfiguration instances.
//!
//! Exit codes: 0 YES, 1 NO, 2 error, 3 search budget exhausted.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use crcs::cograph::{solve_crcs_with_cotree, Cotree};
use crcs::format::{parse_crcs, parse_instance, to_dot, write_crcs, InstanceFile};
use crcs::gen::{generate, generate_min_k, GraphKind};
use crcs::oracle::SearchBudget;
use crcs::reductions::{ncl_to_3crcs, svr_to_kcrcs, ts_bipartite_to_crcs, ts_split_to_crcs, GadgetLayout};
use crcs::solve::{solve, Report, Solver};
use crcs::split::{kernelize, KernelResult};
use crcs::{Error, Instance};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;

#[derive(Parser)]
#[command(name = "crcs", version, about = "Coloring reconfiguration under color swapping")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the target coloring is reachable from the source.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
        solver: SolverArg,
        /// Print a shortest swap sequence (oracle only).
        #[arg(long)]
        witness: bool,
        /// State budget for exhaustive search.
        #[arg(long, default_value_t = SearchBudget::DEFAULT_STATES)]
        budget: usize,
        /// Cotree in S-expression form; implies the cograph solver.
        #[arg(long)]
        cotree: Option<PathBuf>,
    },
    /// Shrink a split-graph instance with the two reduction rules.
    Kernelize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write `removed <v>` lines (default: stderr).
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Build a swap instance from another reconfiguration problem.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write vertex roles and port edges here.
        #[arg(long)]
        layout: Option<PathBuf>,
    },
    /// Generate a random instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Vertex count (same as --n).
        #[arg(value_name = "N", conflicts_with = "n_flag")]
        n_pos: Option<usize>,
        #[arg(long = "n", id = "n_flag")]
        n_flag: Option<usize>,
        /// Number of colors (default: the smallest k >= 3 that admits a
        /// proper coloring of the generated graph).
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Do not force equal color counts between source and target.
        #[arg(long)]
        any_counts: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Graphviz rendering of an instance.
    Dot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Auto,
    Oracle,
    Path,
    Cograph,
    Split,
    K2,
}

impl From<SolverArg> for Solver {
    fn from(s: SolverArg) -> Self {
        match s {
            SolverArg::Auto => Solver::Auto,
            SolverArg::Oracle => Solver::Oracle,
            SolverArg::Path => Solver::Path,
            SolverArg::Cograph => Solver::Cograph,
            SolverArg::Split => Solver::Split,
            SolverArg::K2 => Solver::K2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    TsSplit,
    TsBipartite,
    SvrChordal,
    Ncl,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Cograph,
    Split,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let overflow = e
                .downcast_ref::<Error>()
                .is_some_and(|e| matches!(e, Error::BudgetExceeded { .. }));
            ExitCode::from(if overflow { EXIT_OVERFLOW } else { EXIT_ERROR })
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Solve {
            file,
            solver,
            witness,
            budget,
            cotree,
        } => cmd_solve(&file, solver.into(), witness, budget, cotree.as_deref()),
        Command::Kernelize { file, output, log } => cmd_kernelize(&file, output.as_deref(), log.as_deref()),
        Command::Reduce {
            kind,
            file,
            output,
            layout,
        } => cmd_reduce(kind, &file, output.as_deref(), layout.as_deref()),
        Command::Gen {
            kind,
            n_pos,
            n_flag,
            k,
            seed,
            any_counts,
            output,
        } => {
            let Some(n) = n_pos.or(n_flag) else {
                bail!("the vertex count is required (positional or --n)");
            };
            let kind = match kind {
                GenKind::Path => GraphKind::Path,
                GenKind::Cograph => GraphKind::Cograph,
                GenKind::Split => GraphKind::Split,
                GenKind::Random => GraphKind::Random,
            };
            let inst = match k {
                Some(k) => generate(kind, n, k, !any_counts, seed)?,
                None => generate_min_k(kind, n, 3, !any_counts, seed)?,
            };
            emit(output.as_deref(), &write_crcs(&inst))?;
            Ok(EXIT_YES)
        }
        Command::Dot { file } => {
            print!("{}", to_dot(&read_crcs(&file)?));
            Ok(EXIT_YES)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_crcs(path: &Path) -> Result<Instance> {
    parse_crcs(&read(path)?).with_context(|| path.display().to_string())
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn cmd_solve(file: &Path, solver: Solver, witness: bool, budget: usize, cotree: Option<&Path>) -> Result<u8> {
    let inst = read_crcs(file)?;
    let report = match cotree {
        Some(path) => {
            let tree: Cotree = read(path)?.trim().parse().with_context(|| path.display().to_string())?;
            Report {
                solver: Solver::Cograph,
                answer: Some(solve_crcs_with_cotree(&inst, &tree)?),
                witness: None,
                states_explored: None,
            }
        }
        None => solve(&inst, solver, &SearchBudget::states(budget))?,
    };
    let Some(answer) = report.answer else {
        println!("OVERFLOW");
        eprintln!("search budget exhausted after {} states", report.states_explored.unwrap_or(0));
        return Ok(EXIT_OVERFLOW);
    };
    println!("{}", if answer { "YES" } else { "NO" });
    if witness {
        match &report.witness {
            Some(w) => {
                for mv in &w.moves {
                    println!("swap {} {}", mv.u, mv.v);
                }
            }
            None if report.solver != Solver::Oracle => {
                eprintln!("note: the {} solver is decision-only; no witness printed", report.solver)
            }
            None => {}
        }
    }
    Ok(if answer { EXIT_YES } else { EXIT_NO })
}

fn cmd_kernelize(file: &Path, output: Option<&Path>, log: Option<&Path>) -> Result<u8> {
    let inst = read_crcs(file)?;
    match kernelize(&inst)? {
        KernelResult::No => {
            println!("NO");
            Ok(EXIT_NO)
        }
        KernelResult::Kernel { instance, removed, .. } => {
            emit(output, &write_crcs(&instance))?;
            let lines: String = removed.iter().map(|v| format!("removed {v}\n")).collect();
            match log {
                Some(p) => fs::write(p, lines).with_context(|| format!("writing {}", p.display()))?,
                None => eprint!("{lines}"),
            }
            Ok(EXIT_YES)
        }
    }
}

fn cmd_reduce(kind: ReduceKind, file: &Path, output: Option<&Path>, layout: Option<&Path>) -> Result<u8> {
    let parsed = parse_instance(&read(file)?).with_context(|| file.display().to_string())?;
    let (inst, roles): (Instance, GadgetLayout) = match (kind, parsed) {
        (ReduceKind::TsSplit, InstanceFile::Ts(ts)) => ts_split_to_crcs(&ts)?,
        (ReduceKind::TsBipartite, InstanceFile::Ts(ts)) => ts_bipartite_to_crcs(&ts)?,
        (ReduceKind::SvrChordal, InstanceFile::Svr(svr)) => {
            if !svr.graph.is_chordal() {
                bail!("svr-chordal needs a chordal graph");
            }
            svr_to_kcrcs(&svr)?
        }
        (ReduceKind::Ncl, InstanceFile::Ncl(ncl)) => ncl_to_3crcs(&ncl)?,
        (_, other) => bail!("this reduction cannot take a {} file", other.kind()),
    };
    emit(output, &write_crcs(&inst))?;
    if let Some(p) = layout {
        fs::write(p, roles.to_sidecar()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(EXIT_YES)
}
