use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use idom::codec::{to_edge_list, to_graph6};
use idom::families::{ExampleId, ExtremalId, TroublesomeKind};
use idom::recognition::weight_report;
use idom::SubcubicGraph;
use idom_cli::input::{parse_graph, InputFormat};
use idom_cli::sweeps::{
    default_jobs, run_verify_cubic, run_verify_dorbec, run_verify_props, run_verify_subcubic,
};
use idom_cli::{gen, SweepReport};

/// Exit codes: 0 clean, 1 verification failures, 2 usage or input errors.
#[derive(Parser)]
#[command(
    name = "idom",
    version,
    about = "Verification toolkit for independent domination in subcubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the weight ledger of one graph and print it as JSON.
    Solve(SolveArgs),
    /// Check 8i <= 3n over all connected cubic graphs up to an order.
    VerifyCubic(CubicArgs),
    /// Check 8i <= w + Theta over all connected subcubic graphs up to an order.
    VerifySubcubic(SubcubicArgs),
    /// Check 8i <= w over connected subcubic graphs without the complete
    /// bipartite 2x3 pattern.
    VerifyDorbec(SubcubicArgs),
    /// Run the randomized structural-law suites.
    VerifyProps(PropsArgs),
    /// Emit a member of one of the built-in graph families.
    Gen(GenArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Input file (stdin when omitted).
    path: Option<PathBuf>,
    /// Input form: g6 or edges.
    #[arg(long, default_value = "g6")]
    format: InputFormat,
}

#[derive(Args)]
struct SweepOut {
    /// Worker threads (default: all available).
    #[arg(long)]
    jobs: Option<usize>,
    /// Print the full JSON report instead of the summary.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to a file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CubicArgs {
    /// Largest order to sweep.
    #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u64).range(4..=14))]
    max_n: u64,
    #[command(flatten)]
    sweep: SweepOut,
}

#[derive(Args)]
struct SubcubicArgs {
    /// Largest order to sweep.
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..=10))]
    max_n: u64,
    #[command(flatten)]
    sweep: SweepOut,
}

#[derive(Args)]
struct PropsArgs {
    /// Trials per suite.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Generator seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    sweep: SweepOut,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum KindArg {
    Type1,
    Type2,
}

impl From<KindArg> for TroublesomeKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Type1 => TroublesomeKind::Type1,
            KindArg::Type2 => TroublesomeKind::Type2,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output form: g6 (one line) or edges (order, then one edge per line).
    #[arg(long, default_value = "g6")]
    format: InputFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Subcommand)]
enum GenFamily {
    /// A bad-family member with k five-vertex units.
    Bad {
        #[arg(long)]
        k: usize,
        /// Comma-separated attachment targets, one per unit after the
        /// first; defaults to a path of units.
        #[arg(long, value_delimiter = ',')]
        attachments: Option<Vec<u32>>,
        /// Draw a random spec instead.
        #[arg(long, conflicts_with = "attachments")]
        seed: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A troublesome fragment over a k-unit bad part.
    Troublesome {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        attachments: Option<Vec<u32>>,
        #[arg(long, conflicts_with = "attachments")]
        seed: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One of the fixed equality examples (fig9a, fig9b, f1, f2, f3, fig11).
    Example {
        id: ExampleId,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A ring-construction extremal graph (fig2a, fig2b, fig3); refuses to
    /// emit anything that fails its own solve check.
    Extremal {
        id: ExtremalId,
        #[arg(long)]
        blocks: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve(args) => {
            let text = read_input(args.path.as_deref())?;
            let g = parse_graph(&text, args.format)?;
            println!("{}", serde_json::to_string_pretty(&weight_report(&g))?);
            Ok(true)
        }
        Command::VerifyCubic(args) => {
            finish_sweep(run_verify_cubic(args.max_n as usize, jobs(&args.sweep)), &args.sweep)
        }
        Command::VerifySubcubic(args) => {
            finish_sweep(run_verify_subcubic(args.max_n as usize, jobs(&args.sweep)), &args.sweep)
        }
        Command::VerifyDorbec(args) => {
            finish_sweep(run_verify_dorbec(args.max_n as usize, jobs(&args.sweep)), &args.sweep)
        }
        Command::VerifyProps(args) => {
            finish_sweep(run_verify_props(args.trials as usize, args.seed), &args.sweep)
        }
        Command::Gen(args) => {
            let (graph, output) = match args.family {
                GenFamily::Bad { k, attachments, seed, output } => {
                    (gen::gen_bad(k, attachments, seed)?, output)
                }
                GenFamily::Troublesome { kind, k, attachments, seed, output } => {
                    (gen::gen_troublesome(kind.into(), k, attachments, seed)?, output)
                }
                GenFamily::Example { id, output } => (gen::gen_example(id), output),
                GenFamily::Extremal { id, blocks, output } => {
                    (gen::gen_extremal(id, blocks)?, output)
                }
            };
            emit(&graph, &output)?;
            Ok(true)
        }
    }
}

fn jobs(sweep: &SweepOut) -> usize {
    sweep.jobs.unwrap_or_else(default_jobs)
}

fn finish_sweep(report: SweepReport, out: &SweepOut) -> Result<bool> {
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = &out.out {
        fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    if out.json {
        println!("{json}");
    } else {
        print!("{}", report.summary());
    }
    Ok(report.passed())
}

fn emit(g: &SubcubicGraph, output: &OutputArgs) -> Result<()> {
    let text = match output.format {
        InputFormat::Graph6 => format!("{}\n", to_graph6(g)),
        InputFormat::EdgeList => to_edge_list(g),
    };
    match &output.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
            Ok(text)
        }
    }
}
