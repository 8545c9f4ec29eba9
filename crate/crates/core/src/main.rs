use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mcbrick::cli::{self, GenerateOptions, VerifyOptions};
use mcbrick::graph::GraphFormat;

#[derive(Parser)]
#[command(name = "mcbrick", version, about = "Removable edges in matching covered graphs and near-bipartite bricks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::G6 => GraphFormat::Graph6,
            Format::Edges => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or `-` for stdin.
    input: String,
    /// Input format; detected from the first line when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report structure, removable edges and doubletons of every input graph.
    Analyze(InputArgs),
    /// Run verification checks over a corpus.
    Verify {
        /// `builtin:cubic:N`, `builtin:cubic:A-B`, `builtin:connected:N`,
        /// `builtin:triladders:N`, a file path, or `-`.
        #[arg(long, required_unless_present = "list_checks")]
        corpus: Option<String>,
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// JSON report path; counterexamples are written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip unparseable graphs with a warning instead of failing.
        #[arg(long)]
        lenient: bool,
        /// List the available checks and exit.
        #[arg(long)]
        list_checks: bool,
    },
    /// Generate tri-ladders.
    Generate {
        #[arg(long, required = true)]
        triladders: bool,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        near_bipartite_only: bool,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        /// Precede each graph with its blueprint as comment lines.
        #[arg(long)]
        blueprints: bool,
    },
    /// Decompose 3-connected cubic graphs along nontrivial 3-cuts.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        /// Search for a decomposition into K4s.
        #[arg(long)]
        k4: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = match cli.command {
        Command::Analyze(a) => cli::cmd_analyze(&a.input, a.format.map(Into::into), a.json, &mut out, &mut err),
        Command::Verify {
            corpus,
            checks,
            workers,
            out: report,
            lenient,
            list_checks,
        } => {
            if list_checks {
                for c in mcbrick::harness::CHECKS {
                    let _ = writeln!(out, "{:<26} {}", c.name, c.description);
                }
                return ExitCode::SUCCESS;
            }
            let corpus = corpus.expect("clap requires --corpus");
            let opts = VerifyOptions {
                corpus: &corpus,
                checks: &checks,
                workers,
                out: report.as_deref(),
                lenient,
            };
            cli::cmd_verify(&opts, &mut out, &mut err)
        }
        Command::Generate {
            triladders: _,
            max_n,
            near_bipartite_only,
            format,
            blueprints,
        } => {
            let opts = GenerateOptions {
                max_n,
                near_bipartite_only,
                format: format.into(),
                blueprints,
            };
            cli::cmd_generate(&opts, &mut out, &mut err)
        }
        Command::Decompose { input, k4 } => cli::cmd_decompose(
            &input.input,
            input.format.map(Into::into),
            k4,
            input.json,
            &mut out,
            &mut err,
        ),
    };
    ExitCode::from(code as u8)
}
