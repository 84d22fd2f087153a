use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use homlab::cli::{run, Command, ComputeOp, JobConfig};

/// Exact module computations and conjecture suites over finite-dimensional algebras.
#[derive(Parser)]
#[command(name = "homlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Sub {
    /// Compute one invariant of the module given by --m (and --n).
    Compute {
        #[arg(value_enum)]
        op: Op,
    },
    /// Run predicate suites over enumerated modules.
    Verify,
    /// List isomorphism classes of modules up to --max-dim.
    Enumerate,
    /// Sample modules looking for counterexamples to an open statement.
    Search,
    /// Summarise a JSONL report.
    Report { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Ext,
    Transpose,
    Sigma,
    Dual,
    Tensor,
    Profile,
}

#[derive(Args)]
struct Opts {
    /// Algebra spec file.
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,
    /// Module file.
    #[arg(long, global = true)]
    m: Option<PathBuf>,
    /// Second module file.
    #[arg(long, global = true)]
    n: Option<PathBuf>,
    /// Predicate ids, comma separated, or `all`.
    #[arg(long, global = true, value_delimiter = ',')]
    predicate: Vec<String>,
    #[arg(long, global = true, default_value_t = 3)]
    max_dim: usize,
    /// Ext bound.
    #[arg(long, global = true, default_value_t = 6)]
    bound: usize,
    /// Fail instead of sampling when a dimension exceeds the budget.
    #[arg(long, global = true)]
    exhaustive: bool,
    /// Largest number of candidate actions enumerated per dimension.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    budget: u64,
    #[arg(long, global = true, env = "HOMLAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Append JSONL records here instead of printing them.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Extra random modules for verify; total draws for search.
    #[arg(long, global = true, default_value_t = 0)]
    samples: usize,
}

fn main() {
    // Usage errors are input errors (exit 1); exit 2 is reserved for findings.
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let command = match cli.command {
        Sub::Compute { op } => Command::Compute {
            op: match op {
                Op::Ext => ComputeOp::Ext,
                Op::Transpose => ComputeOp::Transpose,
                Op::Sigma => ComputeOp::Sigma,
                Op::Dual => ComputeOp::Dual,
                Op::Tensor => ComputeOp::Tensor,
                Op::Profile => ComputeOp::Profile,
            },
        },
        Sub::Verify => Command::Verify,
        Sub::Enumerate => Command::Enumerate,
        Sub::Search => Command::Search,
        Sub::Report { input } => Command::Report { input },
    };
    let o = cli.opts;
    let cfg = JobConfig {
        command,
        algebra: o.algebra,
        m: o.m,
        n: o.n,
        predicates: o.predicate,
        max_dim: o.max_dim,
        bound: o.bound,
        exhaustive: o.exhaustive,
        budget: o.budget,
        seed: o.seed,
        out: o.out,
        workers: o.workers,
        samples: o.samples,
    };
    std::process::exit(run(&cfg));
}
