use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "anysort", version, about = "Anytime sorting: traces, experiments, checks and the session service")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one line per comparison: k, i, j, lo, S_native, S_rho.
    Trace(TraceArgs),
    /// Run a seeded experiment and write CSV plus a JSON sidecar.
    Bench {
        #[command(subcommand)]
        kind: BenchKind,
    },
    /// Replay the worked examples and report any mismatch.
    Verify {
        /// Run a single check (fig1, fig3, fig4 or fig6).
        #[arg(long)]
        only: Option<String>,
    },
    /// Serve the session API over HTTP.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceEstimator {
    Both,
    Native,
    Rho,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long)]
    pub algo: String,
    /// Comma-separated permutation of 1..n, e.g. 5,1,8,7,2,6,4,3.
    #[arg(long)]
    pub list: String,
    /// Which error columns to fill; the others print NA.
    #[arg(long, value_enum, default_value_t = TraceEstimator::Both)]
    pub estimator: TraceEstimator,
}

#[derive(Debug, Subcommand)]
pub enum BenchKind {
    /// Comparisons until sorted, as overhead over log2(n!).
    Termination(ExperimentArgs),
    /// Normalized footrule error after k comparisons.
    Profile(ExperimentArgs),
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// Comma-separated algorithm ids; all algorithms when omitted.
    #[arg(long, value_delimiter = ',')]
    pub algos: Vec<String>,
    /// Comma-separated list sizes.
    #[arg(long = "n", value_delimiter = ',')]
    pub sizes: Vec<usize>,
    /// Trials per size; 1000 up to n=256 and 100 above when omitted.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Evenly spaced profile checkpoints.
    #[arg(long, default_value_t = 200)]
    pub checkpoints: usize,
    /// Extra profile checkpoints, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub at: Vec<usize>,
    /// Profile estimators (native, rho), comma-separated; per-algorithm defaults when omitted.
    #[arg(long, value_delimiter = ',')]
    pub estimators: Vec<String>,
    /// CSV output path; defaults to <kind>.csv.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write a long-format CSV with one value per row.
    #[arg(long)]
    pub long: bool,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// JSON file whose fields override the flags above.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: String,
    /// Directory for one JSON snapshot per session.
    #[arg(long)]
    pub snapshot_dir: Option<PathBuf>,
    /// Idle time after which a session is dropped, in hours.
    #[arg(long, default_value_t = 24.0)]
    pub ttl_hours: f64,
    #[arg(long, default_value_t = 500)]
    pub max_items: usize,
    /// Origin allowed by CORS; any origin when omitted.
    #[arg(long)]
    pub origin: Option<String>,
}
