mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgrass::{DimVector, Kind, RepDescriptor};

use report::Format;

/// Exact invariants of Kronecker quiver Grassmannians and related cluster algebra elements.
#[derive(Parser, Debug)]
#[command(name = "qgrass", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain", env = "QG_FORMAT")]
    pub format: Format,

    /// Largest accepted rank `n`; larger requests exit with status 3.
    #[arg(long, global = true, default_value_t = 12, env = "QG_MAX_RANK")]
    pub max_rank: usize,

    /// Worker threads for parallel loops (default: all cores).
    #[arg(long, global = true, env = "QG_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Representation type: P (preprojective), R (regular) or I (preinjective).
    #[arg(short = 't', long = "type", default_value = "R", value_parser = parse_kind)]
    pub kind: Kind,

    /// Rank `n` of the indecomposable.
    #[arg(short, long)]
    pub n: usize,

    /// Dimension vector `e1,e2`.
    #[arg(short, long, value_parser = parse_dim)]
    pub e: DimVector,
}

#[derive(Args, Debug, Clone)]
pub struct RegularTarget {
    /// Rank `n` of the regular indecomposable `R_n`.
    #[arg(short, long)]
    pub n: usize,

    /// Dimension vector `e1,e2`.
    #[arg(short, long, value_parser = parse_dim)]
    pub e: DimVector,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poincaré polynomial (coefficients b_0, b_2, ...) of Gr_e(M).
    Poincare(Target),
    /// Euler characteristic of Gr_e(M), or of Gr_e of a direct sum given with --rep.
    Euler {
        #[arg(short = 't', long = "type", value_parser = parse_kind, required_unless_present = "rep")]
        kind: Option<Kind>,
        #[arg(short, long, required_unless_present = "rep")]
        n: Option<usize>,
        #[arg(short, long, value_parser = parse_dim)]
        e: DimVector,
        /// Direct sum such as `P0+R2+I1`.
        #[arg(long, value_parser = parse_rep, conflicts_with_all = ["kind", "n"])]
        rep: Option<RepDescriptor>,
    },
    /// Torus-fixed points of Gr_e(R_n) with cell dimensions from Hom+ and from the recursion.
    Cells(RegularTarget),
    /// Torus-fixed points of Gr_e(M) with their summand decompositions.
    FixedPoints(Target),
    /// The strata X_k = {N : dim Ext^1(N, R_n/N) >= k} of Gr_e(R_n).
    Strata(RegularTarget),
    /// Count F_q-points of Gr_e(M) by enumeration and compare with P(q).
    CountFq {
        #[command(flatten)]
        target: Target,
        /// Prime field size (2, 3, 5 or 7).
        #[arg(short, long)]
        q: u32,
    },
    /// Cluster variables, canonical basis elements and the Caldero-Chapoton map.
    #[command(subcommand)]
    Cluster(ClusterCommand),
    /// Run a fast subset of the identity checks.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    /// x_k x_{k+2} = x_{k+1}^2 + 1 in variables x1, x2.
    Kronecker,
    /// x_m x_{m+3} = x_{m+1} x_{m+2} + 1 in variables x1, x2, x3.
    AffineA2,
}

#[derive(Args, Debug, Clone)]
pub struct ClusterChoice {
    /// Re-express the result in the cluster starting at x_K.
    #[arg(long, allow_negative_numbers = true)]
    pub cluster: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum ClusterCommand {
    /// Cluster variable x_k in the initial cluster.
    Var {
        #[arg(short, long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value = "kronecker")]
        algebra: Algebra,
        #[command(flatten)]
        choice: ClusterChoice,
    },
    /// z_n from the recurrence and from smooth loci of Gr_e(R_n).
    Z {
        #[arg(short, long)]
        n: usize,
        #[command(flatten)]
        choice: ClusterChoice,
    },
    /// u_n from the recurrence and from smooth loci of Gr_e(R_{n,2}).
    U {
        #[arg(short, long)]
        n: usize,
        #[command(flatten)]
        choice: ClusterChoice,
    },
    /// s_n = CC(R_n).
    S {
        #[arg(short, long)]
        n: usize,
        #[command(flatten)]
        choice: ClusterChoice,
    },
    /// Caldero-Chapoton sum of an indecomposable (or a direct sum via --rep).
    Cc {
        #[arg(short = 't', long = "type", value_parser = parse_kind, required_unless_present = "rep")]
        kind: Option<Kind>,
        #[arg(short, long, required_unless_present = "rep")]
        n: Option<usize>,
        #[arg(long, value_parser = parse_rep, conflicts_with_all = ["kind", "n"])]
        rep: Option<RepDescriptor>,
        /// Only sum over points with dim Ext^1(N, M/N) = K (regular M only).
        #[arg(long)]
        stratum: Option<usize>,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: qgrass::Error| e.to_string())
}

fn parse_dim(s: &str) -> Result<DimVector, String> {
    s.parse().map_err(|e: qgrass::Error| e.to_string())
}

fn parse_rep(s: &str) -> Result<RepDescriptor, String> {
    s.parse().map_err(|e: qgrass::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::dispatch(&cli) {
        Ok(report) => {
            let out = report.render(cli.format);
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            match report.verdict {
                report::Verdict::Ok => ExitCode::SUCCESS,
                report::Verdict::Violated => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
