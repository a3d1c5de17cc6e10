//! Command-line front end. Every verb calls exactly one library operation;
//! parsing, serialization, and exit-code mapping live here and nothing else.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use projgap::bounds::{g_exact, gap_table, witness_construction};
use projgap::compress::{
    balanced_compress, complete_compress, compute_s, i_compress, reduce_to_downset,
};
use projgap::oracle::{
    max_s_bruteforce, min_gap_bruteforce, SearchMode, SearchOptions, DEFAULT_NODE_LIMIT,
};
use projgap::textio::{parse_point_set, serialize_certificate, serialize_point_set, table_to_csv};
use projgap::verify::{run_verify, Suite, VerifyConfig};
use projgap::{
    construct_a_n, gap_report, initial_segment, is_down_set, is_initial_segment, is_subset_of_x,
    is_weak_antichain, project, rank, Error, Result,
};

#[derive(Parser)]
#[command(
    name = "projgap",
    version,
    about = "Projection gaps of weak antichains: exact values, compressions, and search",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Input file in the shared point-set format, or '-' for standard input.
    #[arg(default_value = "-", value_name = "FILE")]
    file: String,
    /// Dimension to assume when the input has no data lines.
    #[arg(long, value_name = "N")]
    dim: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    /// No point strictly dominates another.
    WeakAntichain,
    /// Down-set of the nonnegative orthant, contained in X_n.
    DownSet,
    /// Every point has a zero coordinate.
    InX,
    /// Initial segment of X_n in the balanced order.
    InitialSegment,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CompressOpArg {
    /// Zero the bottom layer along the axis.
    Ci,
    /// Reassign each fiber along the axis to 0..k-1.
    Cci,
    /// Replace slices and block by initial segments.
    Ccci,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Down-sets of X_n (complete for the minimum-gap question).
    Downsets,
    /// All weak antichains inside the coordinate box (spot check only).
    Antichains,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Extremal,
    All,
}

#[derive(Args)]
struct SearchArgs {
    /// Worker threads for the exhaustive search.
    #[arg(long, default_value_t = 1, value_name = "K")]
    workers: usize,
    /// Coordinate bound for the search box (default m-1, which is complete).
    #[arg(long, value_name = "B")]
    bound: Option<u64>,
    /// Abort after this many search nodes.
    #[arg(long, value_name = "NODES")]
    node_limit: Option<u64>,
    /// Prune branches equivalent under coordinate permutations.
    #[arg(long)]
    symmetry: bool,
}

impl SearchArgs {
    fn to_options(&self, mode: SearchMode) -> SearchOptions {
        SearchOptions {
            mode,
            coordinate_bound: self.bound,
            worker_count: self.workers,
            node_limit: Some(self.node_limit.unwrap_or(DEFAULT_NODE_LIMIT)),
            symmetry_reduction: self.symmetry,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Size, projection sizes, and gap of a point set.
    Gap {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Test a predicate; exits 0 when it holds and 1 when it does not.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, value_name = "PROPERTY")]
        property: PropertyArg,
    },
    /// Orthogonal projection forgetting the given axis.
    Project {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "I")]
        axis: usize,
    },
    /// Apply one compression operator along an axis.
    Compress {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, value_name = "OP")]
        op: CompressOpArg,
        #[arg(long, value_name = "I")]
        axis: usize,
    },
    /// Reduce a weak antichain to a down-set of X_n with no larger gap.
    Reduce {
        #[command(flatten)]
        input: InputArgs,
    },
    /// First m points of X_n in the balanced order.
    InitialSegment {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        m: usize,
    },
    /// The slab construction: points of the box [0, N-1]^n having a zero coordinate.
    #[command(name = "a-n")]
    AN {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "SIDE")]
        side: u64,
    },
    /// Position of a single point within the balanced order on X_n.
    Rank {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Strictly positive points whose single-coordinate zeroings all lie in the set.
    SSet {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exact minimum gap via the initial segment, as a certificate.
    GExact {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        m: usize,
    },
    /// Exhaustive minimum-gap search, as a certificate.
    GBrute {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        m: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Downsets, value_name = "MODE")]
        mode: ModeArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exhaustive |S| maximization over down-sets, as a certificate.
    SBrute {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        m: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// CSV table of exact gaps against the asymptotic bound.
    Table {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        m_from: usize,
        #[arg(long, value_name = "M")]
        m_to: usize,
    },
    /// Near-extremal weak antichain of a given size, as a certificate.
    Witness {
        #[arg(long, value_name = "N")]
        n: usize,
        #[arg(long, value_name = "M")]
        m: usize,
    },
    /// Run the property suites with a seeded deterministic generator.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All, value_name = "SUITE")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4, value_name = "N")]
        n_max: usize,
        #[arg(long, default_value_t = 10, value_name = "M")]
        m_max: usize,
        #[arg(long, default_value_t = 0, value_name = "SEED")]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_name = "K")]
        cases: u64,
        #[arg(long, default_value_t = 1, value_name = "K")]
        workers: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => match emit(&outcome.text, cli.output.as_deref()) {
            Ok(()) => ExitCode::from(outcome.code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn emit(text: &str, output: Option<&std::path::Path>) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_input(input: &InputArgs) -> Result<projgap::PointSet> {
    let text = if input.file == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::InvalidArgument(format!("reading standard input: {e}")))?;
        buffer
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| Error::InvalidArgument(format!("reading {}: {e}", input.file)))?
    };
    parse_point_set(&text, input.dim)
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Gap { input } => {
            let a = read_input(&input)?;
            let report = gap_report(&a)?;
            let projections: Vec<String> =
                report.projection_sizes.iter().map(u64::to_string).collect();
            Ok(Outcome::ok(format!(
                "size={} projections={} gap={}\n",
                report.size,
                projections.join(","),
                report.gap
            )))
        }
        Command::Check { input, property } => {
            let a = read_input(&input)?;
            let holds = match property {
                PropertyArg::WeakAntichain => is_weak_antichain(&a)?,
                PropertyArg::DownSet => is_down_set(&a)?,
                PropertyArg::InX => is_subset_of_x(&a),
                PropertyArg::InitialSegment => is_initial_segment(&a)?,
            };
            Ok(Outcome {
                text: format!("{holds}\n"),
                code: if holds { 0 } else { 1 },
            })
        }
        Command::Project { input, axis } => {
            let a = read_input(&input)?;
            Ok(Outcome::ok(serialize_point_set(&project(&a, axis)?)))
        }
        Command::Compress { input, op, axis } => {
            let a = read_input(&input)?;
            let compressed = match op {
                CompressOpArg::Ci => i_compress(&a, axis)?,
                CompressOpArg::Cci => complete_compress(&a, axis)?,
                CompressOpArg::Ccci => balanced_compress(&a, axis)?,
            };
            Ok(Outcome::ok(serialize_point_set(&compressed)))
        }
        Command::Reduce { input } => {
            let a = read_input(&input)?;
            Ok(Outcome::ok(serialize_point_set(&reduce_to_downset(&a)?)))
        }
        Command::InitialSegment { n, m } => {
            let segment = initial_segment(n, m)?;
            Ok(Outcome::ok(serialize_point_set(&segment.to_point_set())))
        }
        Command::AN { n, side } => Ok(Outcome::ok(serialize_point_set(&construct_a_n(n, side)?))),
        Command::Rank { input } => {
            let a = read_input(&input)?;
            if a.len() != 1 {
                return Err(Error::InvalidArgument(format!(
                    "rank needs exactly one point, found {}",
                    a.len()
                )));
            }
            let point = a.iter().next().expect("length was checked");
            Ok(Outcome::ok(format!("{}\n", rank(point)?)))
        }
        Command::SSet { input } => {
            let a = read_input(&input)?;
            Ok(Outcome::ok(serialize_point_set(&compute_s(&a)?)))
        }
        Command::GExact { n, m } => Ok(Outcome::ok(serialize_certificate(&g_exact(n, m)?))),
        Command::GBrute { n, m, mode, search } => {
            let mode = match mode {
                ModeArg::Downsets => SearchMode::DownSetsInX,
                ModeArg::Antichains => SearchMode::AllWeakAntichains,
            };
            let cert = min_gap_bruteforce(n, m, &search.to_options(mode))?;
            Ok(Outcome::ok(serialize_certificate(&cert)))
        }
        Command::SBrute { n, m, search } => {
            let cert = max_s_bruteforce(n, m, &search.to_options(SearchMode::DownSetsInX))?;
            Ok(Outcome::ok(serialize_certificate(&cert)))
        }
        Command::Table { n, m_from, m_to } => {
            Ok(Outcome::ok(table_to_csv(&gap_table(n, m_from, m_to)?)))
        }
        Command::Witness { n, m } => Ok(Outcome::ok(serialize_certificate(&witness_construction(
            n, m,
        )?))),
        Command::Verify {
            suite,
            n_max,
            m_max,
            seed,
            cases,
            workers,
        } => {
            let config = VerifyConfig {
                suite: match suite {
                    SuiteArg::Lemmas => Suite::Lemmas,
                    SuiteArg::Extremal => Suite::Extremal,
                    SuiteArg::All => Suite::All,
                },
                n_max,
                m_max,
                seed,
                cases,
                workers,
            };
            let report = run_verify(&config);
            Ok(Outcome {
                text: report.render(),
                code: if report.all_passed() { 0 } else { 1 },
            })
        }
    }
}
