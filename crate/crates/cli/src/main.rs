mod commands;
mod input;
mod report;

use std::io::Write;

use clap::{Parser, Subcommand};
use symconf::polytope::{PolytopeLimits, DEFAULT_SCAN_BUDGET};
use symconf::semigroup::{SemigroupOptions, DEFAULT_HILBERT_MAX_DEGREE, DEFAULT_POINT_BUDGET};
use symconf::toric::{DEFAULT_MONOMIAL_BUDGET, DEFAULT_SPAIR_BUDGET};

use input::InputArgs;
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "symconf", version, about = "Centrally symmetric configurations and their toric rings")]
struct Cli {
    /// Indented JSON instead of a single line.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, Hermite normal form, lattice index and unimodularity of a matrix and its A±.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Reduced Gröbner basis and initial ideal of the toric ideal.
    Gb {
        #[command(flatten)]
        input: InputArgs,
        /// grevlex, grlex or center-smallest; defaults to center-smallest
        /// for symmetrized kinds and grevlex otherwise.
        #[arg(long)]
        order: Option<String>,
        /// Shorthand for --order center-smallest.
        #[arg(long)]
        center_smallest: bool,
        /// S-pair budget.
        #[arg(long, env = "SYMCONF_SPAIR_BUDGET", default_value_t = DEFAULT_SPAIR_BUDGET)]
        budget: u64,
        /// Re-check the result with the independent verifier.
        #[arg(long)]
        verify: bool,
        /// Count minimal generators per degree up to the basis degree.
        #[arg(long)]
        generator_degrees: bool,
        #[arg(long, env = "SYMCONF_MONOMIAL_BUDGET", default_value_t = DEFAULT_MONOMIAL_BUDGET)]
        monomial_budget: u64,
    },
    /// Graph predicates: bipartition, odd cycles, chordality, condition (*), unimodularity.
    GraphReport {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Hilbert function and h-vector of the toric ring.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, env = "SYMCONF_MAX_DEGREE", default_value_t = DEFAULT_HILBERT_MAX_DEGREE)]
        max_degree: u32,
        #[arg(long, env = "SYMCONF_POINT_BUDGET", default_value_t = DEFAULT_POINT_BUDGET)]
        point_budget: u64,
    },
    /// Normality check with a witness when it fails.
    Normal {
        #[command(flatten)]
        input: InputArgs,
        /// Highest degree to check; defaults to twice the rank.
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, env = "SYMCONF_POINT_BUDGET", default_value_t = DEFAULT_POINT_BUDGET)]
        point_budget: u64,
        #[arg(long, env = "SYMCONF_SCAN_BUDGET", default_value_t = DEFAULT_SCAN_BUDGET)]
        scan_budget: u64,
    },
    /// Facets, dual polytope and the (Gorenstein) Fano verdict for Conv(A±).
    Fano {
        #[command(flatten)]
        input: InputArgs,
        /// Also report the pulling triangulation from the center.
        #[arg(long)]
        triangulate: bool,
        #[arg(long, env = "SYMCONF_SCAN_BUDGET", default_value_t = DEFAULT_SCAN_BUDGET)]
        scan_budget: u64,
    },
    /// The explicit quadratic basis for a chordal bipartite graph with condition (*).
    Theorem42 {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated first part; defaults to the breadth-first bipartition.
        #[arg(long)]
        part1: Option<String>,
    },
    /// Split a vertex meeting every odd cycle into a bipartite graph with the same toric ideal.
    SplitApex {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        vertex: usize,
        #[arg(long, env = "SYMCONF_SPAIR_BUDGET", default_value_t = DEFAULT_SPAIR_BUDGET)]
        budget: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Gb { .. } => "gb",
            Command::GraphReport { .. } => "graph-report",
            Command::Hilbert { .. } => "hilbert",
            Command::Normal { .. } => "normal",
            Command::Fano { .. } => "fano",
            Command::Theorem42 { .. } => "theorem42",
            Command::SplitApex { .. } => "split-apex",
        }
    }
}

fn run(command: &Command, report: &mut Report) -> Result<(), report::CliError> {
    match command {
        Command::Analyze { input } => commands::analyze(input, report),
        Command::Gb {
            input,
            order,
            center_smallest,
            budget,
            verify,
            generator_degrees,
            monomial_budget,
        } => {
            let args = commands::GbArgs {
                order: order.clone(),
                center_smallest: *center_smallest,
                budget: *budget,
                verify: *verify,
                generator_degrees: *generator_degrees,
                monomial_budget: *monomial_budget,
            };
            commands::gb(input, &args, report)
        }
        Command::GraphReport { input } => commands::graph_report(input, report),
        Command::Hilbert {
            input,
            max_degree,
            point_budget,
        } => commands::hilbert(input, *max_degree, *point_budget, report),
        Command::Normal {
            input,
            bound,
            point_budget,
            scan_budget,
        } => {
            let options = SemigroupOptions {
                point_budget: *point_budget,
                scan_budget: *scan_budget,
                limits: PolytopeLimits::default(),
            };
            commands::normal(input, *bound, options, report)
        }
        Command::Fano {
            input,
            triangulate,
            scan_budget,
        } => commands::fano(input, *triangulate, *scan_budget, report),
        Command::Theorem42 { input, part1 } => commands::theorem42(input, part1.as_deref(), report),
        Command::SplitApex { input, vertex, budget } => commands::split_apex_cmd(input, *vertex, *budget, report),
    }
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut report = Report::new(cli.command.name());
    if let Err(e) = run(&cli.command, &mut report) {
        report.error = Some(e);
    }
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{}", report.render(cli.pretty));
    std::process::exit(report.exit_code());
}
