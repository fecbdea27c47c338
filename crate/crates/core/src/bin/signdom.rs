use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use signdom::bounds::bound_report;
use signdom::campaign::{
    build_family, run_campaign, solve_record, table_csv, CampaignConfig, Check, Family, KPolicy, Mutant,
    TableSpec,
};
use signdom::reference::reference_csv;
use signdom::solver::{solve, Algorithm, BnbOptions, Mode, DEFAULT_BRUTE_CAP};
use signdom::{parse_auto, Graph};

#[derive(Parser)]
#[command(name = "signdom", version, about = "Exact nonnegative signed k-subdomination numbers and lower bounds")]
struct Cli {
    /// Output format (defaults: solve=jsonl, bounds=text, verify=jsonl, table=csv)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for G(n,p) generation and campaigns
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Single-worker search with canonical witnesses
    #[arg(long, global = true)]
    deterministic: bool,
    /// Largest order the brute-force solver accepts
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_CAP)]
    brute_cap: usize,
    /// Write output here instead of stdout
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family
    Gen(GenArgs),
    /// Compute the exact optimum for a graph file
    Solve(SolveArgs),
    /// Evaluate every closed-form lower bound for a graph file
    Bounds(BoundsArgs),
    /// Run a verification campaign; exit code 1 on any failed check
    Verify(VerifyArgs),
    /// Reproduction table over a family parameter range
    Table(TableArgs),
    /// Dump the table of known exact values as CSV
    Reference,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_parser = parse_family)]
    family: Family,
    /// Order (complete, cycle, path, circulant, gnp)
    #[arg(long)]
    n: Option<usize>,
    /// Half the cycle length of the sun gadget
    #[arg(long)]
    t: Option<usize>,
    /// Circulant offsets, comma separated
    #[arg(long, value_delimiter = ',')]
    offsets: Vec<usize>,
    /// G(n,p) edge probability
    #[arg(long)]
    p: Option<f64>,
    /// Write DIMACS instead of an edge list
    #[arg(long)]
    dimacs: bool,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list or DIMACS file (detected from the first line)
    graph: PathBuf,
    /// Vertex count for edge lists with trailing isolated vertices
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Subdomination parameter (default: n)
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "nonneg", value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
    algorithm: Algorithm,
    /// Branch-and-bound worker threads (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Subdomination parameter (default: n)
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to these families (repeatable; default: all)
    #[arg(long = "family", value_parser = parse_family)]
    families: Vec<Family>,
    /// Restrict to these checks (repeatable; default: all)
    #[arg(long = "check", value_parser = parse_check)]
    checks: Vec<Check>,
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 9)]
    n_max: usize,
    /// G(n,p) edge probabilities
    #[arg(long = "p", value_delimiter = ',', default_values_t = [0.2, 0.5, 0.8])]
    p_values: Vec<f64>,
    #[arg(long, default_value_t = 50)]
    seeds_per_cell: usize,
    /// k values per instance: sweep (1, ceil(n/2), n), all, n, or a number
    #[arg(long, default_value = "sweep", value_parser = parse_k_policy)]
    k: KPolicy,
    /// Harness self-test: corrupt one bound on purpose
    #[arg(long, value_parser = parse_mutant, hide = true)]
    inject_mutant: Option<Mutant>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_parser = parse_family)]
    family: Family,
    /// First parameter (n, or t for sun)
    #[arg(long, default_value_t = 3)]
    from: usize,
    /// Last parameter (inclusive)
    #[arg(long, default_value_t = 12)]
    to: usize,
    /// k policy: n, sweep, all, or a number
    #[arg(long, default_value = "n", value_parser = parse_k_policy)]
    k: KPolicy,
    /// nonneg, signed, or both
    #[arg(long, default_value = "both")]
    mode: String,
    #[arg(long, value_delimiter = ',', default_values_t = [1])]
    offsets: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value = "auto", value_parser = parse_algorithm)]
    algorithm: Algorithm,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: signdom::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: signdom::Error| e.to_string())
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: signdom::Error| e.to_string())
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: signdom::Error| e.to_string())
}

fn parse_k_policy(s: &str) -> Result<KPolicy, String> {
    s.parse().map_err(|e: signdom::Error| e.to_string())
}

fn parse_mutant(s: &str) -> Result<Mutant, String> {
    s.parse().map_err(|e: signdom::Error| e.to_string())
}

/// Failure classes mapped onto exit codes.
enum Failure {
    /// Usage, parse, parameter, or IO problem (exit 2).
    Usage(String),
    /// A verification check failed (exit 1).
    Check,
}

impl From<signdom::Error> for Failure {
    fn from(e: signdom::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(input: &GraphInput) -> Result<Graph, Failure> {
    let text = fs::read_to_string(&input.graph)
        .map_err(|e| Failure::Usage(format!("{}: {e}", input.graph.display())))?;
    Ok(parse_auto(&text, input.order)?)
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{} needs --{flag}", family.name())))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gen(args) => {
            let param = match args.family {
                Family::Sun => need(args.t, "t", args.family)?,
                Family::Hajos => 0,
                _ => need(args.n, "n", args.family)?,
            };
            if args.family == Family::Gnp && args.p.is_none() {
                return Err(Failure::Usage("gnp needs --p".into()));
            }
            let offsets = if args.offsets.is_empty() { vec![1] } else { args.offsets.clone() };
            let graph = build_family(args.family, param, &offsets, args.p.unwrap_or(0.5), cli.seed)?;
            let text = if args.dimacs { graph.to_dimacs() } else { graph.to_edge_list() };
            emit(cli, &text)
        }
        Command::Solve(args) => {
            let graph = load(&args.input)?;
            let k = args.k.unwrap_or(graph.order());
            let workers = if cli.deterministic {
                1
            } else {
                args.workers
                    .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            };
            let opts = BnbOptions {
                workers,
                ..BnbOptions::default()
            };
            let result = solve(&graph, k, args.mode, args.algorithm, cli.brute_cap, opts)?;
            let id = args.input.graph.display().to_string();
            let record = solve_record(&graph, &id, k, args.mode, args.algorithm, &result);
            let text = match cli.format.unwrap_or(Format::Jsonl) {
                Format::Jsonl => format!("{record}\n"),
                Format::Csv => {
                    let obj = record.as_object().expect("record is an object");
                    let header: Vec<&str> = obj.keys().map(String::as_str).collect();
                    let row: Vec<String> = obj
                        .values()
                        .map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string))
                        .collect();
                    format!("{}\n{}\n", header.join(","), row.join(","))
                }
                Format::Text => format!(
                    "optimum {} (k={}, mode={}, satisfied {})\nwitness {}\nnodes {}\n",
                    result.optimum,
                    k,
                    args.mode,
                    result.satisfied_count,
                    result.witness,
                    result.stats.nodes
                ),
            };
            emit(cli, &text)
        }
        Command::Bounds(args) => {
            let graph = load(&args.input)?;
            let report = bound_report(&graph, args.k.unwrap_or(graph.order()))?;
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Csv => format!("{}\n{}\n", report.csv_header(), report.csv_row()),
                Format::Jsonl => format!("{}\n", report.to_json()),
                Format::Text => report.to_text(),
            };
            emit(cli, &text)
        }
        Command::Verify(args) => {
            let defaults = CampaignConfig::default();
            let cfg = CampaignConfig {
                seed: cli.seed,
                families: if args.families.is_empty() { defaults.families } else { args.families.clone() },
                n_min: args.n_min,
                n_max: args.n_max,
                p_values: args.p_values.clone(),
                seeds_per_cell: args.seeds_per_cell,
                k_policy: args.k,
                checks: if args.checks.is_empty() { defaults.checks } else { args.checks.clone() },
                brute_cap: cli.brute_cap,
                mutant: args.inject_mutant,
            };
            let report = run_campaign(&cfg)?;
            let text = match cli.format.unwrap_or(Format::Jsonl) {
                Format::Text => report.to_text(),
                _ => format!("{}\n", report.to_json()),
            };
            emit(cli, &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Table(args) => {
            let modes = match args.mode.as_str() {
                "both" => vec![Mode::Nonneg, Mode::Signed],
                other => vec![other.parse::<Mode>()?],
            };
            let spec = TableSpec {
                family: args.family,
                from: args.from,
                to: args.to,
                k_policy: args.k,
                modes,
                offsets: args.offsets.clone(),
                p: args.p,
                seed: cli.seed,
                algorithm: args.algorithm,
                brute_cap: cli.brute_cap,
            };
            emit(cli, &table_csv(&spec)?)
        }
        Command::Reference => emit(cli, &reference_csv()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
