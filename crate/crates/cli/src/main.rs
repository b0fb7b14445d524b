//! `plucker`: runs the Plücker ideal verifications from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use plucker_core::arcs::enumerate_maximal;
use plucker_core::error::{Error, Result};
use plucker_core::graphs::{count_gorenstein_perfect, graph_of, interval_system, CliqueIntervalSystem};
use plucker_core::graphs::write_graph;
use plucker_core::groebner::io::{parse_ideal_file, write_ideal_file};
use plucker_core::groebner::{buchberger, set_default_budget};
use plucker_core::lattice::parse_sublattice;
use plucker_core::lattice::{enumerate_perfect_compatible, RankClause, Sublattice};
use plucker_core::plucker::set_quadric_sign_mutation;
use plucker_core::verify::{run_all, run_check, CheckId, QuadricOrder, VerificationReport, VerifyOptions, DEFAULT_SEED};

const BUDGET_ENV: &str = "PLUCKER_SPAIR_BUDGET";

#[derive(Parser)]
#[command(name = "plucker", version, about = "Exact verification of Plücker ideal Gröbner bases and their combinatorics")]
struct Cli {
    /// Seed for random linear extensions and sampled graph checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Flip the sign of one term in every quadric (for mutation testing).
    #[arg(long, global = true, hide = true)]
    mutate_quadric_sign: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Revlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankArg {
    AtLeastN,
    ExactlyN,
    Omitted,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Perfect,
    Gorenstein,
    Arcs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowKind {
    FundamentalChain,
    JoinIrreducibles,
    Graph,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check.
    Verify {
        /// oracle, gb-quadrics, gb-appendix, elimination, sydney, gorenstein,
        /// asl-basis, stanley-reisner or arcs-bijection
        check: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Revlex)]
        order: OrderArg,
        /// How the rank condition of compatibility is read.
        #[arg(long, value_enum, default_value_t = RankArg::AtLeastN)]
        rank_clause: RankArg,
        /// Number of sampled graphs for the sampled checks.
        #[arg(long)]
        samples: Option<usize>,
        /// Number of random linear extensions besides the canonical one.
        #[arg(long)]
        extensions: Option<usize>,
    },
    /// Count perfect compatible sublattices, Gorenstein ones, or maximal arc arrangements.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[arg(long)]
        n: usize,
    },
    /// Show the fundamental chain, join-irreducibles or graph of a sublattice.
    Show {
        #[arg(value_enum)]
        kind: ShowKind,
        #[arg(long)]
        n: Option<usize>,
        /// Clique interval system such as `[1,3][2,5]`.
        #[arg(long, conflicts_with = "file")]
        system: Option<String>,
        /// Sublattice file (`n: <int>` then `i j` lines).
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Run every check for all supported n up to the bound.
    RunAll {
        #[arg(long)]
        max_n: usize,
    },
    /// Compute the reduced Gröbner basis of an ideal file.
    Gb { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(BUDGET_ENV) {
        match v.trim().parse::<usize>() {
            Ok(limit) => set_default_budget(limit),
            Err(_) => {
                eprintln!("error: {BUDGET_ENV} must be a non-negative integer, got '{v}'");
                return ExitCode::from(2);
            }
        }
    }
    set_quadric_sign_mutation(cli.mutate_quadric_sign);
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                Error::Parse(_) | Error::OutOfBudget { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Verify { check, n, order, rank_clause, samples, extensions } => {
            let check: CheckId = check.parse()?;
            let mut opts = VerifyOptions { seed: cli.seed, ..VerifyOptions::default() };
            opts.order = match order {
                OrderArg::Revlex => QuadricOrder::Revlex,
                OrderArg::Lex => QuadricOrder::Lex,
            };
            opts.rank_clause = match rank_clause {
                RankArg::AtLeastN => RankClause::AtLeastN,
                RankArg::ExactlyN => RankClause::ExactlyN,
                RankArg::Omitted => RankClause::Omitted,
            };
            opts.samples = samples.unwrap_or(opts.samples);
            opts.extensions = extensions.unwrap_or(opts.extensions);
            let mut report = VerificationReport::new(cli.seed);
            match run_check(check, *n, &opts) {
                Ok(r) => report.records.push(r),
                Err(e @ Error::BudgetExceeded { .. }) => {
                    report.aborted = Some(format!("{check} n={n}: {e}"));
                    emit_report(cli.format, &report);
                    return Ok(ExitCode::from(3));
                }
                Err(e) => return Err(e),
            }
            emit_report(cli.format, &report);
            Ok(exit_for(&report))
        }
        Command::RunAll { max_n } => {
            let opts = VerifyOptions { seed: cli.seed, ..VerifyOptions::default() };
            let (report, err) = run_all(*max_n, &opts);
            emit_report(cli.format, &report);
            match err {
                None => Ok(exit_for(&report)),
                Some(Error::BudgetExceeded { .. }) => Ok(ExitCode::from(3)),
                Some(e) => Err(e),
            }
        }
        Command::Count { kind, n } => {
            let (name, value) = match kind {
                CountKind::Perfect => ("perfect", enumerate_perfect_compatible(*n)?.len().to_string()),
                CountKind::Gorenstein => ("gorenstein", count_gorenstein_perfect(*n)?.to_string()),
                CountKind::Arcs => ("arcs", enumerate_maximal(*n)?.len().to_string()),
            };
            match cli.format {
                Format::Text => println!("{value}"),
                Format::Json => println!("{}", json!({ "count": name, "n": n, "value": value })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Show { kind, n, system, file } => {
            let s = load_sublattice(*n, system.as_deref(), file.as_ref())?;
            show(cli.format, *kind, &s)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gb { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            let parsed = parse_ideal_file(&text)?;
            let gb = buchberger(&parsed.ideal, &parsed.order)?;
            match cli.format {
                Format::Text => print!("{}", write_ideal_file(gb.order(), gb.elements())),
                Format::Json => {
                    let elems: Vec<String> = gb.elements().iter().map(|f| f.to_string()).collect();
                    let text = write_ideal_file(gb.order(), gb.elements());
                    let header = text.lines().next().unwrap_or_default();
                    println!("{}", json!({ "header": header, "basis": elems }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(report: &VerificationReport) -> ExitCode {
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit_report(format: Format, report: &VerificationReport) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("report serializes")),
    }
}

/// The sublattice named on the command line; the whole of `L_n` by default.
fn load_sublattice(n: Option<usize>, system: Option<&str>, file: Option<&PathBuf>) -> Result<Sublattice> {
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        return parse_sublattice(&text);
    }
    if let Some(text) = system {
        let sys: CliqueIntervalSystem = text.parse()?;
        let n = n.unwrap_or(sys.n());
        return Sublattice::from_system(n, &sys);
    }
    let n = n.ok_or_else(|| Error::Parse("give --n, --system or --file".into()))?;
    Ok(Sublattice::full(n))
}

fn show(format: Format, kind: ShowKind, s: &Sublattice) -> Result<()> {
    match kind {
        ShowKind::FundamentalChain => {
            let chain = s.fundamental_chain()?;
            match format {
                Format::Text => println!("{chain}"),
                Format::Json => {
                    let e: Vec<String> = chain.elements().iter().map(|p| p.to_string()).collect();
                    println!("{}", json!({ "fundamental_chain": e, "length": e.len() - 1 }));
                }
            }
        }
        ShowKind::JoinIrreducibles => {
            let ji = s.join_irreducibles()?;
            let e: Vec<String> = ji.elements().iter().map(|p| p.to_string()).collect();
            let pure = ji.is_pure();
            match format {
                Format::Text => {
                    println!("{}", e.join(","));
                    println!("pure: {pure}");
                    if let Some(w) = ji.impurity_witness() {
                        println!("maximal chains of different lengths: {w:?}");
                    }
                }
                Format::Json => println!("{}", json!({ "join_irreducibles": e, "pure": pure })),
            }
        }
        ShowKind::Graph => {
            let g = graph_of(s);
            let sys = interval_system(&g);
            match format {
                Format::Text => {
                    print!("{}", write_graph(&g));
                    match &sys {
                        Ok(sys) => println!("# cliques {sys}"),
                        Err(e) => println!("# {e}"),
                    }
                }
                Format::Json => {
                    let edges: Vec<[usize; 2]> = g.edges().iter().map(|p| [p.i, p.j]).collect();
                    let cliques = sys.as_ref().ok().map(|s| s.to_string());
                    println!("{}", json!({ "n": g.n(), "edges": edges, "cliques": cliques }));
                }
            }
        }
    }
    Ok(())
}
