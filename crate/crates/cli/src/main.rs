//! `ldc`: command line front end for the long directed cycle solver.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ldc_core::harness::{
    estimate_amplification, estimate_split_probability, random_digraph, DEFAULT_ORACLE_CAP,
};
use ldc_core::partitioning::{PartitionError, DEFAULT_CONSTRAINT_BUDGET, DEFAULT_UNIVERSAL_CAP};
use ldc_core::{
    answer_with_verification, brute_force_longest_cycle, build_universal_set,
    generate_planted_instance, parse_graph, verify_universal, BackendKind, DirectedGraph,
    SolverConfig, UniversalSetFamily, Verification,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "ldc",
    version,
    about = "Decide whether a digraph has a simple cycle on at least k vertices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a long cycle instance and print a witness.
    Solve(SolveArgs),
    /// Longest simple cycle by exhaustive search.
    Oracle(OracleArgs),
    /// Emit a random or planted instance in edge-list format.
    Gen(GenArgs),
    /// Monte Carlo checks of the random partition probabilities.
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
    /// Check a family of 0/1 vectors for universality.
    VerifyUniversal(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; reads stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Print a JSON record instead of the plain line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Det,
    Rand,
}

#[derive(Clone, Copy, ValueEnum)]
enum KPathArg {
    Color,
    Dp,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "det")]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// c in the ceil(c * 4^k) random partition count.
    #[arg(long, default_value_t = 10.0)]
    amplification: f64,
    /// k-path backend; defaults to dp in det mode and color in rand mode.
    #[arg(long, value_enum)]
    kpath: Option<KPathArg>,
    /// c in the ceil(c * e^l) color-coding repetition count.
    #[arg(long, default_value_t = 3.0)]
    repetition_constant: f64,
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args)]
struct OracleArgs {
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap: usize,
    #[command(flatten)]
    io: InputArgs,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Plant a cycle on this many vertices.
    #[arg(long)]
    t: Option<usize>,
    /// Edge probability, or the fraction of free pairs added when planting.
    #[arg(long, default_value_t = 0.2)]
    density: f64,
    /// Keep only extra edges that create no cycle shorter than t.
    #[arg(long, requires = "t")]
    forbid_short: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Experiment {
    /// Frequency of a fixed 2k-vertex split against 4^-k.
    Split {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Hit rate of ceil(c * 4^k) draws against 1 - e^-c.
    Amplification {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10.0)]
        amplification: f64,
        #[arg(long, default_value_t = 2000)]
        meta_trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Build the family for n instead of reading one.
    #[arg(long, requires = "t")]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Emit the family text before the verdict.
    #[arg(long, requires = "n")]
    emit: bool,
    #[command(flatten)]
    io: InputArgs,
}

enum Failure {
    Usage(String),
    Capacity(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Capacity(_) => 2,
        }
    }
}

type CmdResult = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn capacity(e: impl std::fmt::Display) -> Failure {
    Failure::Capacity(e.to_string())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(usage)?;
            Ok(s)
        }
    }
}

fn read_graph(path: &Option<PathBuf>) -> Result<DirectedGraph, Failure> {
    let text = read_input(path)?;
    let parsed = parse_graph(&text).map_err(usage)?;
    let norm = parsed.normalization;
    if norm.self_loops_dropped + norm.duplicates_dropped > 0 {
        eprintln!(
            "note: dropped {} self-loops and {} duplicate edges",
            norm.self_loops_dropped, norm.duplicates_dropped
        );
    }
    Ok(parsed.graph)
}

fn solve(args: SolveArgs) -> CmdResult {
    let mut cfg = match args.mode {
        ModeArg::Det => SolverConfig::deterministic(),
        ModeArg::Rand => SolverConfig::randomized(args.seed),
    };
    cfg.seed = args.seed;
    cfg.amplification = args.amplification;
    cfg.repetition_constant = args.repetition_constant;
    cfg.kpath = args.kpath.map(|k| match k {
        KPathArg::Color => BackendKind::ColorCoding,
        KPathArg::Dp => BackendKind::SubsetDp,
    });
    cfg.validate().map_err(usage)?;
    let g = read_graph(&args.io.input)?;
    let answer = answer_with_verification(&g, args.k, &cfg).map_err(|e| {
        use ldc_core::LdcError::*;
        match e {
            InvalidK(_) | InvalidConfig(_) => usage(e),
            _ => capacity(e),
        }
    })?;
    if answer.mixed_backend {
        eprintln!(
            "note: {} backend in {} mode; guarantees follow the weaker of the two",
            answer.backend, answer.mode
        );
    }
    if args.io.json {
        println!(
            "{}",
            serde_json::to_string(&answer).expect("answer serializes")
        );
    } else {
        println!("{answer}");
    }
    Ok(())
}

fn oracle(args: OracleArgs) -> CmdResult {
    let g = read_graph(&args.io.input)?;
    let result = brute_force_longest_cycle(&g, args.cap).map_err(capacity)?;
    if args.io.json {
        println!(
            "{}",
            serde_json::to_string(&result).expect("result serializes")
        );
    } else {
        println!("{result}");
    }
    Ok(())
}

fn gen(args: GenArgs) -> CmdResult {
    if !(0.0..=1.0).contains(&args.density) {
        return Err(usage(format!(
            "density must lie in [0, 1], got {}",
            args.density
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    match args.t {
        Some(t) => {
            let inst =
                generate_planted_instance(args.n, t, args.density, args.forbid_short, &mut rng)
                    .map_err(usage)?;
            println!("# planted {}", inst.cycle);
            println!("{}", inst.graph);
        }
        None => println!("{}", random_digraph(args.n, args.density, &mut rng)),
    }
    Ok(())
}

fn experiment(which: Experiment) -> CmdResult {
    let (report, json) = match which {
        Experiment::Split {
            k,
            trials,
            seed,
            json,
        } => {
            if k == 0 || k > 16 {
                return Err(usage("k must lie in 1..=16"));
            }
            (estimate_split_probability(k, trials, seed), json)
        }
        Experiment::Amplification {
            k,
            amplification,
            meta_trials,
            seed,
            json,
        } => {
            if k == 0 || k > 8 || !(amplification > 0.0 && amplification <= 1e3) {
                return Err(usage("need 1 <= k <= 8 and 0 < amplification <= 1000"));
            }
            (
                estimate_amplification(k, amplification, meta_trials, seed),
                json,
            )
        }
    };
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        println!("{report}");
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> CmdResult {
    let fam = match (args.n, args.t) {
        (Some(n), Some(t)) => {
            let fam = build_universal_set(n, t, DEFAULT_UNIVERSAL_CAP).map_err(|e| match e {
                PartitionError::InvalidParameters { .. } => usage(e),
                _ => capacity(e),
            })?;
            if args.emit {
                print!("{}", fam.to_text());
            }
            fam
        }
        (None, t) => UniversalSetFamily::parse(&read_input(&args.io.input)?, t).map_err(usage)?,
        (Some(_), None) => unreachable!("clap enforces --t with --n"),
    };
    let verdict = verify_universal(&fam, DEFAULT_CONSTRAINT_BUDGET).map_err(capacity)?;
    if args.io.json {
        let body = match &verdict {
            Verification::Universal => json!({ "universal": true }),
            Verification::Violated { indices, pattern } => json!({
                "universal": false,
                "indices": indices,
                "pattern": pattern.iter().map(|&b| b as u8).collect::<Vec<_>>(),
            }),
        };
        println!(
            "{}",
            json!({ "n": fam.n(), "t": fam.t(), "size": fam.len(), "verdict": body })
        );
    } else {
        println!("{verdict}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Oracle(a) => oracle(a),
        Command::Gen(a) => gen(a),
        Command::Experiment { which } => experiment(which),
        Command::VerifyUniversal(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Capacity(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
