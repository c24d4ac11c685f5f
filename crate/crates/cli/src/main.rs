//! `lpb` - batch experiment CLI for the LPB optimization toolkit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lpb_cli::config::{Algorithm, ExperimentConfig};
use lpb_cli::{emit_all, emit_significance_csv, harness, run_experiment};
use lpb_core::benchmarks::{self, ProblemOptions};
use lpb_core::error::{Error, Result};
use lpb_core::gap::{self, AssignmentInstance};
use lpb_core::lpb::LpbParams;
use lpb_core::rng::SeededRng;
use lpb_core::stats;

#[derive(Parser)]
#[command(
    name = "lpb",
    about = "LPB optimizer toolkit: benchmark batches, baselines, statistics, and assignment solving",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every registered benchmark function.
    List,
    /// Run a batch experiment and emit summary/convergence/run CSVs.
    Bench(BenchArgs),
    /// Solve a one-to-one assignment instance with LPB.
    Gap(GapArgs),
    /// Wilcoxon rank-sum significance table between two result directories.
    Stats(StatsArgs),
    /// Check every registry function's value at its known optimum.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct BenchArgs {
    /// JSON config file; flags below override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Optimizer: lpb, ga, or pso.
    #[arg(long)]
    algo: Option<String>,
    /// Comma-separated function ids; ranges like TF1..TF19 are accepted.
    #[arg(long, value_delimiter = ',')]
    functions: Vec<String>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    iterations: Option<usize>,
    #[arg(long)]
    population: Option<usize>,
    /// Division probability for LPB's reference sample.
    #[arg(long)]
    dp: Option<f64>,
    #[arg(long)]
    crossover_count: Option<usize>,
    #[arg(long)]
    mutation_count: Option<usize>,
    #[arg(long)]
    per_gene_prob: Option<f64>,
    /// Master seed; per-run seeds derive from it.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for the CSV set.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum concurrent runs (default: one per CPU).
    #[arg(long)]
    jobs: Option<usize>,
    /// Evaluate the raw formulas without the default shift vectors.
    #[arg(long)]
    no_shift: bool,
    /// Directory with CEC data files (default: data/cec).
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

#[derive(Args)]
struct GapArgs {
    /// Generate a random instance of this size.
    #[arg(long, conflicts_with = "instance")]
    size: Option<usize>,
    /// Load an instance file (first line n, then n rows of n costs).
    #[arg(long)]
    instance: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    iterations: usize,
    #[arg(long, default_value_t = 80)]
    population: usize,
    /// Directory for solution.json and the convergence CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// First result directory (reads runs.csv).
    #[arg(long)]
    a: PathBuf,
    /// Second result directory (reads runs.csv).
    #[arg(long)]
    b: PathBuf,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Directory with CEC data files (default: data/cec).
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err @ Error::Io(_)) => {
            eprintln!("{err}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::List => cmd_list(),
        Command::Bench(args) => cmd_bench(args),
        Command::Gap(args) => cmd_gap(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Selftest(args) => cmd_selftest(args),
    }
}

fn cmd_list() -> Result<()> {
    for spec in benchmarks::registry() {
        let shift = match &spec.shift {
            Some(s) => format!("shift {}", s[0]),
            None => "unshifted".to_string(),
        };
        let noise = if spec.stochastic { " noisy" } else { "" };
        println!(
            "{:<6} dim {:>2}  range [{}, {}]  f_min {}  {}{}",
            spec.id, spec.dim, spec.lower[0], spec.upper[0], spec.f_min, shift, noise
        );
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let mut config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
            ExperimentConfig::from_json(&text)?
        }
        None => {
            let algo: Algorithm = args
                .algo
                .as_deref()
                .ok_or_else(|| Error::config("--algo is required without --config"))?
                .parse()?;
            if args.functions.is_empty() {
                return Err(Error::config("--functions is required without --config"));
            }
            ExperimentConfig::new(algo, args.functions.clone())
        }
    };

    if args.config.is_some() {
        if let Some(algo) = &args.algo {
            config.algorithm = algo.parse()?;
        }
        if !args.functions.is_empty() {
            config.functions = args.functions.clone();
        }
    }
    if let Some(v) = args.runs {
        config.runs = v;
    }
    if let Some(v) = args.iterations {
        config.iterations = v;
    }
    if let Some(v) = args.population {
        config.population = v;
    }
    if let Some(v) = args.dp {
        config.dp = v;
    }
    if let Some(v) = args.crossover_count {
        config.crossover_count = Some(v);
    }
    if let Some(v) = args.mutation_count {
        config.mutation_count = Some(v);
    }
    if let Some(v) = args.per_gene_prob {
        config.per_gene_mutation_prob = Some(v);
    }
    if let Some(v) = args.seed {
        config.seed = v;
    }
    if let Some(v) = args.out {
        config.output_dir = v;
    }
    if let Some(v) = args.jobs {
        config.jobs = Some(v);
    }
    if args.no_shift {
        config.disable_shift = true;
    }
    if let Some(v) = args.data_dir {
        config.cec_data_dir = Some(v);
    }
    if config.cec_data_dir.is_none() {
        config.cec_data_dir = Some(PathBuf::from("data/cec"));
    }

    let result = run_experiment(&config)?;
    emit_all(&result, &config.output_dir)?;
    for s in &result.summaries {
        println!(
            "{:<6} {}  ave {:e}  std {:e}  pt {:.3}s",
            s.function,
            s.algorithm.name(),
            s.summary.mean,
            s.summary.std,
            s.summary.mean_pt_seconds
        );
    }
    println!("wrote {}", config.output_dir.display());
    Ok(())
}

fn cmd_gap(args: GapArgs) -> Result<()> {
    let instance = match (&args.instance, args.size) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
            AssignmentInstance::from_text(&text)?
        }
        (None, Some(size)) => {
            let mut rng = SeededRng::new(args.seed);
            gap::generate_instance(size, &mut rng)?
        }
        (None, None) => {
            return Err(Error::config("either --size or --instance is required"));
        }
    };

    let mut params = LpbParams::for_population(args.population, args.seed)
        .with_iterations(args.iterations);
    params.seed = args.seed;
    let outcome = gap::solve_lpb(&instance, &params)?;

    let report = serde_json::json!({
        "n": instance.n,
        "perm": outcome.solution.perm,
        "total_cost": outcome.solution.total_cost,
        "exact_cost": outcome.exact_cost,
        "generations": outcome.generations_to_optimum,
        "pt_seconds": outcome.record.pt_seconds,
    });
    let rendered = serde_json::to_string_pretty(&report)
        .map_err(|e| Error::config(format!("cannot serialize solution: {e}")))?;
    println!("{rendered}");

    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("solution.json"), format!("{rendered}\n"))?;
        let labeled = harness::LabeledRecord {
            function: format!("GAP{}", instance.n),
            algorithm: Algorithm::Lpb,
            run: 0,
            record: outcome.record.clone(),
        };
        harness::emit_convergence_csv(
            std::slice::from_ref(&labeled),
            &dir.join("gap_convergence.csv"),
        )?;
        println!("wrote {}", dir.display());
    }
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let batch_a = harness::read_runs_csv(&args.a.join("runs.csv"))?;
    let batch_b = harness::read_runs_csv(&args.b.join("runs.csv"))?;
    let rows = stats::significance_table(&batch_a, &batch_b)?;
    match &args.out {
        Some(path) => {
            emit_significance_csv(&rows, path)?;
            println!("wrote {}", path.display());
        }
        None => {
            println!("function,p_value,significant");
            for row in &rows {
                println!("{},{},{}", row.function, row.p_value, row.significant);
            }
        }
    }
    Ok(())
}

fn cmd_selftest(args: SelftestArgs) -> Result<()> {
    let dir = args.data_dir.unwrap_or_else(|| PathBuf::from("data/cec"));
    let options = ProblemOptions::with_cec_dir(dir);
    let mut failures = 0;
    for spec in benchmarks::registry() {
        match spec.self_check(&options) {
            Ok((value, expected, tolerance)) if (value - expected).abs() <= tolerance => {
                println!("{:<6} ok ({value} vs {expected})", spec.id);
            }
            Ok((value, expected, tolerance)) => {
                println!(
                    "{:<6} FAIL ({value} vs {expected}, tolerance {tolerance})",
                    spec.id
                );
                failures += 1;
            }
            Err(err) => {
                println!("{:<6} FAIL ({err})", spec.id);
                failures += 1;
            }
        }
    }
    if failures > 0 {
        return Err(Error::config(format!(
            "{failures} registry self-checks failed"
        )));
    }
    println!("all registry self-checks passed");
    Ok(())
}
