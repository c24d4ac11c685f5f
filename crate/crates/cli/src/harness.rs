//! Batch experiment runner and CSV emission.
//!
//! A batch is `runs x functions` independent optimizations. Each run draws
//! its seed as `derive_seed(master, function_id, run_index)`, so the
//! emitted numbers depend only on (master seed, config) - never on thread
//! scheduling - and adding functions to a batch does not perturb the
//! streams of existing ones. Only the wall-clock PT columns vary between
//! repeat executions.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use lpb_core::baselines::{ga_run, pso_run, GaParams, PsoParams};
use lpb_core::benchmarks::{FunctionSpec, ProblemOptions};
use lpb_core::error::{Error, Result};
use lpb_core::lpb::{self, LpbParams, RunRecord};
use lpb_core::rng::derive_seed;
use lpb_core::stats::{self, BatchSummary, SignificanceRow};

use crate::config::{Algorithm, ExperimentConfig};

/// One optimization run tagged with its place in the batch.
#[derive(Debug, Clone)]
pub struct LabeledRecord {
    pub function: String,
    pub algorithm: Algorithm,
    pub run: usize,
    pub record: RunRecord,
}

/// Per-function batch summary.
#[derive(Debug, Clone)]
pub struct FunctionSummary {
    pub function: String,
    pub algorithm: Algorithm,
    pub summary: BatchSummary,
}

/// Everything a batch produced.
#[derive(Debug)]
pub struct ExperimentResult {
    pub records: Vec<LabeledRecord>,
    pub summaries: Vec<FunctionSummary>,
}

fn run_one(
    config: &ExperimentConfig,
    spec: &FunctionSpec,
    problem: &lpb_core::ObjectiveProblem,
    run_index: usize,
) -> Result<RunRecord> {
    let seed = derive_seed(config.seed, spec.id, run_index as u64);
    match config.algorithm {
        Algorithm::Lpb => {
            let mut params = LpbParams::for_population(config.population, seed)
                .with_iterations(config.iterations);
            params.dp = config.dp;
            if let Some(c) = config.crossover_count {
                params.crossover_count = c;
            }
            if let Some(m) = config.mutation_count {
                params.mutation_count = m;
            }
            params.per_gene_mutation_prob = config.per_gene_mutation_prob;
            lpb::run(problem, &params)
        }
        Algorithm::Ga => {
            let mut params = GaParams::for_population(config.population, seed)
                .with_iterations(config.iterations);
            if let Some(c) = config.crossover_count {
                params.crossover_count = c;
            }
            if let Some(m) = config.mutation_count {
                params.mutation_count = m;
            }
            params.per_gene_mutation_prob = config.per_gene_mutation_prob;
            ga_run(problem, &params)
        }
        Algorithm::Pso => {
            let mut params = PsoParams::new(seed).with_iterations(config.iterations);
            params.swarm_size = config.population;
            pso_run(problem, &params)
        }
    }
}

/// Runs the whole batch. Runs are dispatched in parallel (bounded by
/// `config.jobs` when set) and collected in (function, run) order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    let specs = config.validate()?;
    let options = ProblemOptions {
        disable_shift: config.disable_shift,
        cec_data_dir: config.cec_data_dir.clone(),
    };
    // Problems are built once up front so configuration errors (missing
    // data files, bad bounds) surface before any run starts.
    let problems: Vec<_> = specs
        .iter()
        .map(|spec| spec.problem(&options))
        .collect::<Result<_>>()?;

    let tasks: Vec<(usize, usize)> = (0..specs.len())
        .flat_map(|f| (0..config.runs).map(move |r| (f, r)))
        .collect();

    let execute = || -> Result<Vec<LabeledRecord>> {
        tasks
            .par_iter()
            .map(|&(f, r)| {
                let record = run_one(config, &specs[f], &problems[f], r)?;
                Ok(LabeledRecord {
                    function: specs[f].id.to_string(),
                    algorithm: config.algorithm,
                    run: r,
                    record,
                })
            })
            .collect()
    };
    let mut records = match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::config(format!("cannot build thread pool: {e}")))?
            .install(execute),
        None => execute(),
    }?;
    records.sort_by(|a, b| {
        let fa = specs.iter().position(|s| s.id == a.function).unwrap();
        let fb = specs.iter().position(|s| s.id == b.function).unwrap();
        (fa, a.run).cmp(&(fb, b.run))
    });

    let mut summaries = Vec::with_capacity(specs.len());
    for spec in &specs {
        let finals: Vec<f64> = records
            .iter()
            .filter(|rec| rec.function == spec.id)
            .map(|rec| rec.record.final_objective())
            .collect();
        let pts: Vec<f64> = records
            .iter()
            .filter(|rec| rec.function == spec.id)
            .map(|rec| rec.record.pt_seconds)
            .collect();
        summaries.push(FunctionSummary {
            function: spec.id.to_string(),
            algorithm: config.algorithm,
            summary: stats::summarize(&finals, &pts)?,
        });
    }

    Ok(ExperimentResult { records, summaries })
}

fn create(path: &Path) -> Result<std::io::BufWriter<std::fs::File>> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    Ok(std::io::BufWriter::new(std::fs::File::create(path)?))
}

/// `function,algorithm,ave,std,pt_seconds` - one row per function.
pub fn emit_summary_csv(summaries: &[FunctionSummary], path: &Path) -> Result<()> {
    let mut w = create(path)?;
    writeln!(w, "function,algorithm,ave,std,pt_seconds")?;
    for s in summaries {
        writeln!(
            w,
            "{},{},{},{},{}",
            s.function,
            s.algorithm.name(),
            s.summary.mean,
            s.summary.std,
            s.summary.mean_pt_seconds
        )?;
    }
    Ok(())
}

/// `function,algorithm,run,seed,final,pt_seconds` - one row per run; the
/// raw material summaries and significance tables are recomputable from.
pub fn emit_runs_csv(records: &[LabeledRecord], path: &Path) -> Result<()> {
    let mut w = create(path)?;
    writeln!(w, "function,algorithm,run,seed,final,pt_seconds")?;
    for rec in records {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            rec.function,
            rec.algorithm.name(),
            rec.run,
            rec.record.seed,
            rec.record.final_objective(),
            rec.record.pt_seconds
        )?;
    }
    Ok(())
}

/// `run,iteration,best_objective` for one function's batch;
/// `runs x iterations` data rows.
pub fn emit_convergence_csv(records: &[LabeledRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::usage("no records to emit"));
    }
    let mut w = create(path)?;
    writeln!(w, "run,iteration,best_objective")?;
    for rec in records {
        for (i, v) in rec.record.trace.iter().enumerate() {
            writeln!(w, "{},{},{}", rec.run, i + 1, v)?;
        }
    }
    Ok(())
}

/// `function,p_value,significant` per the rank-sum module.
pub fn emit_significance_csv(rows: &[SignificanceRow], path: &Path) -> Result<()> {
    let mut w = create(path)?;
    writeln!(w, "function,p_value,significant")?;
    for row in rows {
        writeln!(w, "{},{},{}", row.function, row.p_value, row.significant)?;
    }
    Ok(())
}

/// Writes the standard output set of a batch into `dir`: `summary.csv`,
/// `runs.csv`, and one `convergence_{algo}_{function}.csv` per function.
pub fn emit_all(result: &ExperimentResult, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    emit_summary_csv(&result.summaries, &dir.join("summary.csv"))?;
    emit_runs_csv(&result.records, &dir.join("runs.csv"))?;
    for summary in &result.summaries {
        let records: Vec<LabeledRecord> = result
            .records
            .iter()
            .filter(|r| r.function == summary.function)
            .cloned()
            .collect();
        let name = format!(
            "convergence_{}_{}.csv",
            summary.algorithm.name(),
            summary.function
        );
        emit_convergence_csv(&records, &dir.join(name))?;
    }
    Ok(())
}

/// Reads the per-run finals of a `runs.csv`, grouped by function in file
/// order. Used by the significance subcommand.
pub fn read_runs_csv(path: &Path) -> Result<Vec<(String, Vec<f64>)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::config(format!("{} is empty", path.display())))?;
    let columns: Vec<&str> = header.split(',').collect();
    let function_col = columns
        .iter()
        .position(|&c| c == "function")
        .ok_or_else(|| Error::config("runs.csv misses a 'function' column"))?;
    let final_col = columns
        .iter()
        .position(|&c| c == "final")
        .ok_or_else(|| Error::config("runs.csv misses a 'final' column"))?;

    let mut batches: Vec<(String, Vec<f64>)> = Vec::new();
    for (number, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let function = fields
            .get(function_col)
            .ok_or_else(|| Error::config(format!("truncated row {} in runs.csv", number + 2)))?
            .to_string();
        let value: f64 = fields
            .get(final_col)
            .ok_or_else(|| Error::config(format!("truncated row {} in runs.csv", number + 2)))?
            .parse()
            .map_err(|e| Error::config(format!("bad final on row {}: {e}", number + 2)))?;
        match batches.iter_mut().find(|(id, _)| *id == function) {
            Some((_, finals)) => finals.push(value),
            None => batches.push((function, vec![value])),
        }
    }
    Ok(batches)
}
