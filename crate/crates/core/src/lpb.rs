//! The LPB (learner performance based behavior) optimizer.
//!
//! Each generation samples a reference group `O` from the population
//! using the division probability `dp`, splits it into good and bad
//! halves, and uses the best objective of each half as thresholds to tier
//! the whole population into bad (`BP`), good (`GP`) and perfect (`PF`)
//! sub-populations. The next generation's parents are drawn perfect-first,
//! then good, then bad, after which one-point crossover (PMX in
//! permutation mode) and uniform mutation (swap in permutation mode)
//! append fresh offspring and mutants. The best solution ever seen is
//! tracked outside the population.

use std::time::Instant;

use rand::Rng;

use crate::error::{Error, Result};
use crate::individual::{FitnessOrdering, Genes, Individual};
use crate::operators::{
    default_crossover_count, default_mutation_count, default_per_gene_prob, one_point_crossover,
    pair_parents, pmx_crossover, swap_mutation, uniform_mutation,
};
use crate::problem::{clamp_to_bounds, evaluate, init_population, EvalCounter, ObjectiveProblem};
use crate::rng::SeededRng;

/// Parameters of one LPB run.
#[derive(Debug, Clone, PartialEq)]
pub struct LpbParams {
    /// Number of individuals kept by selection each generation (N).
    pub population_size: usize,
    /// Fraction of the population sampled into the reference group O.
    pub dp: f64,
    /// Offspring produced per generation; even.
    pub crossover_count: usize,
    /// Mutants produced per generation.
    pub mutation_count: usize,
    /// Per-gene resampling probability for uniform mutation.
    /// `None` uses the dimension-based default.
    pub per_gene_mutation_prob: Option<f64>,
    pub max_iterations: usize,
    pub seed: u64,
}

impl LpbParams {
    /// Defaults: population 80, dp 0.5, 112 offspring, 16 mutants,
    /// 500 iterations.
    pub fn new(seed: u64) -> Self {
        LpbParams::for_population(80, seed)
    }

    /// Defaults with the variation counts derived from `population_size`.
    pub fn for_population(population_size: usize, seed: u64) -> Self {
        LpbParams {
            population_size,
            dp: 0.5,
            crossover_count: default_crossover_count(population_size),
            mutation_count: default_mutation_count(population_size),
            per_gene_mutation_prob: None,
            max_iterations: 500,
            seed,
        }
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.max_iterations = iterations;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 4 {
            return Err(Error::config(
                "population size must be at least 4 (two reference individuals and two parents)",
            ));
        }
        if !(self.dp > 0.0 && self.dp <= 1.0) {
            return Err(Error::config(format!("dp {} must lie in (0, 1]", self.dp)));
        }
        if self.crossover_count % 2 != 0 {
            return Err(Error::config(format!(
                "crossover count {} must be even",
                self.crossover_count
            )));
        }
        if self.max_iterations == 0 {
            return Err(Error::config("max iterations must be at least 1"));
        }
        if let Some(p) = self.per_gene_mutation_prob {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::config(format!(
                    "per-gene mutation probability {p} must lie in (0, 1]"
                )));
            }
        }
        Ok(())
    }
}

/// Three-way tiering of the population with the thresholds that defined it.
#[derive(Debug, Clone)]
pub struct PartitionResult {
    pub bad: Vec<Individual>,
    pub good: Vec<Individual>,
    pub perfect: Vec<Individual>,
    /// Best objective of the sampled bad group (t1).
    pub threshold_bad: f64,
    /// Best objective of the sampled good group (t2).
    pub threshold_good: f64,
}

impl PartitionResult {
    pub fn total_len(&self) -> usize {
        self.bad.len() + self.good.len() + self.perfect.len()
    }
}

/// Samples `max(2, round(dp * |M|))` individuals without replacement,
/// sorts them best-first, and splits into a good half (first `ceil(|O|/2)`,
/// the odd element goes to good) and a bad half.
pub fn sample_and_split(
    m: &[Individual],
    dp: f64,
    ordering: FitnessOrdering,
    rng: &mut SeededRng,
) -> Result<(Vec<Individual>, Vec<Individual>)> {
    if m.len() < 2 {
        return Err(Error::usage("sample_and_split needs at least 2 individuals"));
    }
    if !(dp > 0.0 && dp <= 1.0) {
        return Err(Error::config(format!("dp {dp} must lie in (0, 1]")));
    }
    let o_size = ((dp * m.len() as f64).round() as usize).clamp(2, m.len());
    let mut indices = rand::seq::index::sample(rng, m.len(), o_size).into_vec();
    // Ascending index order first so the objective sort breaks ties by
    // original position.
    indices.sort_unstable();
    let mut sampled: Vec<Individual> = indices.into_iter().map(|i| m[i].clone()).collect();
    ordering.sort_best_first(&mut sampled);
    let good_len = sampled.len().div_ceil(2);
    let bad = sampled.split_off(good_len);
    Ok((sampled, bad))
}

/// Tiers every individual of `m` against the reference thresholds: not
/// better than the bad group's best goes to BP, otherwise not better than
/// the good group's best goes to GP, otherwise to PF. The three tiers are
/// disjoint and exhaustive.
pub fn partition(
    m: &[Individual],
    good_group: &[Individual],
    bad_group: &[Individual],
    ordering: FitnessOrdering,
) -> Result<PartitionResult> {
    if good_group.is_empty() || bad_group.is_empty() {
        return Err(Error::usage("partition requires non-empty good and bad groups"));
    }
    let t1 = bad_group[ordering.best_index(bad_group).unwrap()].objective;
    let t2 = good_group[ordering.best_index(good_group).unwrap()].objective;

    let mut result = PartitionResult {
        bad: Vec::new(),
        good: Vec::new(),
        perfect: Vec::new(),
        threshold_bad: t1,
        threshold_good: t2,
    };
    for ind in m {
        if !ordering.better(ind.objective, t1) {
            result.bad.push(ind.clone());
        } else if !ordering.better(ind.objective, t2) {
            result.good.push(ind.clone());
        } else {
            result.perfect.push(ind.clone());
        }
    }
    Ok(result)
}

/// Selects `n` individuals, exhausting the perfect tier first, then the
/// good tier, then the bad tier, best-first within each tier and without
/// repetition.
pub fn staged_select(
    part: &PartitionResult,
    n: usize,
    ordering: FitnessOrdering,
) -> Result<Vec<Individual>> {
    if part.total_len() < n {
        return Err(Error::usage(format!(
            "cannot select {} individuals from a partition of {}",
            n,
            part.total_len()
        )));
    }
    let mut selected = Vec::with_capacity(n);
    for tier in [&part.perfect, &part.good, &part.bad] {
        if selected.len() == n {
            break;
        }
        let mut tier = tier.clone();
        ordering.sort_best_first(&mut tier);
        let take = (n - selected.len()).min(tier.len());
        selected.extend(tier.into_iter().take(take));
    }
    Ok(selected)
}

/// One generation: sample, tier, select N, then append crossover offspring
/// and mutants. Returns the grown population (all evaluated) and the best
/// individual seen so far including the incumbent.
pub fn step(
    m: &[Individual],
    incumbent: Option<&Individual>,
    params: &LpbParams,
    problem: &ObjectiveProblem,
    rng: &mut SeededRng,
    counter: &mut EvalCounter,
) -> Result<(Vec<Individual>, Individual)> {
    if m.len() < params.population_size {
        return Err(Error::usage(format!(
            "population of {} is smaller than selection size {}",
            m.len(),
            params.population_size
        )));
    }
    let ordering = FitnessOrdering::new(problem.sense);
    let (good, bad) = sample_and_split(m, params.dp, ordering, rng)?;
    let tiers = partition(m, &good, &bad, ordering)?;
    let selected = staged_select(&tiers, params.population_size, ordering)?;

    let per_gene = params
        .per_gene_mutation_prob
        .unwrap_or_else(|| default_per_gene_prob(problem.dim));

    let mut next = Vec::with_capacity(
        params.population_size + params.crossover_count + params.mutation_count,
    );
    next.extend(selected.iter().cloned());

    for (a, b) in pair_parents(&selected, params.crossover_count, rng)? {
        let (mut c1, mut c2) = if problem.is_permutation() {
            pmx_crossover(&a, &b, rng)?
        } else {
            one_point_crossover(&a, &b, rng)?
        };
        for child in [&mut c1, &mut c2] {
            if let Genes::Real(values) = &mut child.genes {
                clamp_to_bounds(values, problem);
            }
        }
        next.push(c1);
        next.push(c2);
    }

    for _ in 0..params.mutation_count {
        let parent = &selected[rng.gen_range(0..selected.len())];
        let mutant = if problem.is_permutation() {
            swap_mutation(parent, rng)?
        } else {
            uniform_mutation(parent, problem, per_gene, rng)?
        };
        next.push(mutant);
    }

    evaluate(&mut next, problem, rng, counter)?;

    let best_new = &next[ordering.best_index(&next).unwrap()];
    let iteration_best = match incumbent {
        Some(inc) if !ordering.better(best_new.objective, inc.objective) => inc.clone(),
        _ => best_new.clone(),
    };
    Ok((next, iteration_best))
}

/// The outcome of one optimization run.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub seed: u64,
    /// Best individual ever observed.
    pub best: Individual,
    /// Best-so-far objective after each iteration; length `max_iterations`.
    pub trace: Vec<f64>,
    /// Wall-clock duration of the run.
    pub pt_seconds: f64,
    /// Objective evaluations consumed.
    pub evaluations: u64,
}

impl RunRecord {
    pub fn final_objective(&self) -> f64 {
        self.best.objective
    }
}

/// A full LPB run: random initial population, `max_iterations` generations,
/// best-ever solution reported. Permutation problems automatically route
/// variation through PMX and swap mutation.
pub fn run(problem: &ObjectiveProblem, params: &LpbParams) -> Result<RunRecord> {
    params.validate()?;
    problem.validate()?;
    let started = Instant::now();
    let ordering = FitnessOrdering::new(problem.sense);
    let mut rng = SeededRng::new(params.seed);
    let mut counter = EvalCounter::new();

    let mut m = init_population(problem, params.population_size, &mut rng)?;
    evaluate(&mut m, problem, &mut rng, &mut counter)?;
    let mut best = m[ordering.best_index(&m).unwrap()].clone();

    let mut trace = Vec::with_capacity(params.max_iterations);
    for _ in 0..params.max_iterations {
        let (next, iteration_best) = step(&m, Some(&best), params, problem, &mut rng, &mut counter)?;
        m = next;
        best = iteration_best;
        trace.push(best.objective);
    }

    Ok(RunRecord {
        seed: params.seed,
        best,
        trace,
        pt_seconds: started.elapsed().as_secs_f64(),
        evaluations: counter.count(),
    })
}
