//! Reference GA and PSO optimizers for budget-matched comparisons.
//!
//! Both return the same [`RunRecord`] shape as the LPB runner and count
//! evaluations the same way, so quality and processing-time columns are
//! directly comparable. Hyperparameter defaults are this crate's choices
//! and are overridable; comparisons produced with them are re-runs, not
//! literature-identical settings.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::individual::{FitnessOrdering, Genes, Individual};
use crate::lpb::RunRecord;
use crate::operators::{
    default_crossover_count, default_mutation_count, default_per_gene_prob, one_point_crossover,
    pmx_crossover, swap_mutation, uniform_mutation,
};
use crate::problem::{clamp_to_bounds, evaluate, init_population, EvalCounter, ObjectiveProblem};
use crate::rng::SeededRng;

/// Generational GA settings: tournament parent selection, elitism of one,
/// and the same per-generation variation counts as LPB.
#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    pub population_size: usize,
    pub crossover_count: usize,
    pub mutation_count: usize,
    pub per_gene_mutation_prob: Option<f64>,
    pub tournament_size: usize,
    pub max_iterations: usize,
    pub seed: u64,
}

impl GaParams {
    pub fn new(seed: u64) -> Self {
        GaParams::for_population(80, seed)
    }

    pub fn for_population(population_size: usize, seed: u64) -> Self {
        GaParams {
            population_size,
            crossover_count: default_crossover_count(population_size),
            mutation_count: default_mutation_count(population_size),
            per_gene_mutation_prob: None,
            tournament_size: 2,
            max_iterations: 500,
            seed,
        }
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.max_iterations = iterations;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::config("GA population must be at least 2"));
        }
        if self.crossover_count % 2 != 0 {
            return Err(Error::config("GA crossover count must be even"));
        }
        if self.tournament_size == 0 {
            return Err(Error::config("tournament size must be at least 1"));
        }
        if self.max_iterations == 0 {
            return Err(Error::config("max iterations must be at least 1"));
        }
        Ok(())
    }
}

fn tournament_pick<'a>(
    pop: &'a [Individual],
    size: usize,
    ordering: FitnessOrdering,
    rng: &mut SeededRng,
) -> &'a Individual {
    let mut winner = &pop[rng.gen_range(0..pop.len())];
    for _ in 1..size {
        let challenger = &pop[rng.gen_range(0..pop.len())];
        if ordering.better(challenger.objective, winner.objective) {
            winner = challenger;
        }
    }
    winner
}

/// Standard generational GA run. Each generation over-produces a child
/// pool (offspring plus mutants) from tournament-selected parents; the
/// children replace the old population, which survives only through the
/// single elite. When the pool overshoots the population size a uniform
/// random subset of children is kept, so offspring and mutants enter at
/// the same rate they were produced.
pub fn ga_run(problem: &ObjectiveProblem, params: &GaParams) -> Result<RunRecord> {
    params.validate()?;
    problem.validate()?;
    let started = Instant::now();
    let ordering = FitnessOrdering::new(problem.sense);
    let mut rng = SeededRng::new(params.seed);
    let mut counter = EvalCounter::new();
    let per_gene = params
        .per_gene_mutation_prob
        .unwrap_or_else(|| default_per_gene_prob(problem.dim));

    let mut pop = init_population(problem, params.population_size, &mut rng)?;
    evaluate(&mut pop, problem, &mut rng, &mut counter)?;
    let mut best = pop[ordering.best_index(&pop).unwrap()].clone();

    let mut trace = Vec::with_capacity(params.max_iterations);
    for _ in 0..params.max_iterations {
        let mut children =
            Vec::with_capacity(params.crossover_count + params.mutation_count);
        for _ in 0..params.crossover_count / 2 {
            let a = tournament_pick(&pop, params.tournament_size, ordering, &mut rng).clone();
            let b = tournament_pick(&pop, params.tournament_size, ordering, &mut rng).clone();
            let (mut c1, mut c2) = if problem.is_permutation() {
                pmx_crossover(&a, &b, &mut rng)?
            } else {
                one_point_crossover(&a, &b, &mut rng)?
            };
            for child in [&mut c1, &mut c2] {
                if let Genes::Real(values) = &mut child.genes {
                    clamp_to_bounds(values, problem);
                }
            }
            children.push(c1);
            children.push(c2);
        }
        for _ in 0..params.mutation_count {
            let parent = tournament_pick(&pop, params.tournament_size, ordering, &mut rng);
            let mutant = if problem.is_permutation() {
                swap_mutation(parent, &mut rng)?
            } else {
                uniform_mutation(parent, problem, per_gene, &mut rng)?
            };
            children.push(mutant);
        }
        evaluate(&mut children, problem, &mut rng, &mut counter)?;

        children.shuffle(&mut rng);
        let mut next = Vec::with_capacity(params.population_size);
        next.push(best.clone());
        next.extend(children.into_iter().take(params.population_size - 1));
        if next.len() < params.population_size {
            // Variation under-produced; retain the best of the old
            // population to keep the size invariant.
            ordering.sort_best_first(&mut pop);
            let deficit = params.population_size - next.len();
            next.extend(pop.into_iter().take(deficit));
        }
        pop = next;

        let gen_best = &pop[ordering.best_index(&pop).unwrap()];
        if ordering.better(gen_best.objective, best.objective) {
            best = gen_best.clone();
        }
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

/// Global-best PSO settings. Inertia decays linearly from `inertia_start`
/// to `inertia_end` over the run; velocities are clamped to
/// `velocity_clamp` times the per-coordinate range.
#[derive(Debug, Clone, PartialEq)]
pub struct PsoParams {
    pub swarm_size: usize,
    pub inertia_start: f64,
    pub inertia_end: f64,
    pub cognitive: f64,
    pub social: f64,
    pub velocity_clamp: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

impl PsoParams {
    pub fn new(seed: u64) -> Self {
        PsoParams {
            swarm_size: 80,
            inertia_start: 0.9,
            inertia_end: 0.4,
            cognitive: 2.0,
            social: 2.0,
            velocity_clamp: 0.1,
            max_iterations: 500,
            seed,
        }
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.max_iterations = iterations;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.swarm_size < 2 {
            return Err(Error::config("swarm must have at least 2 particles"));
        }
        // The zero-inertia, zero-coefficient corner is allowed so a frozen
        // swarm stays expressible.
        for (name, w) in [("inertia_start", self.inertia_start), ("inertia_end", self.inertia_end)] {
            if !(0.0..1.0).contains(&w) {
                return Err(Error::config(format!("{name} {w} must lie in [0, 1)")));
            }
        }
        if self.cognitive < 0.0 || self.social < 0.0 {
            return Err(Error::config("acceleration coefficients must be non-negative"));
        }
        if !(self.velocity_clamp > 0.0 && self.velocity_clamp <= 1.0) {
            return Err(Error::config("velocity clamp must lie in (0, 1]"));
        }
        if self.max_iterations == 0 {
            return Err(Error::config("max iterations must be at least 1"));
        }
        Ok(())
    }
}

/// Global-best PSO run with per-dimension random coefficients and
/// positions clamped to the bounds.
pub fn pso_run(problem: &ObjectiveProblem, params: &PsoParams) -> Result<RunRecord> {
    params.validate()?;
    problem.validate()?;
    if problem.is_permutation() {
        return Err(Error::usage("PSO supports continuous problems only"));
    }
    let started = Instant::now();
    let ordering = FitnessOrdering::new(problem.sense);
    let mut rng = SeededRng::new(params.seed);
    let mut counter = EvalCounter::new();
    let dim = problem.dim;
    let vmax: Vec<f64> = (0..dim)
        .map(|i| params.velocity_clamp * (problem.upper[i] - problem.lower[i]))
        .collect();

    let mut swarm = init_population(problem, params.swarm_size, &mut rng)?;
    evaluate(&mut swarm, problem, &mut rng, &mut counter)?;
    let mut velocity = vec![vec![0.0; dim]; params.swarm_size];
    let mut personal_best = swarm.clone();
    let mut global_best = swarm[ordering.best_index(&swarm).unwrap()].clone();

    let mut trace = Vec::with_capacity(params.max_iterations);
    for iter in 0..params.max_iterations {
        let progress = if params.max_iterations > 1 {
            iter as f64 / (params.max_iterations - 1) as f64
        } else {
            0.0
        };
        let w = params.inertia_start + (params.inertia_end - params.inertia_start) * progress;

        for (i, particle) in swarm.iter_mut().enumerate() {
            let x = match &mut particle.genes {
                Genes::Real(x) => x,
                Genes::Perm(_) => unreachable!("permutation rejected above"),
            };
            let pbest = personal_best[i].genes.as_real().unwrap();
            let gbest = global_best.genes.as_real().unwrap();
            for d in 0..dim {
                let r1 = rng.gen::<f64>();
                let r2 = rng.gen::<f64>();
                let v = w * velocity[i][d]
                    + params.cognitive * r1 * (pbest[d] - x[d])
                    + params.social * r2 * (gbest[d] - x[d]);
                velocity[i][d] = v.clamp(-vmax[d], vmax[d]);
                x[d] += velocity[i][d];
            }
            clamp_to_bounds(x, problem);
            particle.objective = problem.objective(&particle.genes, &mut rng)?;
            particle.evaluated = true;
            counter.0 += 1;

            if ordering.better(particle.objective, personal_best[i].objective) {
                personal_best[i] = particle.clone();
            }
            if ordering.better(particle.objective, global_best.objective) {
                global_best = particle.clone();
            }
        }
        trace.push(global_best.objective);
    }

    Ok(RunRecord {
        seed: params.seed,
        best: global_best,
        trace,
        pt_seconds: started.elapsed().as_secs_f64(),
        evaluations: counter.count(),
    })
}
