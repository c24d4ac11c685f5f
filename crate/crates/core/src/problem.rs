//! Objective problems: bounds, shift handling, and population evaluation.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::individual::{Genes, Individual, Sense};
use crate::rng::SeededRng;

/// Evaluation procedure for one genome family.
#[derive(Clone)]
pub enum EvalFn {
    Real(Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>),
    Perm(Arc<dyn Fn(&[usize]) -> f64 + Send + Sync>),
}

/// A box-bounded objective problem.
///
/// When `shift` is present the function is evaluated at `x - shift`, which
/// relocates the optimum of the underlying formula to the shift point.
/// `additive_noise` adds a uniform `[0, 1)` draw from the run's RNG stream
/// to every evaluation; it exists for the one noisy benchmark and keeps
/// runs reproducible because the noise comes from the caller's stream.
#[derive(Clone)]
pub struct ObjectiveProblem {
    pub dim: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub shift: Option<Vec<f64>>,
    pub sense: Sense,
    pub known_f_min: Option<f64>,
    pub additive_noise: bool,
    pub eval: EvalFn,
}

impl std::fmt::Debug for ObjectiveProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ObjectiveProblem")
            .field("dim", &self.dim)
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .field("shift", &self.shift)
            .field("sense", &self.sense)
            .field("known_f_min", &self.known_f_min)
            .field("additive_noise", &self.additive_noise)
            .finish()
    }
}

impl ObjectiveProblem {
    /// Continuous minimization problem with uniform bounds.
    pub fn continuous<F>(dim: usize, lower: f64, upper: f64, eval: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        ObjectiveProblem {
            dim,
            lower: vec![lower; dim],
            upper: vec![upper; dim],
            shift: None,
            sense: Sense::Minimize,
            known_f_min: None,
            additive_noise: false,
            eval: EvalFn::Real(Arc::new(eval)),
        }
    }

    /// Continuous minimization problem with per-coordinate bounds.
    pub fn continuous_with_bounds<F>(lower: Vec<f64>, upper: Vec<f64>, eval: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        assert_eq!(lower.len(), upper.len());
        ObjectiveProblem {
            dim: lower.len(),
            lower,
            upper,
            shift: None,
            sense: Sense::Minimize,
            known_f_min: None,
            additive_noise: false,
            eval: EvalFn::Real(Arc::new(eval)),
        }
    }

    /// Permutation minimization problem over `1..=n`.
    pub fn permutation<F>(n: usize, eval: F) -> Self
    where
        F: Fn(&[usize]) -> f64 + Send + Sync + 'static,
    {
        ObjectiveProblem {
            dim: n,
            lower: vec![1.0; n],
            upper: vec![n as f64; n],
            shift: None,
            sense: Sense::Minimize,
            known_f_min: None,
            additive_noise: false,
            eval: EvalFn::Perm(Arc::new(eval)),
        }
    }

    pub fn with_shift(mut self, shift: Vec<f64>) -> Self {
        assert_eq!(shift.len(), self.dim);
        self.shift = Some(shift);
        self
    }

    pub fn with_known_f_min(mut self, f_min: f64) -> Self {
        self.known_f_min = Some(f_min);
        self
    }

    pub fn with_additive_noise(mut self) -> Self {
        self.additive_noise = true;
        self
    }

    pub fn is_permutation(&self) -> bool {
        matches!(self.eval, EvalFn::Perm(_))
    }

    /// Validates bounds and dimensions.
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::config("problem dimension must be positive"));
        }
        if self.lower.len() != self.dim || self.upper.len() != self.dim {
            return Err(Error::config(format!(
                "bounds length {}/{} does not match dimension {}",
                self.lower.len(),
                self.upper.len(),
                self.dim
            )));
        }
        if let Some(shift) = &self.shift {
            if shift.len() != self.dim {
                return Err(Error::config(format!(
                    "shift length {} does not match dimension {}",
                    shift.len(),
                    self.dim
                )));
            }
        }
        if !self.is_permutation() {
            for i in 0..self.dim {
                if !(self.lower[i] < self.upper[i]) {
                    return Err(Error::config(format!(
                        "invalid bounds at coordinate {}: [{}, {}]",
                        i, self.lower[i], self.upper[i]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Evaluates a genome, applying the shift convention and optional noise.
    pub fn objective(&self, genes: &Genes, rng: &mut SeededRng) -> Result<f64> {
        let mut value = match (&self.eval, genes) {
            (EvalFn::Real(f), Genes::Real(x)) => {
                if x.len() != self.dim {
                    return Err(Error::usage(format!(
                        "gene length {} does not match problem dimension {}",
                        x.len(),
                        self.dim
                    )));
                }
                match &self.shift {
                    Some(s) => {
                        let z: Vec<f64> = x.iter().zip(s).map(|(xi, si)| xi - si).collect();
                        f(&z)
                    }
                    None => f(x),
                }
            }
            (EvalFn::Perm(f), Genes::Perm(p)) => {
                if p.len() != self.dim {
                    return Err(Error::usage(format!(
                        "permutation length {} does not match problem size {}",
                        p.len(),
                        self.dim
                    )));
                }
                f(p)
            }
            _ => {
                return Err(Error::usage(
                    "gene representation does not match problem kind",
                ))
            }
        };
        if self.additive_noise {
            value += rng.gen::<f64>();
        }
        Ok(value)
    }
}

/// Counts objective evaluations for budget reporting. Termination is by
/// iteration count; this exists so runs can report how much work they did.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalCounter(pub u64);

impl EvalCounter {
    pub fn new() -> Self {
        EvalCounter(0)
    }

    pub fn count(&self) -> u64 {
        self.0
    }
}

/// Draws a random population of `size` individuals, all unevaluated.
///
/// Real-vector genes are uniform per coordinate within the bounds;
/// permutations are uniform over all orderings of `1..=n`.
pub fn init_population(
    problem: &ObjectiveProblem,
    size: usize,
    rng: &mut SeededRng,
) -> Result<Vec<Individual>> {
    problem.validate()?;
    if size == 0 {
        return Err(Error::config("population size must be at least 1"));
    }
    let mut pop = Vec::with_capacity(size);
    for _ in 0..size {
        let genes = if problem.is_permutation() {
            let mut perm: Vec<usize> = (1..=problem.dim).collect();
            perm.shuffle(rng);
            Genes::Perm(perm)
        } else {
            let values = (0..problem.dim)
                .map(|i| rng.gen_range(problem.lower[i]..=problem.upper[i]))
                .collect();
            Genes::Real(values)
        };
        pop.push(Individual::new(genes));
    }
    Ok(pop)
}

/// Clamps every coordinate into the problem's box bounds.
///
/// Out-of-bounds offspring are repaired by clamping; in-bounds inputs come
/// back unchanged, and the operation is idempotent.
pub fn clamp_to_bounds(genes: &mut [f64], problem: &ObjectiveProblem) {
    debug_assert_eq!(genes.len(), problem.dim);
    for (i, g) in genes.iter_mut().enumerate() {
        *g = g.clamp(problem.lower[i], problem.upper[i]);
    }
}

/// Caches the objective of every individual that has not been evaluated
/// yet. Already-evaluated individuals are left untouched and do not count
/// against the budget. Genes are never modified.
pub fn evaluate(
    pop: &mut [Individual],
    problem: &ObjectiveProblem,
    rng: &mut SeededRng,
    counter: &mut EvalCounter,
) -> Result<()> {
    for ind in pop.iter_mut() {
        if ind.evaluated {
            continue;
        }
        ind.objective = problem.objective(&ind.genes, rng)?;
        ind.evaluated = true;
        counter.0 += 1;
    }
    Ok(())
}
