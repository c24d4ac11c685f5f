//! Candidate solutions and fitness ordering.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Genome of a candidate solution: a real vector for continuous problems
/// or a permutation of `1..=n` for assignment-style problems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Genes {
    Real(Vec<f64>),
    Perm(Vec<usize>),
}

impl Genes {
    pub fn len(&self) -> usize {
        match self {
            Genes::Real(v) => v.len(),
            Genes::Perm(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_real(&self) -> Option<&[f64]> {
        match self {
            Genes::Real(v) => Some(v),
            Genes::Perm(_) => None,
        }
    }

    pub fn as_perm(&self) -> Option<&[usize]> {
        match self {
            Genes::Perm(p) => Some(p),
            Genes::Real(_) => None,
        }
    }
}

/// Checks that `perm` contains each of `1..=n` exactly once.
pub fn is_valid_permutation(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        if v < 1 || v > n || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

/// A search agent: genes plus a cached objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub genes: Genes,
    pub objective: f64,
    pub evaluated: bool,
}

impl Individual {
    pub fn new(genes: Genes) -> Self {
        Individual {
            genes,
            objective: f64::NAN,
            evaluated: false,
        }
    }

    pub fn real(values: Vec<f64>) -> Self {
        Individual::new(Genes::Real(values))
    }

    pub fn perm(values: Vec<usize>) -> Self {
        Individual::new(Genes::Perm(values))
    }
}

/// Optimization direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Comparison of cached objective values under an optimization sense.
///
/// Benchmarks minimize while the algorithm's selection narrative is
/// phrased in higher-is-better terms; this type is the single bridge
/// between the two. `better(a, b)` is a strict weak ordering, and sorts
/// through [`FitnessOrdering::cmp`] are stable so ties keep their
/// original index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitnessOrdering {
    pub sense: Sense,
}

impl FitnessOrdering {
    pub fn new(sense: Sense) -> Self {
        FitnessOrdering { sense }
    }

    pub fn minimize() -> Self {
        FitnessOrdering::new(Sense::Minimize)
    }

    pub fn maximize() -> Self {
        FitnessOrdering::new(Sense::Maximize)
    }

    /// True when objective `a` is strictly better than `b`.
    pub fn better(&self, a: f64, b: f64) -> bool {
        self.cmp(a, b) == Ordering::Less
    }

    pub fn equal(&self, a: f64, b: f64) -> bool {
        self.cmp(a, b) == Ordering::Equal
    }

    /// Total order with the better value first. NaN sorts as worst so a
    /// stray unevaluated individual can never win selection.
    pub fn cmp(&self, a: f64, b: f64) -> Ordering {
        match self.sense {
            Sense::Minimize => a.total_cmp(&b),
            Sense::Maximize => b.total_cmp(&a),
        }
    }

    /// Index of the best objective in `pop`; ties go to the lowest index.
    pub fn best_index(&self, pop: &[Individual]) -> Option<usize> {
        if pop.is_empty() {
            return None;
        }
        let mut best = 0;
        for i in 1..pop.len() {
            if self.better(pop[i].objective, pop[best].objective) {
                best = i;
            }
        }
        Some(best)
    }

    /// Stable best-first sort of a population.
    pub fn sort_best_first(&self, pop: &mut [Individual]) {
        pop.sort_by(|a, b| self.cmp(a.objective, b.objective));
    }
}
