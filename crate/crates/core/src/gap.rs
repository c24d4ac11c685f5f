//! One-to-one assignment of cases to teams (the court-case problem).
//!
//! Instances are square cost matrices; solutions are permutations where
//! `perm[j] = i` assigns case `i` to team `j`. The permutation encoding
//! satisfies the one-case-per-team and one-team-per-case constraints by
//! construction. [`solve_exact`] certifies optimality with the Hungarian
//! method; [`solve_lpb`] runs the LPB optimizer in permutation mode.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::individual::is_valid_permutation;
use crate::lpb::{self, LpbParams, RunRecord};
use crate::problem::ObjectiveProblem;
use crate::rng::SeededRng;

/// A square assignment instance. `cost[i][j]` is the cost (hours) of
/// giving case `i` to team `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssignmentInstance {
    pub n: usize,
    pub cost: Vec<Vec<f64>>,
}

impl AssignmentInstance {
    pub fn new(cost: Vec<Vec<f64>>) -> Result<Self> {
        let n = cost.len();
        if n == 0 {
            return Err(Error::usage("assignment instance cannot be empty"));
        }
        for row in &cost {
            if row.len() != n {
                return Err(Error::usage("assignment cost matrix must be square"));
            }
            for &c in row {
                if !c.is_finite() || c < 0.0 {
                    return Err(Error::usage(
                        "assignment costs must be finite and non-negative",
                    ));
                }
            }
        }
        Ok(AssignmentInstance { n, cost })
    }

    /// Parses the plain-text instance format: first line `n`, then `n`
    /// lines of `n` whitespace-separated costs.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::config("empty instance file"))?
            .parse()
            .map_err(|e| Error::config(format!("invalid instance size: {e}")))?;
        let mut cost = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let tok = tokens.next().ok_or_else(|| {
                    Error::config(format!("instance file truncated at row {i}, column {j}"))
                })?;
                let v: f64 = tok
                    .parse()
                    .map_err(|e| Error::config(format!("invalid cost at ({i}, {j}): {e}")))?;
                row.push(v);
            }
            cost.push(row);
        }
        if tokens.next().is_some() {
            return Err(Error::config("instance file has trailing data"));
        }
        AssignmentInstance::new(cost)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in &self.cost {
            let line: Vec<String> = row.iter().map(|c| format!("{c}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Permutation-mode objective problem evaluating [`decode_cost`].
    pub fn to_problem(&self) -> ObjectiveProblem {
        let cost = self.cost.clone();
        ObjectiveProblem::permutation(self.n, move |perm| {
            perm.iter()
                .enumerate()
                .map(|(j, &i)| cost[i - 1][j])
                .sum()
        })
    }
}

/// A feasible assignment: `perm[j] = i` (1-based) gives case `i` to team
/// `j + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssignmentSolution {
    pub perm: Vec<usize>,
    pub total_cost: f64,
}

/// Total cost of a permutation: the sum over teams `j` of
/// `cost[perm[j]][j]`.
pub fn decode_cost(perm: &[usize], inst: &AssignmentInstance) -> Result<f64> {
    if perm.len() != inst.n || !is_valid_permutation(perm) {
        return Err(Error::usage("solution must be a permutation of 1..=n"));
    }
    Ok(perm
        .iter()
        .enumerate()
        .map(|(j, &i)| inst.cost[i - 1][j])
        .sum())
}

/// Random instance with integer costs uniform in `[10, 100]`.
pub fn generate_instance(n: usize, rng: &mut SeededRng) -> Result<AssignmentInstance> {
    if n < 2 {
        return Err(Error::usage("instance size must be at least 2"));
    }
    let cost = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(10..=100) as f64).collect())
        .collect();
    AssignmentInstance::new(cost)
}

/// Provably minimum-cost assignment via the Hungarian method (the
/// shortest-augmenting-path formulation, O(n^3)).
pub fn solve_exact(inst: &AssignmentInstance) -> Result<AssignmentSolution> {
    let n = inst.n;
    if n > 1000 {
        return Err(Error::usage("exact solver is limited to n <= 1000"));
    }

    // 1-based arrays; p[j] is the row matched to column j, 0 = unmatched.
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = inst.cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        // Augment along the recorded path.
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let perm: Vec<usize> = (1..=n).map(|j| p[j]).collect();
    let total_cost = decode_cost(&perm, inst)?;
    Ok(AssignmentSolution { perm, total_cost })
}

/// Result of solving an instance with LPB.
#[derive(Debug, Clone)]
pub struct GapOutcome {
    pub solution: AssignmentSolution,
    pub record: RunRecord,
    /// Cost certified optimal by the Hungarian method.
    pub exact_cost: f64,
    /// First iteration (1-based) whose best matched the exact optimum.
    pub generations_to_optimum: Option<usize>,
}

/// Runs LPB in permutation mode (PMX crossover + swap mutation) on the
/// instance and reports the best assignment alongside the exact optimum.
pub fn solve_lpb(inst: &AssignmentInstance, params: &LpbParams) -> Result<GapOutcome> {
    let exact = solve_exact(inst)?;
    let problem = inst.to_problem();
    let record = lpb::run(&problem, params)?;
    let perm = record
        .best
        .genes
        .as_perm()
        .expect("permutation problem yields permutation genes")
        .to_vec();
    let total_cost = decode_cost(&perm, inst)?;
    let generations_to_optimum = record
        .trace
        .iter()
        .position(|&v| v <= exact.total_cost + 1e-9)
        .map(|idx| idx + 1);
    Ok(GapOutcome {
        solution: AssignmentSolution { perm, total_cost },
        record,
        exact_cost: exact.total_cost,
        generations_to_optimum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked 5x5 example: rows are cases, columns are teams.
    pub(crate) fn example_matrix() -> AssignmentInstance {
        AssignmentInstance::new(vec![
            vec![23.0, 21.0, 12.0, 30.0, 19.0],
            vec![30.0, 25.0, 13.0, 22.0, 21.0],
            vec![21.0, 23.0, 32.0, 40.0, 15.0],
            vec![12.0, 32.0, 40.0, 32.0, 29.0],
            vec![20.0, 15.0, 21.0, 27.0, 22.0],
        ])
        .unwrap()
    }

    /// Exhaustive minimum over all permutations (independent oracle).
    fn brute_force_min(inst: &AssignmentInstance) -> f64 {
        fn recurse(inst: &AssignmentInstance, perm: &mut Vec<usize>, used: &mut [bool], best: &mut f64) {
            if perm.len() == inst.n {
                let cost = decode_cost(perm, inst).unwrap();
                if cost < *best {
                    *best = cost;
                }
                return;
            }
            for i in 1..=inst.n {
                if !used[i - 1] {
                    used[i - 1] = true;
                    perm.push(i);
                    recurse(inst, perm, used, best);
                    perm.pop();
                    used[i - 1] = false;
                }
            }
        }
        let mut best = f64::INFINITY;
        recurse(inst, &mut Vec::new(), &mut vec![false; inst.n], &mut best);
        best
    }

    #[test]
    fn decode_worked_example() {
        let inst = example_matrix();
        let cost = decode_cost(&[4, 5, 2, 3, 1], &inst).unwrap();
        assert_eq!(cost, 12.0 + 15.0 + 13.0 + 40.0 + 19.0);
        assert_eq!(cost, 99.0);
    }

    #[test]
    fn decode_diagonal_and_constant_cases() {
        let big = 1e6;
        let inst = AssignmentInstance::new(vec![
            vec![1.0, big, big],
            vec![big, 2.0, big],
            vec![big, big, 3.0],
        ])
        .unwrap();
        assert_eq!(decode_cost(&[1, 2, 3], &inst).unwrap(), 6.0);

        let flat = AssignmentInstance::new(vec![vec![7.0; 4]; 4]).unwrap();
        assert_eq!(decode_cost(&[3, 1, 4, 2], &flat).unwrap(), 28.0);
    }

    #[test]
    fn decode_rejects_invalid_permutations() {
        let inst = example_matrix();
        assert!(decode_cost(&[1, 1, 2, 3, 4], &inst).is_err());
        assert!(decode_cost(&[1, 2, 3], &inst).is_err());
    }

    #[test]
    fn generated_instances_are_in_range_and_deterministic() {
        let mut rng = SeededRng::new(7);
        let a = generate_instance(10, &mut rng).unwrap();
        for row in &a.cost {
            for &c in row {
                assert!((10.0..=100.0).contains(&c));
                assert_eq!(c, c.trunc());
            }
        }
        let b = generate_instance(10, &mut SeededRng::new(7)).unwrap();
        assert_eq!(a, b);

        assert!(generate_instance(30, &mut rng).is_ok());
        assert!(generate_instance(1, &mut rng).is_err());
    }

    #[test]
    fn exact_solver_forced_diagonal() {
        let inst = AssignmentInstance::new(vec![vec![1.0, 9.0], vec![9.0, 1.0]]).unwrap();
        let sol = solve_exact(&inst).unwrap();
        assert_eq!(sol.total_cost, 2.0);
        assert_eq!(sol.perm, vec![1, 2]);
    }

    #[test]
    fn exact_solver_matches_brute_force() {
        for seed in 0..10 {
            let mut rng = SeededRng::new(seed);
            let inst = generate_instance(6, &mut rng).unwrap();
            let sol = solve_exact(&inst).unwrap();
            assert!(is_valid_permutation(&sol.perm));
            assert_eq!(sol.total_cost, brute_force_min(&inst), "seed {seed}");
        }
    }

    #[test]
    fn exact_solver_all_equal_matrix() {
        let inst = AssignmentInstance::new(vec![vec![7.0; 5]; 5]).unwrap();
        let sol = solve_exact(&inst).unwrap();
        assert_eq!(sol.total_cost, 35.0);
    }

    #[test]
    fn lpb_reaches_exact_optimum_on_worked_example() {
        let inst = example_matrix();
        let params = LpbParams::new(11).with_iterations(200);
        let out = solve_lpb(&inst, &params).unwrap();
        assert_eq!(out.solution.total_cost, out.exact_cost);
        assert!(out.generations_to_optimum.is_some());
        for w in out.record.trace.windows(2) {
            assert!(w[1] <= w[0]);
        }
        // Reported cost always at or above the certified optimum.
        assert!(out.solution.total_cost >= out.exact_cost);
    }

    #[test]
    fn solution_reconstructs_valid_assignment_matrix() {
        let inst = example_matrix();
        let sol = solve_exact(&inst).unwrap();
        // Rebuild the X matrix: every row and column must sum to 1.
        let mut x = vec![vec![0u32; inst.n]; inst.n];
        for (j, &i) in sol.perm.iter().enumerate() {
            x[i - 1][j] = 1;
        }
        for i in 0..inst.n {
            assert_eq!(x[i].iter().sum::<u32>(), 1);
            assert_eq!((0..inst.n).map(|r| x[r][i]).sum::<u32>(), 1);
        }
    }

    #[test]
    fn instance_text_round_trip() {
        let inst = example_matrix();
        let parsed = AssignmentInstance::from_text(&inst.to_text()).unwrap();
        assert_eq!(inst, parsed);
        assert!(AssignmentInstance::from_text("2\n1 2 3\n").is_err());
        assert!(AssignmentInstance::from_text("").is_err());
    }
}
