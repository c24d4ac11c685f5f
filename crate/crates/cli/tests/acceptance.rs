//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`).
//!
//! Criteria 1-3 and the CEC10 half of criterion 6 pin mean-quality
//! targets that full-range uniform mutation cannot reach at this budget:
//! with 16 mutants per generation over 500 generations, each of the 10
//! coordinates sees roughly 800 fresh uniform draws, so the expected
//! best-seen distance per coordinate is bounded below by about
//! half-range/800 no matter how selection and crossover arrange the
//! draws. That caps 30-run sphere means near 0.3 (Rastrigin near 0.16,
//! Ackley near 0.35, the rotated CEC Ackley near 21.4), which desk
//! measurements across per-gene rates and selection variants confirm.
//! The thresholds are asserted at their original values anyway rather
//! than being quietly relaxed, so those four assertions fail and say so.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use lpb_cli::config::{Algorithm, ExperimentConfig};
use lpb_cli::{emit_all, run_experiment};
use lpb_core::benchmarks::{self, cec, composite, ProblemOptions};
use lpb_core::gap::{self, AssignmentInstance};
use lpb_core::individual::{is_valid_permutation, FitnessOrdering, Individual};
use lpb_core::lpb::{self, LpbParams};
use lpb_core::operators::{pmx_crossover, swap_mutation};
use lpb_core::problem::ObjectiveProblem;
use lpb_core::rng::{derive_seed, SeededRng};
use lpb_core::stats;
use rand::Rng;

const MASTER_SEED: u64 = 2019;
const CLASSICAL_19: &str = "TF1..TF19";

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/cec")
}

fn desk_config(algorithm: Algorithm, functions: &[&str]) -> ExperimentConfig {
    let mut config = ExperimentConfig::new(
        algorithm,
        functions.iter().map(|s| s.to_string()).collect(),
    );
    config.seed = MASTER_SEED;
    config.cec_data_dir = Some(data_dir());
    config
}

/// The full 30x80x500 LPB batch over the 19 classical functions, computed
/// once and shared by criteria 1-5.
fn classical_lpb() -> &'static HashMap<String, Vec<f64>> {
    static BATCH: OnceLock<HashMap<String, Vec<f64>>> = OnceLock::new();
    BATCH.get_or_init(|| batch_finals(Algorithm::Lpb))
}

fn classical_ga() -> &'static HashMap<String, Vec<f64>> {
    static BATCH: OnceLock<HashMap<String, Vec<f64>>> = OnceLock::new();
    BATCH.get_or_init(|| batch_finals(Algorithm::Ga))
}

fn batch_finals(algorithm: Algorithm) -> HashMap<String, Vec<f64>> {
    let config = desk_config(algorithm, &[CLASSICAL_19]);
    let result = run_experiment(&config).expect("desk batch");
    let mut finals: HashMap<String, Vec<f64>> = HashMap::new();
    for record in result.records {
        finals
            .entry(record.function)
            .or_default()
            .push(record.record.final_objective());
    }
    finals
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

#[test]
fn criterion_01_tf9_rastrigin_mean() {
    let started = Instant::now();
    let finals = &classical_lpb()["TF9"];
    let elapsed = started.elapsed();
    let m = mean(finals);
    let pass = m <= 0.1 && elapsed.as_secs_f64() < 300.0;
    println!(
        "criterion 01 [{}]: TF9 LPB 30-run mean = {m:.6} (target <= 0.1), batch took {:.1}s",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(
        elapsed.as_secs_f64() < 300.0,
        "criterion 1 runtime target missed: {elapsed:?}"
    );
    assert!(m <= 0.1, "criterion 1: TF9 mean {m} above 0.1");
}

#[test]
fn criterion_02_tf10_ackley_mean() {
    let m = mean(&classical_lpb()["TF10"]);
    let pass = m <= 0.2;
    println!(
        "criterion 02 [{}]: TF10 LPB 30-run mean = {m:.6} (target <= 0.2)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(m <= 0.2, "criterion 2: TF10 mean {m} above 0.2");
}

#[test]
fn criterion_03_tf1_sphere_mean() {
    let m = mean(&classical_lpb()["TF1"]);
    let pass = m <= 0.05;
    println!(
        "criterion 03 [{}]: TF1 LPB 30-run mean = {m:.6} (target <= 0.05)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(m <= 0.05, "criterion 3: TF1 mean {m} above 0.05");
}

#[test]
fn criterion_04_fixed_dimension_means() {
    let batch = classical_lpb();
    let targets = [
        ("FD16", -1.03163, 1e-2),
        ("FD17", 0.397888, 1e-2),
        ("FD18", 3.000142, 1e-2),
        ("FD19", -3.86278, 1e-2),
    ];
    let mut all_ok = true;
    for (id, target, tol) in targets {
        let m = mean(&batch[id]);
        let ok = (m - target).abs() <= tol;
        all_ok &= ok;
        println!(
            "criterion 04 [{}]: {id} mean = {m:.6} (target {target} +- {tol})",
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok, "criterion 4: {id} mean {m} not within {tol} of {target}");
    }
    let fd14 = mean(&batch["FD14"]);
    let ok = fd14 <= 1.1;
    all_ok &= ok;
    println!(
        "criterion 04 [{}]: FD14 mean = {fd14:.6} (target <= 1.1)",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(all_ok, "criterion 4 failed");
}

#[test]
fn criterion_05_dominance_over_ga() {
    let lpb = classical_lpb();
    let ga = classical_ga();
    let mut wins = 0;
    let mut total = 0;
    for (function, lpb_finals) in lpb {
        let ga_finals = &ga[function];
        total += 1;
        if mean(lpb_finals) < mean(ga_finals) {
            wins += 1;
        }
    }
    assert_eq!(total, 19);
    let p = stats::wilcoxon_ranksum(&lpb["TF9"], &ga["TF9"]).unwrap();
    let pass = wins >= 12 && p < 0.05;
    println!(
        "criterion 05 [{}]: LPB beats GA on {wins}/19 functions (need >= 12); TF9 rank-sum p = {p:.3e} (need < 0.05)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(wins >= 12, "criterion 5: LPB won only {wins}/19");
    assert!(p < 0.05, "criterion 5: TF9 rank-sum p {p} not significant");
}

#[test]
fn criterion_06_cec_shift_values_and_cec10_mean() {
    // Every data-driven CEC function evaluates to exactly 1 at its shift.
    let dir = data_dir();
    for index in cec::DATA_DRIVEN {
        let data = cec::load_data(&dir, index).unwrap();
        let v = cec::eval(index, &data.shift, Some(&data)).unwrap();
        let ok = (v - 1.0).abs() <= 1e-9;
        println!(
            "criterion 06 [{}]: CEC{index:02} at shift = {v} (target 1 +- 1e-9)",
            if ok { "PASS" } else { "FAIL" }
        );
        assert!(ok, "criterion 6: CEC{index:02} shift value {v}");
    }

    let config = desk_config(Algorithm::Lpb, &["CEC10"]);
    let result = run_experiment(&config).unwrap();
    let m = result.summaries[0].summary.mean;
    let ok = m <= 20.5;
    println!(
        "criterion 06 [{}]: CEC10 LPB 30-run mean = {m:.5} (target <= 20.5)",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion 6: CEC10 mean {m} above 20.5");
}

#[test]
fn criterion_07_invariant_suites() {
    partition_invariants();
    permutation_invariants();
    composite_weight_invariants();
    registry_f_min_invariants();
    trace_monotonicity_invariants();
    seed_determinism_invariants();
    println!("criterion 07 [PASS]: invariant suites (partition, permutation, weights, f_min, traces, determinism)");
}

fn partition_invariants() {
    let ordering = FitnessOrdering::minimize();
    let mut rng = SeededRng::new(701);
    for case in 0..1000 {
        let size = rng.gen_range(4..200);
        let tie_prone = case % 3 == 0;
        let pop: Vec<Individual> = (0..size)
            .map(|_| {
                let objective = if tie_prone {
                    rng.gen_range(0..6) as f64
                } else {
                    rng.gen_range(-100.0..100.0)
                };
                let mut ind = Individual::real(vec![0.0]);
                ind.objective = objective;
                ind.evaluated = true;
                ind
            })
            .collect();
        let dp = rng.gen_range(0.05..=1.0);
        let (good, bad) = lpb::sample_and_split(&pop, dp, ordering, &mut rng).unwrap();
        let tiers = lpb::partition(&pop, &good, &bad, ordering).unwrap();
        assert_eq!(tiers.total_len(), pop.len(), "partition must be exhaustive");
        let t1 = tiers.threshold_bad;
        let t2 = tiers.threshold_good;
        for ind in &tiers.perfect {
            assert!(ordering.better(ind.objective, t2));
        }
        for ind in &tiers.good {
            assert!(!ordering.better(ind.objective, t2) && ordering.better(ind.objective, t1));
        }
        for ind in &tiers.bad {
            assert!(!ordering.better(ind.objective, t1));
        }
    }
}

fn permutation_invariants() {
    let mut rng = SeededRng::new(702);
    for _ in 0..1000 {
        let n = rng.gen_range(2..30);
        let make = |rng: &mut SeededRng| {
            let mut p: Vec<usize> = (1..=n).collect();
            use rand::seq::SliceRandom;
            p.shuffle(rng);
            Individual::perm(p)
        };
        let a = make(&mut rng);
        let b = make(&mut rng);
        let (c1, c2) = pmx_crossover(&a, &b, &mut rng).unwrap();
        assert!(is_valid_permutation(c1.genes.as_perm().unwrap()));
        assert!(is_valid_permutation(c2.genes.as_perm().unwrap()));
        let m = swap_mutation(&c1, &mut rng).unwrap();
        assert!(is_valid_permutation(m.genes.as_perm().unwrap()));
    }
}

fn composite_weight_invariants() {
    let mut rng = SeededRng::new(703);
    for case in 0..1000 {
        let index = case % 6 + 1;
        let spec = composite::composite_spec(index, 10);
        let x: Vec<f64> = (0..10).map(|_| rng.gen_range(-5.0..=5.0)).collect();
        let w = composite::weights(&spec, &x);
        let sum: f64 = w.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12, "CF{index} weights sum to {sum}");
        assert!(w.iter().all(|&wi| wi >= 0.0));
    }
}

fn registry_f_min_invariants() {
    let options = ProblemOptions::with_cec_dir(data_dir());
    for spec in benchmarks::registry() {
        let (value, expected, tol) = spec.self_check(&options).unwrap();
        assert!(
            (value - expected).abs() <= tol,
            "{}: {value} vs {expected}",
            spec.id
        );
    }
}

fn trace_monotonicity_invariants() {
    use lpb_core::baselines::{ga_run, pso_run, GaParams, PsoParams};
    let problem = ObjectiveProblem::continuous(4, -10.0, 10.0, |x| {
        x.iter().map(|v| v * v).sum()
    });
    for seed in 0..400u64 {
        let params = LpbParams::for_population(10, seed).with_iterations(25);
        let record = lpb::run(&problem, &params).unwrap();
        assert!(record.trace.windows(2).all(|w| w[1] <= w[0]), "lpb seed {seed}");

        let params = GaParams::for_population(10, seed).with_iterations(25);
        let record = ga_run(&problem, &params).unwrap();
        assert!(record.trace.windows(2).all(|w| w[1] <= w[0]), "ga seed {seed}");

        let mut params = PsoParams::new(seed).with_iterations(25);
        params.swarm_size = 10;
        let record = pso_run(&problem, &params).unwrap();
        assert!(record.trace.windows(2).all(|w| w[1] <= w[0]), "pso seed {seed}");
    }
}

fn seed_determinism_invariants() {
    use lpb_core::baselines::{ga_run, pso_run, GaParams, PsoParams};
    let problem = ObjectiveProblem::continuous(5, -5.0, 5.0, |x| {
        x.iter().map(|v| v.abs()).sum()
    });
    for seed in 0..120u64 {
        let params = LpbParams::for_population(12, seed).with_iterations(20);
        let (a, b) = (lpb::run(&problem, &params).unwrap(), lpb::run(&problem, &params).unwrap());
        assert!(a.trace.iter().zip(&b.trace).all(|(x, y)| x.to_bits() == y.to_bits()));
        assert_eq!(a.best.genes, b.best.genes);

        let params = GaParams::for_population(12, seed).with_iterations(20);
        let (a, b) = (ga_run(&problem, &params).unwrap(), ga_run(&problem, &params).unwrap());
        assert!(a.trace.iter().zip(&b.trace).all(|(x, y)| x.to_bits() == y.to_bits()));

        let mut params = PsoParams::new(seed).with_iterations(20);
        params.swarm_size = 12;
        let (a, b) = (pso_run(&problem, &params).unwrap(), pso_run(&problem, &params).unwrap());
        assert!(a.trace.iter().zip(&b.trace).all(|(x, y)| x.to_bits() == y.to_bits()));
    }
}

/// Independent exact oracle for criterion 8: integer rank arithmetic over
/// recursive subset enumeration, no midranks, no shared code with the
/// implementation.
fn oracle_two_sided_p(ranks_a: &[usize], n: usize) -> f64 {
    fn subsets(n: usize, k: usize, start: usize, sum: usize, hits: &mut Vec<usize>) {
        if k == 0 {
            hits.push(sum);
            return;
        }
        for v in start..=n - k + 1 {
            subsets(n, k - 1, v + 1, sum + v, hits);
        }
    }
    let w_obs: usize = ranks_a.iter().sum();
    let mut sums = Vec::new();
    subsets(n, ranks_a.len(), 1, 0, &mut sums);
    let le = sums.iter().filter(|&&s| s <= w_obs).count();
    let ge = sums.iter().filter(|&&s| s >= w_obs).count();
    (2.0 * le.min(ge) as f64 / sums.len() as f64).min(1.0)
}

#[test]
fn criterion_08_wilcoxon_exact_oracle_equivalence() {
    // The worked example first.
    let p = stats::wilcoxon_ranksum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
    assert!(
        (p - 0.1).abs() < 1e-12,
        "criterion 8: separated triples gave {p}"
    );

    // Exhaustive: every tie-free rank pattern for n_a, n_b in 2..=4.
    let mut checked = 0;
    for na in 2..=4usize {
        for nb in 2..=4usize {
            let n = na + nb;
            // Enumerate which ranks belong to sample a via bitmasks.
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != na {
                    continue;
                }
                let ranks_a: Vec<usize> =
                    (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
                let a: Vec<f64> = ranks_a.iter().map(|&r| r as f64).collect();
                let b: Vec<f64> = (1..=n)
                    .filter(|r| !ranks_a.contains(r))
                    .map(|r| r as f64)
                    .collect();
                let implementation = stats::wilcoxon_ranksum(&a, &b).unwrap();
                let oracle = oracle_two_sided_p(&ranks_a, n);
                assert!(
                    (implementation - oracle).abs() < 1e-12,
                    "criterion 8: ranks {ranks_a:?} of {n}: {implementation} vs {oracle}"
                );
                checked += 1;
            }
        }
    }
    println!(
        "criterion 08 [PASS]: rank-sum p matches the exhaustive oracle on all {checked} tie-free patterns (n_a, n_b <= 4); [1,2,3] vs [4,5,6] -> 0.1"
    );
}

/// The worked 5x5 cost matrix used throughout the assignment module.
fn worked_instance() -> AssignmentInstance {
    AssignmentInstance::new(vec![
        vec![23.0, 21.0, 12.0, 30.0, 19.0],
        vec![30.0, 25.0, 13.0, 22.0, 21.0],
        vec![21.0, 23.0, 32.0, 40.0, 15.0],
        vec![12.0, 32.0, 40.0, 32.0, 29.0],
        vec![20.0, 15.0, 21.0, 27.0, 22.0],
    ])
    .unwrap()
}

fn brute_force_min(inst: &AssignmentInstance) -> f64 {
    fn recurse(inst: &AssignmentInstance, perm: &mut Vec<usize>, used: &mut [bool], best: &mut f64) {
        if perm.len() == inst.n {
            let cost = gap::decode_cost(perm, inst).unwrap();
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
fn criterion_09_gap_success_rates_and_exact_oracle() {
    // Hungarian equals exhaustive search on every small instance.
    for n in 2..=8 {
        for seed in 0..4 {
            let mut rng = SeededRng::new(derive_seed(900, "gap-oracle", (n * 10 + seed) as u64));
            let inst = gap::generate_instance(n, &mut rng).unwrap();
            let exact = gap::solve_exact(&inst).unwrap();
            assert_eq!(
                exact.total_cost,
                brute_force_min(&inst),
                "criterion 9: Hungarian vs brute force on n={n} seed={seed}"
            );
        }
    }
    println!("criterion 09 [PASS]: Hungarian oracle equals exhaustive search on all n <= 8 instances");

    // The worked 5x5 matrix: optimum found in >= 95 of 100 seeds.
    let inst = worked_instance();
    let exact = gap::solve_exact(&inst).unwrap().total_cost;
    let mut hits = 0;
    for seed in 0..100u64 {
        let params = LpbParams::new(derive_seed(MASTER_SEED, "gap5", seed)).with_iterations(200);
        let outcome = gap::solve_lpb(&inst, &params).unwrap();
        assert!(outcome.solution.total_cost >= exact - 1e-9);
        if (outcome.solution.total_cost - exact).abs() < 1e-9 {
            hits += 1;
        }
    }
    println!(
        "criterion 09 [{}]: worked 5x5 matrix solved optimally in {hits}/100 seeds (need >= 95)",
        if hits >= 95 { "PASS" } else { "FAIL" }
    );
    assert!(hits >= 95, "criterion 9: only {hits}/100 seeds optimal on the 5x5");

    // Random 10x10 instances: optimum within 200 iterations in >= 90% of seeds.
    let mut rng = SeededRng::new(derive_seed(MASTER_SEED, "gap10-instance", 0));
    let inst = gap::generate_instance(10, &mut rng).unwrap();
    let mut hits = 0;
    let seeds = 30;
    for seed in 0..seeds {
        let params = LpbParams::new(derive_seed(MASTER_SEED, "gap10", seed)).with_iterations(200);
        let outcome = gap::solve_lpb(&inst, &params).unwrap();
        if outcome.generations_to_optimum.is_some() {
            hits += 1;
        }
    }
    let rate = hits as f64 / seeds as f64;
    println!(
        "criterion 09 [{}]: random 10x10 solved within 200 iterations in {hits}/{seeds} seeds (need >= 90%)",
        if rate >= 0.9 { "PASS" } else { "FAIL" }
    );
    assert!(rate >= 0.9, "criterion 9: 10x10 success rate {rate}");
}

#[test]
fn criterion_10_end_to_end_determinism() {
    let dirs = [
        tempfile::tempdir().unwrap(),
        tempfile::tempdir().unwrap(),
    ];
    for dir in &dirs {
        let mut config = desk_config(Algorithm::Lpb, &["TF9", "FD16"]);
        config.runs = 4;
        config.iterations = 60;
        config.population = 20;
        config.seed = 99;
        config.output_dir = dir.path().to_path_buf();
        let result = run_experiment(&config).unwrap();
        emit_all(&result, dir.path()).unwrap();
    }

    let mut compared = 0;
    for name in [
        "summary.csv",
        "runs.csv",
        "convergence_lpb_TF9.csv",
        "convergence_lpb_FD16.csv",
    ] {
        let a = std::fs::read_to_string(dirs[0].path().join(name)).unwrap();
        let b = std::fs::read_to_string(dirs[1].path().join(name)).unwrap();
        let strip = |text: &str| -> String {
            // PT is always the last column of the files that carry it.
            if !text.lines().next().unwrap_or("").contains("pt_seconds") {
                return text.to_string();
            }
            text.lines()
                .map(|line| {
                    let mut fields: Vec<&str> = line.split(',').collect();
                    fields.pop();
                    fields.join(",")
                })
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip(&a), strip(&b), "criterion 10: {name} differs between runs");
        compared += 1;
    }
    println!(
        "criterion 10 [PASS]: two executions emitted byte-identical CSVs ({compared} files, PT columns excluded)"
    );
}
