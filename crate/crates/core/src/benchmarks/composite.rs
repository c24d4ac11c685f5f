//! Composite test functions (CF1-CF6).
//!
//! Each composite blends ten basic functions through Gaussian-kernel
//! weights centred on per-component optima, with per-component stretch
//! factors (lambda), kernel widths (sigma) and biases 0, 100, ..., 900.
//! Component values are normalized to a common height of C = 2000 before
//! mixing. The global minimum is 0 at the first component's optimum,
//! whose bias is zero. Rotations are identity; optima are generated
//! uniformly in the search box from a fixed seed.

use super::basic;
use crate::rng::{derive_seed, SeededRng};
use rand::Rng;

/// Seed stamping the generated component optima.
pub const COMPOSITE_OPTIMA_SEED: u64 = 20200501;

const COMPONENTS: usize = 10;
const HEIGHT: f64 = 2000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicFunction {
    Sphere,
    Griewank,
    Rastrigin,
    Ackley,
    Weierstrass,
}

impl BasicFunction {
    fn eval(&self, z: &[f64]) -> f64 {
        match self {
            BasicFunction::Sphere => basic::sphere(z),
            BasicFunction::Griewank => basic::griewank(z),
            BasicFunction::Rastrigin => basic::rastrigin(z),
            BasicFunction::Ackley => basic::ackley(z),
            BasicFunction::Weierstrass => basic::weierstrass(z),
        }
    }
}

/// A fully-instantiated composite function.
#[derive(Debug, Clone)]
pub struct CompositeSpec {
    pub components: [BasicFunction; COMPONENTS],
    pub sigma: [f64; COMPONENTS],
    pub lambda: [f64; COMPONENTS],
    pub biases: [f64; COMPONENTS],
    pub optima: Vec<Vec<f64>>,
    /// Normalization denominators |f_i(5/lambda_i * ones)|.
    f_max: [f64; COMPONENTS],
}

impl CompositeSpec {
    /// The point where the composite attains its global minimum of 0.
    pub fn global_optimum(&self) -> &[f64] {
        &self.optima[0]
    }
}

fn component_sets(index: usize) -> ([BasicFunction; COMPONENTS], [f64; COMPONENTS], [f64; COMPONENTS]) {
    use BasicFunction::*;
    let ones = [1.0; COMPONENTS];
    match index {
        1 => ([Sphere; COMPONENTS], ones, [5.0 / 100.0; COMPONENTS]),
        2 => ([Griewank; COMPONENTS], ones, [5.0 / 100.0; COMPONENTS]),
        3 => ([Griewank; COMPONENTS], ones, [1.0; COMPONENTS]),
        4 => (
            [
                Ackley, Ackley, Rastrigin, Rastrigin, Weierstrass, Weierstrass, Griewank,
                Griewank, Sphere, Sphere,
            ],
            ones,
            [
                5.0 / 32.0,
                5.0 / 32.0,
                1.0,
                1.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
        ),
        5 => (
            [
                Rastrigin, Rastrigin, Weierstrass, Weierstrass, Griewank, Griewank, Ackley,
                Ackley, Sphere, Sphere,
            ],
            ones,
            [
                1.0 / 5.0,
                1.0 / 5.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 32.0,
                5.0 / 32.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
        ),
        6 => (
            [
                Rastrigin, Rastrigin, Weierstrass, Weierstrass, Griewank, Griewank, Ackley,
                Ackley, Sphere, Sphere,
            ],
            [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
            [
                0.1 * 1.0 / 5.0,
                0.2 * 1.0 / 5.0,
                0.3 * 5.0 / 0.5,
                0.4 * 5.0 / 0.5,
                0.5 * 5.0 / 100.0,
                0.6 * 5.0 / 100.0,
                0.7 * 5.0 / 32.0,
                0.8 * 5.0 / 32.0,
                0.9 * 5.0 / 100.0,
                1.0 * 5.0 / 100.0,
            ],
        ),
        _ => panic!("composite function index {index} out of range"),
    }
}

/// Instantiates CF`index` (1..=6) for the given dimension.
pub fn composite_spec(index: usize, dim: usize) -> CompositeSpec {
    let (components, sigma, lambda) = component_sets(index);
    let mut rng = SeededRng::new(derive_seed(COMPOSITE_OPTIMA_SEED, "cf-optima", index as u64));
    let optima: Vec<Vec<f64>> = (0..COMPONENTS)
        .map(|_| (0..dim).map(|_| rng.gen_range(-5.0..=5.0)).collect())
        .collect();
    let mut biases = [0.0; COMPONENTS];
    for (i, b) in biases.iter_mut().enumerate() {
        *b = 100.0 * i as f64;
    }
    let mut f_max = [0.0; COMPONENTS];
    for i in 0..COMPONENTS {
        let probe: Vec<f64> = vec![5.0 / lambda[i]; dim];
        f_max[i] = components[i].eval(&probe).abs();
    }
    CompositeSpec {
        components,
        sigma,
        lambda,
        biases,
        optima,
        f_max,
    }
}

/// Normalized mixing weights at `x`; they always sum to 1.
pub fn weights(spec: &CompositeSpec, x: &[f64]) -> Vec<f64> {
    let dim = x.len() as f64;
    let mut w: Vec<f64> = spec
        .optima
        .iter()
        .zip(&spec.sigma)
        .map(|(o, &sigma)| {
            let dist_sq: f64 = x.iter().zip(o).map(|(xi, oi)| (xi - oi).powi(2)).sum();
            (-dist_sq / (2.0 * dim * sigma * sigma)).exp()
        })
        .collect();
    let w_max = w.iter().copied().fold(0.0, f64::max);
    if w_max == 0.0 {
        // Every kernel underflowed; fall back to an even mix.
        return vec![1.0 / COMPONENTS as f64; COMPONENTS];
    }
    let damp = 1.0 - w_max.powi(10);
    for wi in w.iter_mut() {
        if *wi != w_max {
            *wi *= damp;
        }
    }
    let total: f64 = w.iter().sum();
    for wi in w.iter_mut() {
        *wi /= total;
    }
    w
}

/// Evaluates the composite at `x`.
pub fn eval(spec: &CompositeSpec, x: &[f64]) -> f64 {
    let w = weights(spec, x);
    let mut total = 0.0;
    for i in 0..COMPONENTS {
        if w[i] == 0.0 {
            continue;
        }
        let z: Vec<f64> = x
            .iter()
            .zip(&spec.optima[i])
            .map(|(xi, oi)| (xi - oi) / spec.lambda[i])
            .collect();
        let fi = HEIGHT * spec.components[i].eval(&z) / spec.f_max[i];
        total += w[i] * (fi + spec.biases[i]);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_minimum_is_zero_at_first_optimum() {
        for index in 1..=6 {
            let spec = composite_spec(index, 10);
            let v = eval(&spec, spec.global_optimum());
            assert!(
                v.abs() < 1e-10,
                "CF{index} at its global optimum was {v}"
            );
        }
    }

    #[test]
    fn weights_sum_to_one_everywhere() {
        let mut rng = SeededRng::new(3);
        for index in 1..=6 {
            let spec = composite_spec(index, 10);
            for _ in 0..200 {
                let x: Vec<f64> = (0..10).map(|_| rng.gen_range(-5.0..=5.0)).collect();
                let sum: f64 = weights(&spec, &x).iter().sum();
                assert!((sum - 1.0).abs() < 1e-12, "CF{index} weight sum {sum}");
            }
        }
    }

    #[test]
    fn kernel_peaks_at_its_own_optimum() {
        for index in 1..=6 {
            let spec = composite_spec(index, 10);
            for k in 0..COMPONENTS {
                let w = weights(&spec, &spec.optima[k]);
                let max_idx = w
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.total_cmp(b.1))
                    .unwrap()
                    .0;
                assert_eq!(max_idx, k, "CF{index}: weight at o_{k} not maximal");
            }
        }
    }

    #[test]
    fn cf6_vectors_read_verbatim() {
        let spec = composite_spec(6, 10);
        assert_eq!(spec.sigma, [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]);
        assert_eq!(spec.lambda[0], 0.1 * 1.0 / 5.0);
        assert_eq!(spec.lambda[2], 0.3 * 5.0 / 0.5);
        assert_eq!(spec.lambda[9], 1.0 * 5.0 / 100.0);
    }

    #[test]
    fn biases_step_by_hundred() {
        let spec = composite_spec(1, 10);
        assert_eq!(spec.biases[0], 0.0);
        assert_eq!(spec.biases[9], 900.0);
    }

    #[test]
    fn optima_are_reproducible_and_in_box() {
        let a = composite_spec(4, 10);
        let b = composite_spec(4, 10);
        assert_eq!(a.optima, b.optima);
        for o in &a.optima {
            assert!(o.iter().all(|v| (-5.0..=5.0).contains(v)));
        }
    }

    #[test]
    fn values_are_finite_on_the_box() {
        let mut rng = SeededRng::new(8);
        for index in 1..=6 {
            let spec = composite_spec(index, 10);
            for _ in 0..500 {
                let x: Vec<f64> = (0..10).map(|_| rng.gen_range(-5.0..=5.0)).collect();
                assert!(eval(&spec, &x).is_finite());
            }
        }
    }
}
