//! Classical unimodal and multi-modal test functions (TF1-TF13).
//!
//! All formulas are the raw, unshifted versions; shifting is handled by
//! the problem layer. TF7's additive noise is likewise injected at the
//! problem layer so these evaluators stay pure.

use std::f64::consts::{E, PI};

pub fn tf1_sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn tf2_abs_sum_product(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let product: f64 = x.iter().map(|v| v.abs()).product();
    sum + product
}

pub fn tf3_rotated_hyper_ellipsoid(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for &v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

pub fn tf4_max_abs(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

pub fn tf5_rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn tf6_step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// Quartic function without its noise term; the uniform noise is added by
/// the problem layer from the run's RNG stream.
pub fn tf7_quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, &v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

pub fn tf8_schwefel(x: &[f64]) -> f64 {
    x.iter().map(|&v| -v * v.abs().sqrt().sin()).sum()
}

pub fn tf9_rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|&v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn tf10_ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mean_sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let mean_cos = x.iter().map(|&v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    // Grouped so the e terms cancel exactly at the origin.
    (20.0 - 20.0 * (-0.2 * mean_sq.sqrt()).exp()) + (E - mean_cos.exp())
}

pub fn tf11_griewank(x: &[f64]) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let product: f64 = x
        .iter()
        .enumerate()
        .map(|(i, &v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - product + 1.0
}

/// Boundary penalty used by the two penalized functions.
pub fn penalty_u(x: f64, a: f64, k: f64, m: f64) -> f64 {
    if x > a {
        k * (x - a).powf(m)
    } else if x < -a {
        k * (-x - a).powf(m)
    } else {
        0.0
    }
}

pub fn tf12_penalized(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|&v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut total = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        total += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    total += (y[n - 1] - 1.0).powi(2);
    total *= PI / n as f64;
    total + x.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4.0)).sum::<f64>()
}

pub fn tf13_penalized2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut total = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        total += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    total += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    total *= 0.1;
    total + x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum::<f64>()
}

/// Evaluates TF`index` (1..=13) at `x`.
pub fn eval(index: usize, x: &[f64]) -> f64 {
    match index {
        1 => tf1_sphere(x),
        2 => tf2_abs_sum_product(x),
        3 => tf3_rotated_hyper_ellipsoid(x),
        4 => tf4_max_abs(x),
        5 => tf5_rosenbrock(x),
        6 => tf6_step(x),
        7 => tf7_quartic(x),
        8 => tf8_schwefel(x),
        9 => tf9_rastrigin(x),
        10 => tf10_ackley(x),
        11 => tf11_griewank(x),
        12 => tf12_penalized(x),
        13 => tf13_penalized2(x),
        _ => panic!("classical function index {index} out of range"),
    }
}
