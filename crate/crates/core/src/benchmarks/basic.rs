//! Basic functions shared by the composite and CEC suites.

use std::f64::consts::PI;

pub fn sphere(z: &[f64]) -> f64 {
    z.iter().map(|v| v * v).sum()
}

pub fn rastrigin(z: &[f64]) -> f64 {
    z.iter()
        .map(|&v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn griewank(z: &[f64]) -> f64 {
    let sum = z.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let product: f64 = z
        .iter()
        .enumerate()
        .map(|(i, &v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - product + 1.0
}

pub fn ackley(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let mean_sq = z.iter().map(|v| v * v).sum::<f64>() / n;
    let mean_cos = z.iter().map(|&v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    // Grouped so the e terms cancel exactly at the origin.
    (20.0 - 20.0 * (-0.2 * mean_sq.sqrt()).exp()) + (std::f64::consts::E - mean_cos.exp())
}

const WEIERSTRASS_A: f64 = 0.5;
const WEIERSTRASS_B: f64 = 3.0;
const WEIERSTRASS_KMAX: u32 = 20;

/// Weierstrass function with the usual a = 0.5, b = 3, kmax = 20 and the
/// constant term subtracted so the minimum value is exactly zero.
pub fn weierstrass(z: &[f64]) -> f64 {
    let constant: f64 = (0..=WEIERSTRASS_KMAX)
        .map(|k| {
            WEIERSTRASS_A.powi(k as i32) * (2.0 * PI * WEIERSTRASS_B.powi(k as i32) * 0.5).cos()
        })
        .sum();
    // Per-coordinate subtraction so the minimum is exactly zero.
    z.iter()
        .map(|&v| {
            (0..=WEIERSTRASS_KMAX)
                .map(|k| {
                    WEIERSTRASS_A.powi(k as i32)
                        * (2.0 * PI * WEIERSTRASS_B.powi(k as i32) * (v + 0.5)).cos()
                })
                .sum::<f64>()
                - constant
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_basics_vanish_at_origin() {
        let zero = vec![0.0; 10];
        assert_eq!(sphere(&zero), 0.0);
        assert_eq!(rastrigin(&zero), 0.0);
        assert_eq!(griewank(&zero), 0.0);
        assert_eq!(ackley(&zero), 0.0);
        assert_eq!(weierstrass(&zero), 0.0);
    }

    #[test]
    fn weierstrass_positive_away_from_origin() {
        assert!(weierstrass(&[0.3, -0.2, 0.1]) > 0.0);
    }
}
