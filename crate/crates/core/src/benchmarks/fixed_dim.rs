//! Fixed-dimension multi-modal test functions (FD14-FD19): Shekel's
//! foxholes, Kowalik, the six-hump camel back, Branin, Goldstein-Price
//! and Hartmann-3. Textbook formulas, no shifting.

use std::f64::consts::PI;

pub fn fd14_foxholes(x: &[f64]) -> f64 {
    const STEPS: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut total = 1.0 / 500.0;
    for j in 0..25 {
        let a1 = STEPS[j % 5];
        let a2 = STEPS[j / 5];
        total += 1.0 / ((j + 1) as f64 + (x[0] - a1).powi(6) + (x[1] - a2).powi(6));
    }
    1.0 / total
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [
    0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0,
];

pub fn fd15_kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(&KOWALIK_B_INV)
        .map(|(&a, &b_inv)| {
            let b = 1.0 / b_inv;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

pub fn fd16_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

pub fn fd17_branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
        + 10.0
}

pub fn fd18_goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let term1 = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let term2 = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    term1 * term2
}

const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMANN3_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

pub fn fd19_hartmann3(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let exponent: f64 = (0..3)
                .map(|j| HARTMANN3_A[i][j] * (x[j] - HARTMANN3_P[i][j]).powi(2))
                .sum();
            HARTMANN3_C[i] * (-exponent).exp()
        })
        .sum::<f64>()
}

/// Evaluates FD`index` (14..=19) at `x`.
pub fn eval(index: usize, x: &[f64]) -> f64 {
    match index {
        14 => fd14_foxholes(x),
        15 => fd15_kowalik(x),
        16 => fd16_camel(x),
        17 => fd17_branin(x),
        18 => fd18_goldstein_price(x),
        19 => fd19_hartmann3(x),
        _ => panic!("fixed-dimension function index {index} out of range"),
    }
}

/// Dimension of FD`index`.
pub fn dimension(index: usize) -> usize {
    match index {
        14 | 16 | 17 | 18 => 2,
        15 => 4,
        19 => 3,
        _ => panic!("fixed-dimension function index {index} out of range"),
    }
}

/// Per-coordinate bounds of FD`index`.
pub fn bounds(index: usize) -> (Vec<f64>, Vec<f64>) {
    match index {
        14 => (vec![-65.536; 2], vec![65.536; 2]),
        15 => (vec![-5.0; 4], vec![5.0; 4]),
        16 => (vec![-5.0; 2], vec![5.0; 2]),
        17 => (vec![-5.0, 0.0], vec![10.0, 15.0]),
        18 => (vec![-2.0; 2], vec![2.0; 2]),
        19 => (vec![0.0; 3], vec![1.0; 3]),
        _ => panic!("fixed-dimension function index {index} out of range"),
    }
}

/// A point attaining the global minimum of FD`index`.
pub fn optimum_point(index: usize) -> Vec<f64> {
    match index {
        14 => vec![-31.978341181708153, -31.978332345125946],
        15 => vec![
            0.19283343846173187,
            0.19083649401747985,
            0.12311731056544221,
            0.13576611145533649,
        ],
        16 => vec![0.0898420190280319, -0.7126564066827175],
        17 => vec![PI, 2.275],
        18 => vec![0.0, -1.0],
        19 => vec![0.11461432179698726, 0.5556488519425796, 0.8525469549324558],
        _ => panic!("fixed-dimension function index {index} out of range"),
    }
}

/// Global minimum value of FD`index`, consistent with [`optimum_point`].
pub fn f_min(index: usize) -> f64 {
    match index {
        14 => 0.99800383779445,
        15 => 0.0003074859878057444,
        16 => -1.0316284534898774,
        17 => 0.39788735772973816,
        18 => 3.0,
        19 => -3.862782147820755,
        _ => panic!("fixed-dimension function index {index} out of range"),
    }
}
