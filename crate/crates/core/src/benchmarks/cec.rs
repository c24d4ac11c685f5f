//! CEC 2019 "100-digit challenge" test functions (CEC01-CEC10).
//!
//! CEC01-CEC03 are fixed formulations in their own dimensions; CEC04-CEC10
//! are 10-dimensional, shifted and rotated, with every global optimum
//! normalized to the value 1. Shift vectors and rotation matrices are not
//! bundled with the formulas: they load from plain-text data files
//! (`cec{NN}_d{dim}.txt`, first line the shift vector, then `dim` rows of
//! the rotation matrix). [`generate_data`] produces a deterministic data
//! set from a seed - uniform shifts in [-80, 80] and orthonormalized
//! Gaussian rotations - for when no official files are at hand.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use rand::Rng;

use super::basic;
use crate::error::{Error, Result};
use crate::rng::{derive_seed, SeededRng};

/// Seed used for the data files shipped with this repository.
pub const DEFAULT_DATA_SEED: u64 = 20190106;

/// Indices of the CEC functions that require shift/rotation data.
pub const DATA_DRIVEN: std::ops::RangeInclusive<usize> = 4..=10;

/// Shift vector and rotation matrix for one shifted-rotated function.
#[derive(Debug, Clone, PartialEq)]
pub struct CecData {
    pub shift: Vec<f64>,
    pub rotation: Vec<Vec<f64>>,
}

impl CecData {
    /// `z = rotation * (scale * (x - shift))`.
    fn transform(&self, x: &[f64], scale: f64) -> Vec<f64> {
        let d = x.len();
        let shifted: Vec<f64> = x
            .iter()
            .zip(&self.shift)
            .map(|(xi, si)| scale * (xi - si))
            .collect();
        (0..d)
            .map(|r| (0..d).map(|c| self.rotation[r][c] * shifted[c]).sum())
            .collect()
    }
}

/// Canonical data file name for one function.
pub fn data_file_name(index: usize) -> String {
    format!("cec{index:02}_d{}.txt", dimension(index))
}

/// Loads the data file for CEC`index` from `dir`.
pub fn load_data(dir: &Path, index: usize) -> Result<CecData> {
    let path: PathBuf = dir.join(data_file_name(index));
    let text = std::fs::read_to_string(&path).map_err(|e| {
        Error::config(format!(
            "missing or unreadable CEC data file {}: {e}",
            path.display()
        ))
    })?;
    parse_data(&text, dimension(index))
        .map_err(|e| Error::config(format!("{}: {e}", path.display())))
}

fn parse_data(text: &str, dim: usize) -> std::result::Result<CecData, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let parse_row = |line: &str| -> std::result::Result<Vec<f64>, String> {
        let row: std::result::Result<Vec<f64>, _> =
            line.split_whitespace().map(str::parse::<f64>).collect();
        row.map_err(|e| format!("invalid number: {e}"))
    };
    let shift = parse_row(lines.next().ok_or("empty data file")?)?;
    if shift.len() != dim {
        return Err(format!("shift has {} values, expected {dim}", shift.len()));
    }
    let mut rotation = Vec::with_capacity(dim);
    for r in 0..dim {
        let row = parse_row(lines.next().ok_or(format!("missing rotation row {r}"))?)?;
        if row.len() != dim {
            return Err(format!("rotation row {r} has {} values, expected {dim}", row.len()));
        }
        rotation.push(row);
    }
    Ok(CecData { shift, rotation })
}

/// Deterministically generates shift/rotation data for CEC`index`.
pub fn generate_data(index: usize, seed: u64) -> CecData {
    let dim = dimension(index);
    let mut rng = SeededRng::new(derive_seed(seed, "cec-data", index as u64));
    let shift: Vec<f64> = (0..dim).map(|_| rng.gen_range(-80.0..=80.0)).collect();
    let rotation = random_orthonormal(dim, &mut rng);
    CecData { shift, rotation }
}

/// Serializes data in the file format accepted by [`load_data`].
pub fn data_to_text(data: &CecData) -> String {
    let fmt_row = |row: &[f64]| {
        row.iter()
            .map(|v| format!("{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = fmt_row(&data.shift);
    out.push('\n');
    for row in &data.rotation {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

/// Writes data files for all shifted-rotated functions into `dir`.
pub fn write_data_files(dir: &Path, seed: u64) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for index in DATA_DRIVEN {
        let data = generate_data(index, seed);
        std::fs::write(dir.join(data_file_name(index)), data_to_text(&data))?;
    }
    Ok(())
}

/// Gram-Schmidt orthonormalization of a Gaussian random matrix.
fn random_orthonormal(dim: usize, rng: &mut SeededRng) -> Vec<Vec<f64>> {
    loop {
        let mut m: Vec<Vec<f64>> = (0..dim)
            .map(|_| (0..dim).map(|_| standard_normal(rng)).collect())
            .collect();
        let mut ok = true;
        for i in 0..dim {
            for j in 0..i {
                let dot: f64 = (0..dim).map(|k| m[i][k] * m[j][k]).sum();
                for k in 0..dim {
                    m[i][k] -= dot * m[j][k];
                }
            }
            let norm: f64 = (0..dim).map(|k| m[i][k] * m[i][k]).sum::<f64>().sqrt();
            if norm < 1e-8 {
                ok = false;
                break;
            }
            for k in 0..dim {
                m[i][k] /= norm;
            }
        }
        if ok {
            return m;
        }
    }
}

fn standard_normal(rng: &mut SeededRng) -> f64 {
    // Box-Muller; one draw per call keeps the stream layout simple.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Dimension of CEC`index` (1..=10).
pub fn dimension(index: usize) -> usize {
    match index {
        1 => 9,
        2 => 16,
        3 => 18,
        4..=10 => 10,
        _ => panic!("CEC function index {index} out of range"),
    }
}

/// Search range of CEC`index`.
pub fn range(index: usize) -> (f64, f64) {
    match index {
        1 => (-8192.0, 8192.0),
        2 => (-16384.0, 16384.0),
        3 => (-4.0, 4.0),
        4..=10 => (-100.0, 100.0),
        _ => panic!("CEC function index {index} out of range"),
    }
}

/// Storn's Chebyshev polynomial fitting problem, D = 9.
fn chebyshev(x: &[f64]) -> f64 {
    let d = x.len();
    // T_{d-1}(1.2) by the recurrence; the envelope the polynomial must
    // reach at the interval edges.
    let mut a = 1.0;
    let mut b = 1.2;
    for _ in 0..d - 2 {
        let next = 2.4 * b - a;
        a = b;
        b = next;
    }
    let envelope = b;

    let horner = |t: f64| x.iter().fold(0.0, |acc, &c| acc * t + c);

    let mut sum = 0.0;
    let samples = 32 * d;
    for k in 0..=samples {
        let t = -1.0 + 2.0 * k as f64 / samples as f64;
        let p = horner(t);
        if p.abs() > 1.0 {
            sum += (1.0 - p.abs()).powi(2);
        }
    }
    for t in [-1.2, 1.2] {
        let p = horner(t);
        if p < envelope {
            sum += (p - envelope).powi(2);
        }
    }
    sum
}

/// Inverse Hilbert matrix problem, D = 16 (a 4x4 candidate inverse).
fn inverse_hilbert(x: &[f64]) -> f64 {
    let b = (x.len() as f64).sqrt() as usize;
    let mut sum = 0.0;
    for r in 0..b {
        for c in 0..b {
            // (H * Z)[r][c] with H the Hilbert matrix and Z read row-major.
            let y: f64 = (0..b)
                .map(|m| 1.0 / (r + m + 1) as f64 * x[m * b + c])
                .sum();
            let target = if r == c { 1.0 } else { 0.0 };
            sum += (y - target).abs();
        }
    }
    sum
}

/// Lennard-Jones minimum-energy cluster for 6 atoms, D = 18.
fn lennard_jones(x: &[f64]) -> f64 {
    let atoms = x.len() / 3;
    let mut energy = 12.7120622568;
    for i in 0..atoms - 1 {
        for j in i + 1..atoms {
            let dx = x[3 * i] - x[3 * j];
            let dy = x[3 * i + 1] - x[3 * j + 1];
            let dz = x[3 * i + 2] - x[3 * j + 2];
            let dist_sq = dx * dx + dy * dy + dz * dz;
            let r6 = dist_sq * dist_sq * dist_sq;
            if r6 > 1e-10 {
                energy += (1.0 / r6 - 2.0) / r6;
            } else {
                // Coincident atoms: large finite penalty instead of infinity.
                energy += 1e20;
            }
        }
    }
    energy
}

const SCHWEFEL_OFFSET: f64 = 4.209687462275036e2;
const SCHWEFEL_CONSTANT: f64 = 4.189828872724338e2;

fn modified_schwefel(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let mut total = SCHWEFEL_CONSTANT * n;
    for &v in z {
        let zi = v + SCHWEFEL_OFFSET;
        if zi > 500.0 {
            let w = 500.0 - zi.rem_euclid(500.0);
            total -= w * w.abs().sqrt().sin();
            total += (zi - 500.0).powi(2) / (10000.0 * n);
        } else if zi < -500.0 {
            let w = zi.abs().rem_euclid(500.0) - 500.0;
            total -= w * w.abs().sqrt().sin();
            total += (zi + 500.0).powi(2) / (10000.0 * n);
        } else {
            total -= zi * zi.abs().sqrt().sin();
        }
    }
    total
}

fn schaffer_f6_pair(a: f64, b: f64) -> f64 {
    let sum_sq = a * a + b * b;
    let num = sum_sq.sqrt().sin().powi(2) - 0.5;
    let den = (1.0 + 0.001 * sum_sq).powi(2);
    0.5 + num / den
}

fn expanded_schaffer(z: &[f64]) -> f64 {
    let n = z.len();
    let mut total = 0.0;
    for i in 0..n - 1 {
        total += schaffer_f6_pair(z[i], z[i + 1]);
    }
    total + schaffer_f6_pair(z[n - 1], z[0])
}

fn happy_cat(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let u: Vec<f64> = z.iter().map(|v| v - 1.0).collect();
    let sum_sq: f64 = u.iter().map(|v| v * v).sum();
    let sum: f64 = u.iter().sum();
    (sum_sq - n).abs().powf(0.25) + (0.5 * sum_sq + sum) / n + 0.5
}

/// Internal scale factor applied before rotation, per the suite's
/// conventions for each base function.
fn scale_factor(index: usize) -> f64 {
    match index {
        4 => 5.12 / 100.0,
        5 => 600.0 / 100.0,
        6 => 0.5 / 100.0,
        7 => 1000.0 / 100.0,
        8 => 1.0,
        9 => 5.0 / 100.0,
        10 => 1.0,
        _ => panic!("CEC function {index} is not shifted/rotated"),
    }
}

/// Evaluates CEC`index` at `x`. Functions 4..=10 require their data;
/// functions 1..=3 ignore it. All values include the +1 offset so the
/// global minimum is 1.
pub fn eval(index: usize, x: &[f64], data: Option<&CecData>) -> Result<f64> {
    let dim = dimension(index);
    if x.len() != dim {
        return Err(Error::usage(format!(
            "CEC{index:02} expects dimension {dim}, got {}",
            x.len()
        )));
    }
    let raw = match index {
        1 => chebyshev(x),
        2 => inverse_hilbert(x),
        3 => lennard_jones(x),
        4..=10 => {
            let data = data.ok_or_else(|| {
                Error::config(format!(
                    "CEC{index:02} requires data file {}",
                    data_file_name(index)
                ))
            })?;
            let z = data.transform(x, scale_factor(index));
            match index {
                4 => basic::rastrigin(&z),
                5 => basic::griewank(&z),
                6 => basic::weierstrass(&z),
                7 => modified_schwefel(&z),
                8 => expanded_schaffer(&z),
                9 => happy_cat(&z),
                10 => basic::ackley(&z),
                _ => unreachable!(),
            }
        }
        _ => return Err(Error::usage(format!("CEC function index {index} out of range"))),
    };
    Ok(raw + 1.0)
}
