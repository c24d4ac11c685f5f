//! Benchmark function registry.
//!
//! Thirty-five functions in four suites:
//! - `TF1`..`TF13`: classical unimodal/multi-modal functions, dimension
//!   10, with the table shift vectors applied by default;
//! - `CF1`..`CF6`: composite functions, dimension 10 on `[-5, 5]`;
//! - `FD14`..`FD19`: fixed-dimension multi-modal functions (the ids
//!   `TF14`..`TF19` are accepted as aliases);
//! - `CEC01`..`CEC10`: the CEC 2019 suite, all optima normalized to 1.

pub mod basic;
pub mod cec;
pub mod classical;
pub mod composite;
pub mod fixed_dim;

use std::path::PathBuf;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::problem::ObjectiveProblem;

/// Which formula family a registry entry dispatches to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Classical(usize),
    Composite(usize),
    FixedDim(usize),
    Cec(usize),
}

/// Metadata and constructor for one benchmark function.
#[derive(Debug, Clone)]
pub struct FunctionSpec {
    pub id: &'static str,
    pub kind: Kind,
    pub dim: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Default shift vector (classical functions only).
    pub shift: Option<Vec<f64>>,
    /// Global minimum value of the (unshifted) function.
    pub f_min: f64,
    /// True for the one noisy function (TF7).
    pub stochastic: bool,
}

/// Options controlling problem construction.
#[derive(Debug, Clone, Default)]
pub struct ProblemOptions {
    /// Disable the table shift vectors.
    pub disable_shift: bool,
    /// Directory holding the CEC data files.
    pub cec_data_dir: Option<PathBuf>,
}

impl ProblemOptions {
    pub fn with_cec_dir(dir: impl Into<PathBuf>) -> Self {
        ProblemOptions {
            disable_shift: false,
            cec_data_dir: Some(dir.into()),
        }
    }
}

impl FunctionSpec {
    /// Builds the objective problem for this function.
    pub fn problem(&self, options: &ProblemOptions) -> Result<ObjectiveProblem> {
        let mut problem = match self.kind {
            Kind::Classical(i) => {
                let mut p = ObjectiveProblem::continuous(
                    self.dim,
                    self.lower[0],
                    self.upper[0],
                    move |x| classical::eval(i, x),
                );
                if self.stochastic {
                    p = p.with_additive_noise();
                }
                p
            }
            Kind::Composite(i) => {
                let spec = Arc::new(composite::composite_spec(i, self.dim));
                ObjectiveProblem::continuous(self.dim, self.lower[0], self.upper[0], move |x| {
                    composite::eval(&spec, x)
                })
            }
            Kind::FixedDim(i) => ObjectiveProblem::continuous_with_bounds(
                self.lower.clone(),
                self.upper.clone(),
                move |x| fixed_dim::eval(i, x),
            ),
            Kind::Cec(i) => {
                let data = if cec::DATA_DRIVEN.contains(&i) {
                    let dir = options.cec_data_dir.as_deref().ok_or_else(|| {
                        Error::config(format!(
                            "CEC{i:02} requires a data directory for {}",
                            cec::data_file_name(i)
                        ))
                    })?;
                    Some(cec::load_data(dir, i)?)
                } else {
                    None
                };
                ObjectiveProblem::continuous(self.dim, self.lower[0], self.upper[0], move |x| {
                    cec::eval(i, x, data.as_ref()).expect("dimension fixed by problem")
                })
            }
        };
        if let (Some(shift), false) = (&self.shift, options.disable_shift) {
            problem = problem.with_shift(shift.clone());
        }
        problem = problem.with_known_f_min(self.f_min);
        Ok(problem)
    }

    /// Verifies that the function value at its known optimum matches
    /// `f_min`. Returns (computed value, expected value, tolerance).
    ///
    /// Classical functions are checked unshifted (two of the printed
    /// shifts leave the search range, so the raw formula is the invariant
    /// that must hold); TF7 is checked with its noise term zeroed.
    pub fn self_check(&self, options: &ProblemOptions) -> Result<(f64, f64, f64)> {
        match self.kind {
            Kind::Classical(i) => {
                let opt = classical_optimum(i, self.dim);
                Ok((classical::eval(i, &opt), self.f_min, 1e-10))
            }
            Kind::Composite(i) => {
                let spec = composite::composite_spec(i, self.dim);
                Ok((composite::eval(&spec, spec.global_optimum()), 0.0, 1e-10))
            }
            Kind::FixedDim(i) => Ok((
                fixed_dim::eval(i, &fixed_dim::optimum_point(i)),
                self.f_min,
                1e-10,
            )),
            Kind::Cec(i) => {
                if cec::DATA_DRIVEN.contains(&i) {
                    let dir = options.cec_data_dir.as_deref().ok_or_else(|| {
                        Error::config(format!(
                            "CEC{i:02} requires a data directory for {}",
                            cec::data_file_name(i)
                        ))
                    })?;
                    let data = cec::load_data(dir, i)?;
                    let v = cec::eval(i, &data.shift, Some(&data))?;
                    Ok((v, 1.0, 1e-9))
                } else {
                    let opt = cec_basic_optimum(i);
                    Ok((cec::eval(i, &opt, None)?, 1.0, 1e-9))
                }
            }
        }
    }
}

/// Optimum of the raw (unshifted) classical function TF`i`.
fn classical_optimum(i: usize, dim: usize) -> Vec<f64> {
    match i {
        5 | 13 => vec![1.0; dim],
        8 => vec![420.9687462275036; dim],
        12 => vec![-1.0; dim],
        _ => vec![0.0; dim],
    }
}

/// Known optima of the three fixed-formulation CEC functions.
fn cec_basic_optimum(i: usize) -> Vec<f64> {
    match i {
        // Coefficients of the degree-8 Chebyshev polynomial.
        1 => vec![128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0],
        // Exact inverse of the 4x4 Hilbert matrix, row-major.
        2 => vec![
            16.0, -120.0, 240.0, -140.0, //
            -120.0, 1200.0, -2700.0, 1680.0, //
            240.0, -2700.0, 6480.0, -4200.0, //
            -140.0, 1680.0, -4200.0, 2800.0,
        ],
        // Octahedral 6-atom cluster; circumradius derived from the pair
        // potential's equilibrium geometry.
        3 => {
            let t: f64 = 24.75 / 24.09375;
            let d = t.powf(-1.0 / 6.0) / 2f64.sqrt();
            vec![
                d, 0.0, 0.0, //
                -d, 0.0, 0.0, //
                0.0, d, 0.0, //
                0.0, -d, 0.0, //
                0.0, 0.0, d, //
                0.0, 0.0, -d,
            ]
        }
        _ => panic!("CEC{i:02} is data-driven"),
    }
}

fn classical_spec(i: usize, low: f64, high: f64, shift: Vec<f64>, f_min: f64) -> FunctionSpec {
    let ids = [
        "TF1", "TF2", "TF3", "TF4", "TF5", "TF6", "TF7", "TF8", "TF9", "TF10", "TF11", "TF12",
        "TF13",
    ];
    FunctionSpec {
        id: ids[i - 1],
        kind: Kind::Classical(i),
        dim: 10,
        lower: vec![low; 10],
        upper: vec![high; 10],
        shift: if shift.is_empty() { None } else { Some(shift) },
        f_min,
        stochastic: i == 7,
    }
}

/// Enumerates every implemented benchmark function.
pub fn registry() -> Vec<FunctionSpec> {
    let mut specs = Vec::with_capacity(35);

    specs.push(classical_spec(1, -100.0, 100.0, vec![-30.0; 10], 0.0));
    specs.push(classical_spec(2, -10.0, 10.0, vec![-3.0; 10], 0.0));
    specs.push(classical_spec(3, -100.0, 100.0, vec![-30.0; 10], 0.0));
    specs.push(classical_spec(4, -100.0, 100.0, vec![-30.0; 10], 0.0));
    specs.push(classical_spec(5, -30.0, 30.0, vec![-15.0; 10], 0.0));
    specs.push(classical_spec(6, -100.0, 100.0, vec![-750.0; 10], 0.0));
    specs.push(classical_spec(7, -1.28, 1.28, vec![-0.25; 10], 0.0));
    specs.push(classical_spec(
        8,
        -500.0,
        500.0,
        vec![-300.0; 10],
        -4189.828872724338,
    ));
    specs.push(classical_spec(9, -5.12, 5.12, vec![-2.0; 10], 0.0));
    specs.push(classical_spec(10, -32.0, 32.0, vec![], 0.0));
    specs.push(classical_spec(11, -600.0, 600.0, vec![-400.0; 10], 0.0));
    specs.push(classical_spec(12, -50.0, 50.0, vec![-30.0; 10], 0.0));
    specs.push(classical_spec(13, -50.0, 50.0, vec![-100.0; 10], 0.0));

    let cf_ids = ["CF1", "CF2", "CF3", "CF4", "CF5", "CF6"];
    for (idx, id) in cf_ids.iter().enumerate() {
        specs.push(FunctionSpec {
            id,
            kind: Kind::Composite(idx + 1),
            dim: 10,
            lower: vec![-5.0; 10],
            upper: vec![5.0; 10],
            shift: None,
            f_min: 0.0,
            stochastic: false,
        });
    }

    let fd_ids = ["FD14", "FD15", "FD16", "FD17", "FD18", "FD19"];
    for (idx, id) in fd_ids.iter().enumerate() {
        let i = idx + 14;
        let (lower, upper) = fixed_dim::bounds(i);
        specs.push(FunctionSpec {
            id,
            kind: Kind::FixedDim(i),
            dim: fixed_dim::dimension(i),
            lower,
            upper,
            shift: None,
            f_min: fixed_dim::f_min(i),
            stochastic: false,
        });
    }

    let cec_ids = [
        "CEC01", "CEC02", "CEC03", "CEC04", "CEC05", "CEC06", "CEC07", "CEC08", "CEC09", "CEC10",
    ];
    for (idx, id) in cec_ids.iter().enumerate() {
        let i = idx + 1;
        let (low, high) = cec::range(i);
        let dim = cec::dimension(i);
        specs.push(FunctionSpec {
            id,
            kind: Kind::Cec(i),
            dim,
            lower: vec![low; dim],
            upper: vec![high; dim],
            shift: None,
            f_min: 1.0,
            stochastic: false,
        });
    }

    specs
}

/// Looks up a function by id. `TF14`..`TF19` resolve to `FD14`..`FD19`,
/// matching the numbering used by the classical 19-function sweep.
pub fn lookup(id: &str) -> Result<FunctionSpec> {
    let canonical = canonical_id(id);
    registry()
        .into_iter()
        .find(|spec| spec.id.eq_ignore_ascii_case(&canonical))
        .ok_or_else(|| Error::config(format!("unknown benchmark function: {id}")))
}

fn canonical_id(id: &str) -> String {
    let upper = id.trim().to_ascii_uppercase();
    if let Some(number) = upper.strip_prefix("CEC").and_then(|n| n.parse::<usize>().ok()) {
        return format!("CEC{number:02}");
    }
    match upper.as_str() {
        "TF14" | "TF15" | "TF16" | "TF17" | "TF18" | "TF19" => format!("FD{}", &upper[2..]),
        _ => upper,
    }
}
