//! Experiment configuration: JSON manifests plus CLI overrides.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use lpb_core::benchmarks;
use lpb_core::error::{Error, Result};

/// Which optimizer a batch experiment runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Lpb,
    Ga,
    Pso,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Lpb => "lpb",
            Algorithm::Ga => "ga",
            Algorithm::Pso => "pso",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lpb" => Ok(Algorithm::Lpb),
            "ga" => Ok(Algorithm::Ga),
            "pso" => Ok(Algorithm::Pso),
            other => Err(Error::config(format!("unknown algorithm: {other}"))),
        }
    }
}

/// A complete batch-experiment description. The JSON manifest mirrors this
/// struct field for field; CLI flags override manifest values.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    /// Function ids; ranges like `TF1..TF19` are accepted and expanded.
    pub functions: Vec<String>,
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default = "default_iterations")]
    pub iterations: usize,
    #[serde(default = "default_population")]
    pub population: usize,
    #[serde(default = "default_dp")]
    pub dp: f64,
    #[serde(default)]
    pub crossover_count: Option<usize>,
    #[serde(default)]
    pub mutation_count: Option<usize>,
    #[serde(default)]
    pub per_gene_mutation_prob: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub jobs: Option<usize>,
    #[serde(default)]
    pub disable_shift: bool,
    #[serde(default)]
    pub cec_data_dir: Option<PathBuf>,
}

fn default_runs() -> usize {
    30
}

fn default_iterations() -> usize {
    500
}

fn default_population() -> usize {
    80
}

fn default_dp() -> f64 {
    0.5
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

impl ExperimentConfig {
    pub fn new(algorithm: Algorithm, functions: Vec<String>) -> Self {
        ExperimentConfig {
            algorithm,
            functions,
            runs: default_runs(),
            iterations: default_iterations(),
            population: default_population(),
            dp: default_dp(),
            crossover_count: None,
            mutation_count: None,
            per_gene_mutation_prob: None,
            seed: 0,
            output_dir: default_output_dir(),
            jobs: None,
            disable_shift: false,
            cec_data_dir: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config(format!("invalid config: {e}")))
    }

    /// Expands ranges, canonicalizes ids against the registry, and checks
    /// every count before any run starts.
    pub fn validate(&self) -> Result<Vec<benchmarks::FunctionSpec>> {
        if self.runs < 2 {
            return Err(Error::config(
                "runs must be at least 2 (summary statistics need a sample)",
            ));
        }
        if self.iterations == 0 {
            return Err(Error::config("iterations must be positive"));
        }
        if self.population < 4 {
            return Err(Error::config("population must be at least 4"));
        }
        if !(self.dp > 0.0 && self.dp <= 1.0) {
            return Err(Error::config(format!("dp {} must lie in (0, 1]", self.dp)));
        }
        let ids = expand_function_list(&self.functions)?;
        if ids.is_empty() {
            return Err(Error::config("no benchmark functions selected"));
        }
        ids.iter().map(|id| benchmarks::lookup(id)).collect()
    }
}

/// Expands a list of function tokens. Each token is either a registry id
/// (aliases allowed) or an inclusive range `TF1..TF19` over one prefix.
/// Duplicates are removed, first occurrence wins.
pub fn expand_function_list(tokens: &[String]) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    let mut push = |id: String| {
        if !out.contains(&id) {
            out.push(id);
        }
    };
    for token in tokens {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((start, end)) = token.split_once("..") {
            let (prefix_a, a) = split_prefix(start)?;
            let (prefix_b, b) = split_prefix(end)?;
            if !prefix_a.eq_ignore_ascii_case(prefix_b) {
                return Err(Error::config(format!(
                    "range endpoints must share a prefix: {token}"
                )));
            }
            if a > b {
                return Err(Error::config(format!("empty range: {token}")));
            }
            for n in a..=b {
                let spec = benchmarks::lookup(&format!("{prefix_a}{n}"))?;
                push(spec.id.to_string());
            }
        } else {
            push(benchmarks::lookup(token)?.id.to_string());
        }
    }
    Ok(out)
}

fn split_prefix(token: &str) -> Result<(&str, usize)> {
    let digits_at = token
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| Error::config(format!("malformed function id: {token}")))?;
    let number = token[digits_at..]
        .parse::<usize>()
        .map_err(|e| Error::config(format!("malformed function id {token}: {e}")))?;
    Ok((&token[..digits_at], number))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_expansion_crosses_the_fd_alias_boundary() {
        let ids = expand_function_list(&["TF1..TF19".to_string()]).unwrap();
        assert_eq!(ids.len(), 19);
        assert_eq!(ids[0], "TF1");
        assert_eq!(ids[12], "TF13");
        assert_eq!(ids[13], "FD14");
        assert_eq!(ids[18], "FD19");
    }

    #[test]
    fn cec_ranges_expand_with_zero_padding() {
        let ids = expand_function_list(&["CEC1..CEC10".to_string()]).unwrap();
        assert_eq!(ids.len(), 10);
        assert_eq!(ids[0], "CEC01");
        assert_eq!(ids[9], "CEC10");
    }

    #[test]
    fn duplicates_are_dropped() {
        let ids =
            expand_function_list(&["TF1".to_string(), "tf1".to_string(), "TF2".to_string()])
                .unwrap();
        assert_eq!(ids, vec!["TF1", "TF2"]);
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert!(expand_function_list(&["TF99".to_string()]).is_err());
        assert!(expand_function_list(&["TF1..CF3".to_string()]).is_err());
    }

    #[test]
    fn config_json_round_trip_with_defaults() {
        let json = r#"{"algorithm": "lpb", "functions": ["TF9"], "seed": 7}"#;
        let config = ExperimentConfig::from_json(json).unwrap();
        assert_eq!(config.algorithm, Algorithm::Lpb);
        assert_eq!(config.runs, 30);
        assert_eq!(config.iterations, 500);
        assert_eq!(config.population, 80);
        assert_eq!(config.dp, 0.5);
        assert_eq!(config.seed, 7);
        config.validate().unwrap();
    }

    #[test]
    fn single_run_config_is_rejected_before_running() {
        let mut config = ExperimentConfig::new(Algorithm::Lpb, vec!["TF1".into()]);
        config.runs = 1;
        assert!(config.validate().is_err());
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        let json = r#"{"algorithm": "lpb", "functions": ["TF9"], "bogus": 1}"#;
        assert!(ExperimentConfig::from_json(json).is_err());
    }
}
