//! Descriptive statistics and the Wilcoxon rank-sum test.

use crate::error::{Error, Result};

/// Mean, sample standard deviation and mean processing time of a batch
/// of runs; the row shape of the result tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatchSummary {
    pub n_runs: usize,
    pub mean: f64,
    pub std: f64,
    pub mean_pt_seconds: f64,
}

/// Summarizes final objectives and processing times of one batch.
/// Standard deviation uses the n-1 denominator.
pub fn summarize(finals: &[f64], pts: &[f64]) -> Result<BatchSummary> {
    if finals.len() < 2 {
        return Err(Error::usage(
            "summary statistics need at least 2 runs (sample std is undefined otherwise)",
        ));
    }
    let n = finals.len() as f64;
    let mean = finals.iter().sum::<f64>() / n;
    let ss: f64 = finals.iter().map(|v| (v - mean) * (v - mean)).sum();
    let std = (ss / (n - 1.0)).sqrt();
    let mean_pt = if pts.is_empty() {
        0.0
    } else {
        pts.iter().sum::<f64>() / pts.len() as f64
    };
    Ok(BatchSummary {
        n_runs: finals.len(),
        mean,
        std,
        mean_pt_seconds: mean_pt,
    })
}

/// Combined sample size at or below which the exact null distribution is
/// enumerated instead of using the normal approximation.
pub const EXACT_ENUMERATION_LIMIT: usize = 20;

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) test.
///
/// Ties receive midranks. For combined sample sizes up to
/// [`EXACT_ENUMERATION_LIMIT`] the p-value is exact, computed by
/// enumerating every assignment of the pooled ranks to sample `a`;
/// above it, a normal approximation with tie-corrected variance and
/// continuity correction is used. Degenerate input (every pooled value
/// identical) yields p = 1.
pub fn wilcoxon_ranksum(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::usage("rank-sum test needs at least 2 values per sample"));
    }
    let ranks = pooled_midranks(a, b);
    let n = ranks.len();
    let na = a.len();

    if ranks.windows(2).all(|w| w[0] == w[1]) {
        // No information to rank on; also covers n*(n-1) tie correction
        // swallowing the whole variance below.
        return Ok(1.0);
    }

    let w_obs: f64 = ranks[..na].iter().sum();
    if n <= EXACT_ENUMERATION_LIMIT {
        Ok(exact_two_sided_p(&ranks, na, w_obs))
    } else {
        Ok(normal_two_sided_p(&ranks, na, w_obs))
    }
}

/// Midranks of the pooled sample, returned with `a`'s ranks first.
fn pooled_midranks(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len() + b.len();
    let mut order: Vec<usize> = (0..n).collect();
    let value = |i: usize| if i < a.len() { a[i] } else { b[i - a.len()] };
    order.sort_by(|&i, &j| value(i).total_cmp(&value(j)));

    let mut ranks = vec![0.0; n];
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && value(order[end]) == value(order[start]) {
            end += 1;
        }
        let midrank = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = midrank;
        }
        start = end;
    }
    ranks
}

/// Exact two-sided p-value: 2 * min(P(W <= w), P(W >= w)) over all
/// C(n, na) equally likely rank subsets, capped at 1.
fn exact_two_sided_p(ranks: &[f64], na: usize, w_obs: f64) -> f64 {
    let mut le = 0u64;
    let mut ge = 0u64;
    let mut total = 0u64;
    // Iterative subset enumeration over index combinations.
    let n = ranks.len();
    let mut comb: Vec<usize> = (0..na).collect();
    loop {
        let w: f64 = comb.iter().map(|&i| ranks[i]).sum();
        total += 1;
        // Tolerance guards midrank sums like x.5 computed in two orders.
        if w <= w_obs + 1e-9 {
            le += 1;
        }
        if w >= w_obs - 1e-9 {
            ge += 1;
        }
        // Advance to the next combination in lexicographic order.
        let mut i = na;
        loop {
            if i == 0 {
                return (2.0 * (le.min(ge) as f64) / total as f64).min(1.0);
            }
            i -= 1;
            if comb[i] != i + n - na {
                break;
            }
        }
        comb[i] += 1;
        for j in i + 1..na {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Normal approximation with tie-corrected variance and continuity
/// correction.
fn normal_two_sided_p(ranks: &[f64], na: usize, w_obs: f64) -> f64 {
    let n = ranks.len() as f64;
    let nb = n - na as f64;
    let na = na as f64;

    // Tie counts from the midrank multiplicities.
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut start = 0;
    while start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && sorted[end] == sorted[start] {
            end += 1;
        }
        let t = (end - start) as f64;
        tie_term += t * t * t - t;
        start = end;
    }

    let mean = na * (n + 1.0) / 2.0;
    let var = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let dev = (w_obs - mean).abs();
    let z = (dev - 0.5).max(0.0) / var.sqrt();
    (2.0 * std_normal_cdf(-z)).min(1.0)
}

/// Standard normal CDF via the Abramowitz-Stegun 26.2.17 polynomial
/// (absolute error below 7.5e-8, plenty for p-values).
fn std_normal_cdf(x: f64) -> f64 {
    if x > 0.0 {
        return 1.0 - std_normal_cdf(-x);
    }
    let z = -x;
    let t = 1.0 / (1.0 + 0.2316419 * z);
    let poly = t
        * (0.319381530
            + t * (-0.356563782 + t * (1.781477937 + t * (-1.821255978 + t * 1.330274429))));
    let pdf = (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt();
    pdf * poly
}

/// One per-function significance result.
#[derive(Debug, Clone, PartialEq)]
pub struct SignificanceRow {
    pub function: String,
    pub p_value: f64,
    /// True when p < 0.05.
    pub significant: bool,
}

/// Runs the rank-sum test per function over two result batches. The two
/// maps must cover exactly the same function ids.
pub fn significance_table(
    results_a: &[(String, Vec<f64>)],
    results_b: &[(String, Vec<f64>)],
) -> Result<Vec<SignificanceRow>> {
    let mut ids_a: Vec<&String> = results_a.iter().map(|(id, _)| id).collect();
    let mut ids_b: Vec<&String> = results_b.iter().map(|(id, _)| id).collect();
    ids_a.sort();
    ids_b.sort();
    if ids_a != ids_b {
        return Err(Error::usage(
            "significance table requires identical function sets in both batches",
        ));
    }
    let mut rows = Vec::with_capacity(results_a.len());
    for (id, finals_a) in results_a {
        let finals_b = &results_b.iter().find(|(other, _)| other == id).unwrap().1;
        let p = wilcoxon_ranksum(finals_a, finals_b)?;
        rows.push(SignificanceRow {
            function: id.clone(),
            p_value: p,
            significant: p < 0.05,
        });
    }
    Ok(rows)
}
