//! ROUGE-1, ROUGE-2, and ROUGE-L scoring, plus corpus-level evaluation of
//! the extractive baselines.

mod evaluate;

use std::collections::HashMap;

use serde::Serialize;

use crate::{Error, Result};

pub use evaluate::{evaluate, evaluate_all, EvalConfig, EvaluationTable, SystemScores};

/// Precision/recall/F1 triple. `undefined` marks scores forced to zero
/// because one side had no n-grams (e.g. a candidate shorter than n).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RougeScore {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub undefined: bool,
}

impl RougeScore {
    fn zero(undefined: bool) -> RougeScore {
        RougeScore {
            precision: 0.0,
            recall: 0.0,
            f1: 0.0,
            undefined,
        }
    }

    fn from_counts(matches: usize, candidate_total: usize, reference_total: usize) -> RougeScore {
        if candidate_total == 0 || reference_total == 0 {
            return RougeScore::zero(true);
        }
        let precision = matches as f64 / candidate_total as f64;
        let recall = matches as f64 / reference_total as f64;
        RougeScore {
            precision,
            recall,
            f1: harmonic_mean(precision, recall),
            undefined: false,
        }
    }
}

fn harmonic_mean(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

fn ngram_counts<'a>(tokens: &'a [&'a str], n: usize) -> HashMap<&'a [&'a str], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window).or_insert(0) += 1;
        }
    }
    counts
}

/// ROUGE-N with clipped (multiset-intersection) counts: recall against the
/// reference's n-grams, precision against the candidate's.
pub fn rouge_n(candidate: &[&str], reference: &[&str], n: usize) -> Result<RougeScore> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-gram order must be >= 1".into()));
    }
    if reference.is_empty() {
        return Err(Error::InvalidArgument("reference must be non-empty".into()));
    }
    let cand = ngram_counts(candidate, n);
    let reference_counts = ngram_counts(reference, n);
    let cand_total: usize = cand.values().sum();
    let ref_total: usize = reference_counts.values().sum();
    if cand_total == 0 || ref_total == 0 {
        return Ok(RougeScore::zero(true));
    }
    let matches: usize = cand
        .iter()
        .map(|(gram, c)| (*c).min(reference_counts.get(gram).copied().unwrap_or(0)))
        .sum();
    Ok(RougeScore::from_counts(matches, cand_total, ref_total))
}

/// Longest common subsequence length via dynamic programming.
pub fn lcs_length(a: &[&str], b: &[&str]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; b.len() + 1];
    let mut curr = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            curr[j + 1] = if x == y {
                prev[j] + 1
            } else {
                curr[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[b.len()]
}

/// ROUGE-L over whole token sequences: recall = LCS/|reference|,
/// precision = LCS/|candidate|.
pub fn rouge_l(candidate: &[&str], reference: &[&str]) -> Result<RougeScore> {
    if reference.is_empty() {
        return Err(Error::InvalidArgument("reference must be non-empty".into()));
    }
    if candidate.is_empty() {
        return Ok(RougeScore::zero(true));
    }
    let lcs = lcs_length(candidate, reference);
    Ok(RougeScore::from_counts(lcs, candidate.len(), reference.len()))
}
