//! Sentence ranking via PageRank over a sentence-similarity graph.

use crate::textproc::{Sentence, TokenizedDocument};
use crate::{Error, Result};

use super::{apply_budget, Budget, ExtractiveSummary};

/// PageRank damping factor.
const DAMPING: f64 = 0.85;
/// Convergence threshold on the maximum per-node score change.
const CONVERGENCE_EPS: f64 = 1e-6;
/// Iteration cap.
const MAX_ITERATIONS: usize = 100;

/// Similarity between two sentences: shared content-term types divided by
/// the sum of log sentence lengths. Zero when either log term is zero
/// (single-token sentences) or when nothing is shared.
pub fn sentence_similarity(a: &Sentence, b: &Sentence) -> f64 {
    let terms_a: std::collections::HashSet<&str> = a.content_terms().collect();
    let terms_b: std::collections::HashSet<&str> = b.content_terms().collect();
    let len_a = terms_from(a);
    let len_b = terms_from(b);
    if len_a <= 1 || len_b <= 1 {
        return 0.0;
    }
    let shared = terms_a.intersection(&terms_b).count();
    if shared == 0 {
        return 0.0;
    }
    shared as f64 / ((len_a as f64).ln() + (len_b as f64).ln())
}

fn terms_from(s: &Sentence) -> usize {
    s.content_terms().count()
}

/// PageRank scores over the complete sentence-similarity graph. Scores form
/// a probability distribution (dangling sentences redistribute uniformly).
pub fn sentence_scores(doc: &TokenizedDocument) -> Vec<f64> {
    let n = doc.sentences.len();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![1.0];
    }

    let mut sim = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let s = sentence_similarity(&doc.sentences[i], &doc.sentences[j]);
            sim[i][j] = s;
            sim[j][i] = s;
        }
    }
    let weight_sums: Vec<f64> = sim.iter().map(|row| row.iter().sum()).collect();

    let n_f = n as f64;
    let mut scores = vec![1.0 / n_f; n];
    let mut next = vec![0.0f64; n];

    for _ in 0..MAX_ITERATIONS {
        let dangling: f64 = (0..n)
            .filter(|&i| weight_sums[i] == 0.0)
            .map(|i| scores[i])
            .sum();
        let teleport = (1.0 - DAMPING) / n_f + DAMPING * dangling / n_f;
        next.fill(teleport);

        for j in 0..n {
            if weight_sums[j] > 0.0 {
                let share = DAMPING * scores[j] / weight_sums[j];
                for i in 0..n {
                    if sim[j][i] > 0.0 {
                        next[i] += share * sim[j][i];
                    }
                }
            }
        }

        let max_delta = scores
            .iter()
            .zip(next.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        std::mem::swap(&mut scores, &mut next);
        if max_delta < CONVERGENCE_EPS {
            break;
        }
    }
    scores
}

/// TextRank: rank sentences by PageRank score (ties to earlier position) and
/// fill the budget.
pub fn textrank(doc: &TokenizedDocument, budget: &Budget) -> Result<ExtractiveSummary> {
    if doc.sentences.is_empty() {
        return Err(Error::DegenerateDocument);
    }
    let scores = sentence_scores(doc);
    let mut ranked: Vec<usize> = (0..doc.sentences.len()).collect();
    ranked.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.cmp(&b))
    });
    Ok(apply_budget(&ranked, doc, budget))
}
