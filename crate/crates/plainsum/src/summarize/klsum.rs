//! Greedy sentence selection minimizing KL divergence between the document
//! and the growing summary, over unigram term distributions.

use std::collections::HashMap;

use crate::textproc::TokenizedDocument;
use crate::{Error, Result};

use super::{apply_budget, Budget, ExtractiveSummary};

/// Add-epsilon smoothing for the summary distribution.
const SMOOTHING_EPS: f64 = 1e-3;

fn term_counts(doc: &TokenizedDocument, sentence: usize) -> HashMap<&str, usize> {
    let mut counts = HashMap::new();
    for term in doc.sentences[sentence].content_terms() {
        *counts.entry(term).or_insert(0) += 1;
    }
    counts
}

/// KL(doc || summary) over the document vocabulary, both distributions
/// smoothed by epsilon and normalized over that vocabulary.
pub fn kl_divergence_to_doc(
    doc_counts: &HashMap<&str, usize>,
    doc_total: usize,
    summary_counts: &HashMap<&str, usize>,
    summary_total: usize,
) -> f64 {
    let vocab = doc_counts.len() as f64;
    let doc_denom = doc_total as f64 + SMOOTHING_EPS * vocab;
    let summary_denom = summary_total as f64 + SMOOTHING_EPS * vocab;

    let mut kl = 0.0;
    for (term, &c_doc) in doc_counts {
        let p = (c_doc as f64 + SMOOTHING_EPS) / doc_denom;
        let c_sum = summary_counts.get(term).copied().unwrap_or(0);
        let q = (c_sum as f64 + SMOOTHING_EPS) / summary_denom;
        kl += p * (p / q).ln();
    }
    kl
}

/// KLSum with the objective value recorded after each accepted sentence.
pub fn klsum_with_trace(
    doc: &TokenizedDocument,
    budget: &Budget,
) -> Result<(ExtractiveSummary, Vec<f64>)> {
    let n = doc.sentences.len();
    if n == 0 {
        return Err(Error::DegenerateDocument);
    }

    let per_sentence: Vec<HashMap<&str, usize>> = (0..n).map(|i| term_counts(doc, i)).collect();
    let mut doc_counts: HashMap<&str, usize> = HashMap::new();
    for counts in &per_sentence {
        for (term, c) in counts {
            *doc_counts.entry(term).or_insert(0) += c;
        }
    }
    let doc_total: usize = doc_counts.values().sum();
    if doc_total == 0 {
        return Err(Error::DegenerateDocument);
    }

    let target = budget.target_words as i64;
    let mut selected: Vec<usize> = Vec::new();
    let mut summary_counts: HashMap<&str, usize> = HashMap::new();
    let mut summary_total = 0usize;
    let mut accumulated: i64 = 0;
    let mut trace = Vec::new();

    loop {
        // Greedy step: the unselected sentence minimizing the objective,
        // ties to the earlier position.
        let mut best: Option<(usize, f64)> = None;
        for cand in 0..n {
            if selected.contains(&cand) {
                continue;
            }
            let mut merged = summary_counts.clone();
            for (term, c) in &per_sentence[cand] {
                *merged.entry(term).or_insert(0) += c;
            }
            let cand_total = summary_total + per_sentence[cand].values().sum::<usize>();
            let kl = kl_divergence_to_doc(&doc_counts, doc_total, &merged, cand_total);
            match best {
                Some((_, best_kl)) if kl >= best_kl => {}
                _ => best = Some((cand, kl)),
            }
        }
        let Some((cand, kl)) = best else {
            break; // every sentence selected
        };

        let len = doc.sentences[cand].raw_word_count as i64;
        if accumulated + len > target {
            // Budget boundary: keep the overflow sentence only if that lands
            // closer to the target (minimum one sentence either way).
            let with = (accumulated + len - target).abs();
            let without = (accumulated - target).abs();
            if with <= without || selected.is_empty() {
                selected.push(cand);
                trace.push(kl);
            }
            break;
        }
        for (term, c) in &per_sentence[cand] {
            *summary_counts.entry(*term).or_insert(0) += c;
        }
        summary_total += per_sentence[cand].values().sum::<usize>();
        selected.push(cand);
        accumulated += len;
        trace.push(kl);
    }

    Ok((ExtractiveSummary::from_selection(selected, doc), trace))
}

/// Greedy KLSum under the shared budget rule.
pub fn klsum(doc: &TokenizedDocument, budget: &Budget) -> Result<ExtractiveSummary> {
    Ok(klsum_with_trace(doc, budget)?.0)
}

#[cfg(test)]
mod tests {
    use super::super::testdoc::*;
    use super::*;
    use crate::textproc::PreprocessConfig;

    #[test]
    fn sentence_matching_doc_distribution_chosen_first() {
        // Sentence 0's term distribution equals the whole document's.
        let doc = doc_from(
            "alpha beta. alpha alpha alpha. beta beta beta.",
            PreprocessConfig::raw(),
        );
        let (summary, _) = klsum_with_trace(&doc, &Budget::fixed(2).unwrap()).unwrap();
        assert_eq!(summary.selected, vec![0]);
    }

    #[test]
    fn empty_content_is_degenerate() {
        let doc = doc_from("... --- ...", PreprocessConfig::raw());
        assert!(matches!(
            klsum(&doc, &Budget::fixed(5).unwrap()),
            Err(Error::DegenerateDocument)
        ));
    }

    #[test]
    fn greedy_matches_exhaustive_on_small_doc() {
        // Three sentences, budget sized for two: greedy must match the
        // exhaustive best subset of matching size.
        let doc = doc_from(
            "vendors process data under contract. users accept terms quickly. \
             vendors share data with users.",
            PreprocessConfig::full(),
        );
        let budget = Budget::fixed(8).unwrap();
        let (summary, trace) = klsum_with_trace(&doc, &budget).unwrap();

        let per: Vec<HashMap<&str, usize>> =
            (0..doc.sentences.len()).map(|i| term_counts(&doc, i)).collect();
        let mut doc_counts: HashMap<&str, usize> = HashMap::new();
        for counts in &per {
            for (t, c) in counts {
                *doc_counts.entry(t).or_insert(0) += c;
            }
        }
        let doc_total: usize = doc_counts.values().sum();

        // Exhaustive search over subsets of the same cardinality.
        let n = doc.sentences.len();
        let k = summary.selected.len();
        let mut best_kl = f64::INFINITY;
        for mask in 1u32..(1 << n) {
            if (mask.count_ones() as usize) != k {
                continue;
            }
            let mut merged: HashMap<&str, usize> = HashMap::new();
            let mut total = 0usize;
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    for (t, c) in &per[i] {
                        *merged.entry(t).or_insert(0) += c;
                    }
                    total += per[i].values().sum::<usize>();
                }
            }
            let kl = kl_divergence_to_doc(&doc_counts, doc_total, &merged, total);
            best_kl = best_kl.min(kl);
        }

        let final_kl = *trace.last().unwrap();
        assert!(
            final_kl <= best_kl + 1e-9,
            "greedy {final_kl} worse than exhaustive {best_kl}"
        );
    }

    #[test]
    fn single_sentence_always_emitted() {
        let doc = doc_from(
            "this sentence has rather many words inside it for the budget.",
            PreprocessConfig::raw(),
        );
        let summary = klsum(&doc, &Budget::fixed(2).unwrap()).unwrap();
        assert_eq!(summary.selected, vec![0]);
    }
}
