//! Lead and random sentence-selection baselines.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::textproc::TokenizedDocument;
use crate::{Error, Result};

use super::{apply_budget, Budget, ExtractiveSummary};

/// The first sentence, ignoring any budget.
pub fn lead1(doc: &TokenizedDocument) -> Result<ExtractiveSummary> {
    if doc.sentences.is_empty() {
        return Err(Error::DegenerateDocument);
    }
    let budget = Budget {
        target_words: usize::MAX >> 1,
        mode: super::BudgetMode::Fixed,
    };
    Ok(apply_budget(&[0], doc, &budget))
}

/// The first k sentences filling the word budget.
pub fn leadk(doc: &TokenizedDocument, budget: &Budget) -> Result<ExtractiveSummary> {
    if doc.sentences.is_empty() {
        return Err(Error::DegenerateDocument);
    }
    let ranked: Vec<usize> = (0..doc.sentences.len()).collect();
    Ok(apply_budget(&ranked, doc, budget))
}

/// Uniform random sentences without replacement, in draw order, filling the
/// word budget. Fully determined by `seed`.
pub fn randomk(doc: &TokenizedDocument, budget: &Budget, seed: u64) -> Result<ExtractiveSummary> {
    if doc.sentences.is_empty() {
        return Err(Error::DegenerateDocument);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..doc.sentences.len()).collect();
    order.shuffle(&mut rng);
    Ok(apply_budget(&order, doc, budget))
}

/// Stable per-(document, run) seed derivation so corpus runs never share RNG
/// state: a splitmix64 finalizer over the base seed, run index, and an
/// FNV-1a hash of the document uid.
pub fn derive_seed(base: u64, run: u32, uid: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in uid.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    let mut z = base ^ h ^ ((u64::from(run) + 1) << 32);
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::super::testdoc::*;
    use super::*;
    use crate::textproc::PreprocessConfig;

    #[test]
    fn lead1_returns_first_sentence_verbatim() {
        let doc = doc_from(
            "By using our services you are agreeing to these terms. \
             If you are the parent you are agreeing on behalf of your child. \
             If you do not agree do not use the services.",
            PreprocessConfig::raw(),
        );
        let summary = lead1(&doc).unwrap();
        assert_eq!(summary.selected, vec![0]);
        assert_eq!(
            summary.text,
            "By using our services you are agreeing to these terms."
        );
    }

    #[test]
    fn lead1_single_sentence_doc() {
        let doc = doc_from("Don't blame google.", PreprocessConfig::raw());
        let summary = lead1(&doc).unwrap();
        assert_eq!(summary.text, "Don't blame google.");
    }

    #[test]
    fn leadk_respects_budget_rule() {
        let doc = doc_with_lengths(&[10, 9, 30]);
        let summary = leadk(&doc, &Budget::fixed(17).unwrap()).unwrap();
        assert_eq!(summary.selected, vec![0, 1]);
    }

    #[test]
    fn leadk_with_large_budget_takes_whole_doc() {
        let doc = doc_with_lengths(&[3, 4, 5]);
        let summary = leadk(&doc, &Budget::fixed(100).unwrap()).unwrap();
        assert_eq!(summary.selected, vec![0, 1, 2]);
    }

    #[test]
    fn leadk_minimum_one_sentence() {
        let doc = doc_with_lengths(&[10, 10]);
        let summary = leadk(&doc, &Budget::fixed(1).unwrap()).unwrap();
        assert_eq!(summary.selected, vec![0]);
    }

    #[test]
    fn randomk_is_deterministic_per_seed() {
        let doc = doc_with_lengths(&[5, 5, 5, 5]);
        let budget = Budget::fixed(10).unwrap();
        let a = randomk(&doc, &budget, 99).unwrap();
        let b = randomk(&doc, &budget, 99).unwrap();
        assert_eq!(a, b);
        assert!(a.selected.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn randomk_single_sentence_any_seed() {
        let doc = doc_from("Just the one sentence.", PreprocessConfig::raw());
        for seed in 0..20 {
            let summary = randomk(&doc, &Budget::fixed(4).unwrap(), seed).unwrap();
            assert_eq!(summary.selected, vec![0]);
        }
    }

    #[test]
    fn randomk_first_draws_are_uniform() {
        // Budget of one 5-word sentence: only the first draw survives.
        let doc = doc_with_lengths(&[5, 5, 5, 5]);
        let budget = Budget::fixed(5).unwrap();
        let mut counts = [0usize; 4];
        let runs = 10_000;
        for seed in 0..runs {
            let summary = randomk(&doc, &budget, seed).unwrap();
            assert_eq!(summary.selected.len(), 1);
            counts[summary.selected[0]] += 1;
        }
        for &c in &counts {
            let freq = c as f64 / runs as f64;
            assert!(
                (freq - 0.25).abs() <= 0.02,
                "selection frequency {freq} outside 0.25 +/- 0.02"
            );
        }
    }

    #[test]
    fn derived_seeds_differ_across_runs_and_documents() {
        let a = derive_seed(42, 0, "tosdr_p1");
        let b = derive_seed(42, 1, "tosdr_p1");
        let c = derive_seed(42, 0, "tosdr_p2");
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, derive_seed(42, 0, "tosdr_p1"));
    }
}
