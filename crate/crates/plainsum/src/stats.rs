//! Corpus-level abstraction, compression, length, and lexical-association
//! statistics.

use std::collections::HashMap;

use serde::Serialize;

use crate::corpus::Corpus;
use crate::textproc::{self, preprocess, segment_sentences, word_count, PreprocessConfig};
use crate::{Error, Result};

/// Default minimum total count for a lemma to receive a log-odds score.
pub const DEFAULT_MIN_COUNT: usize = 3;
/// Default add-alpha smoothing for log-odds ratios.
pub const DEFAULT_SMOOTHING: f64 = 1.0;

/// Corpus-level statistics: novel n-gram fractions, compression ratio
/// moments, and length moments for both sides.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CorpusStats {
    /// n -> fraction of reference n-grams absent from the paired original.
    pub novel_ngram_fraction: std::collections::BTreeMap<usize, f64>,
    pub compression_mean: f64,
    pub compression_std: f64,
    pub orig_words_mean: f64,
    pub orig_words_std: f64,
    pub orig_sents_mean: f64,
    pub orig_sents_std: f64,
    pub summ_words_mean: f64,
    pub summ_words_std: f64,
    pub summ_sents_mean: f64,
    pub summ_sents_std: f64,
    /// Sets that contributed (had a best summary and a non-empty original).
    pub sets_counted: usize,
}

/// Which side of the corpus a word leans toward under the log-odds ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AssociationSide {
    Summary,
    Original,
}

/// One lemma with its log-odds score. Positive scores lean toward the
/// summary side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WordAssociation {
    pub word: String,
    pub log_odds: f64,
    pub side: AssociationSide,
}

/// Top-k summary-associated and original-associated word lists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WordSetPair {
    pub summary_words: Vec<String>,
    pub original_words: Vec<String>,
    pub k: usize,
}

/// Fraction of reference-summary n-gram tokens (counted with multiplicity)
/// that do not occur in the paired original's n-gram set, micro-averaged
/// over the corpus. Sets without a best summary or that preprocess to
/// nothing are skipped with a log line.
pub fn novel_ngram_fraction(corpus: &Corpus, n: usize, config: PreprocessConfig) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-gram order must be >= 1".into()));
    }
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let mut novel = 0usize;
    let mut total = 0usize;
    for set in corpus.scorable_sets() {
        let best = &set.best().expect("scorable").text;
        let (orig_doc, summ_doc) = match (
            preprocess(&set.original_text, config),
            preprocess(best, config),
        ) {
            (Ok(o), Ok(s)) => (o, s),
            _ => {
                log::warn!("{}: degenerate text skipped in novelty", set.uid);
                continue;
            }
        };
        let orig_grams = textproc::ngrams(&orig_doc, n)?;
        let summ_grams = textproc::ngrams(&summ_doc, n)?;
        for (gram, count) in &summ_grams {
            total += count;
            if !orig_grams.contains_key(gram) {
                novel += count;
            }
        }
    }

    if total == 0 {
        return Err(Error::Undefined(format!(
            "no reference summary has an n-gram of order {n}"
        )));
    }
    Ok(novel as f64 / total as f64)
}

/// Per-set compression ratios (reference words / original words on raw
/// tokenization) and word/sentence length moments. Standard deviations are
/// population deviations. Sets with a zero-word original are skipped with a
/// warning.
pub fn compression_stats(corpus: &Corpus) -> Result<CorpusStats> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let mut ratios = Vec::new();
    let mut orig_words = Vec::new();
    let mut orig_sents = Vec::new();
    let mut summ_words = Vec::new();
    let mut summ_sents = Vec::new();

    for set in corpus.scorable_sets() {
        let best = &set.best().expect("scorable").text;
        let ow = word_count(&set.original_text);
        let sw = word_count(best);
        if ow == 0 {
            log::warn!("{}: zero-word original skipped in compression", set.uid);
            continue;
        }
        let os = segment_sentences(&set.original_text)?.len();
        let ss = segment_sentences(best)?.len();

        ratios.push(sw as f64 / ow as f64);
        orig_words.push(ow as f64);
        orig_sents.push(os as f64);
        summ_words.push(sw as f64);
        summ_sents.push(ss as f64);
    }

    if ratios.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let (compression_mean, compression_std) = mean_std(&ratios);
    let (orig_words_mean, orig_words_std) = mean_std(&orig_words);
    let (orig_sents_mean, orig_sents_std) = mean_std(&orig_sents);
    let (summ_words_mean, summ_words_std) = mean_std(&summ_words);
    let (summ_sents_mean, summ_sents_std) = mean_std(&summ_sents);

    Ok(CorpusStats {
        novel_ngram_fraction: Default::default(),
        compression_mean,
        compression_std,
        orig_words_mean,
        orig_words_std,
        orig_sents_mean,
        orig_sents_std,
        summ_words_mean,
        summ_words_std,
        summ_sents_mean,
        summ_sents_std,
        sets_counted: ratios.len(),
    })
}

/// Full corpus statistics: compression/length moments plus novel n-gram
/// fractions for n in `1..=max_n`.
pub fn corpus_stats(corpus: &Corpus, max_n: usize, config: PreprocessConfig) -> Result<CorpusStats> {
    let mut stats = compression_stats(corpus)?;
    for n in 1..=max_n {
        match novel_ngram_fraction(corpus, n, config) {
            Ok(fraction) => {
                stats.novel_ngram_fraction.insert(n, fraction);
            }
            Err(Error::Undefined(_)) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(stats)
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Log-odds ratio of every lemma between the reference summaries (S) and the
/// originals (D):
///
/// `score(w) = ln((c_S(w)+a)/(N_S+aV)) - ln((c_D(w)+a)/(N_D+aV))`
///
/// with `a` the smoothing constant and `V` the joint vocabulary size. Only
/// lemmas with total count >= `min_count` are scored. Results sort by score
/// descending, ties by word, so output order is deterministic.
pub fn log_odds_ratios(
    corpus: &Corpus,
    min_count: usize,
    smoothing: f64,
) -> Result<Vec<WordAssociation>> {
    let config = PreprocessConfig::full();
    let mut summary_counts: HashMap<String, usize> = HashMap::new();
    let mut original_counts: HashMap<String, usize> = HashMap::new();

    for set in corpus.scorable_sets() {
        let best = &set.best().expect("scorable").text;
        if let Ok(doc) = preprocess(best, config) {
            for term in doc.content_terms() {
                *summary_counts.entry(term.to_string()).or_insert(0) += 1;
            }
        }
        if let Ok(doc) = preprocess(&set.original_text, config) {
            for term in doc.content_terms() {
                *original_counts.entry(term.to_string()).or_insert(0) += 1;
            }
        }
    }

    let mut vocab: Vec<&String> = summary_counts
        .keys()
        .chain(original_counts.keys())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    vocab.dedup();

    if vocab.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let v = vocab.len() as f64;
    let n_s: usize = summary_counts.values().sum();
    let n_d: usize = original_counts.values().sum();
    let denom_s = n_s as f64 + smoothing * v;
    let denom_d = n_d as f64 + smoothing * v;

    let mut associations = Vec::new();
    for word in vocab {
        let c_s = summary_counts.get(word).copied().unwrap_or(0);
        let c_d = original_counts.get(word).copied().unwrap_or(0);
        if c_s + c_d < min_count {
            continue;
        }
        let score = ((c_s as f64 + smoothing) / denom_s).ln()
            - ((c_d as f64 + smoothing) / denom_d).ln();
        associations.push(WordAssociation {
            word: word.clone(),
            log_odds: score,
            side: if score > 0.0 {
                AssociationSide::Summary
            } else {
                AssociationSide::Original
            },
        });
    }

    associations.sort_by(|a, b| {
        b.log_odds
            .partial_cmp(&a.log_odds)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.word.cmp(&b.word))
    });
    Ok(associations)
}

/// The `k` most summary-associated and `k` most original-associated words
/// from a sorted association list. The two lists are disjoint by
/// construction; an error names the side that cannot be filled.
pub fn top_k_pair(associations: &[WordAssociation], k: usize) -> Result<WordSetPair> {
    if associations.len() < k {
        return Err(Error::InsufficientVocabulary {
            side: "summary",
            needed: k,
            available: associations.len(),
        });
    }
    if associations.len() < 2 * k {
        return Err(Error::InsufficientVocabulary {
            side: "original",
            needed: k,
            available: associations.len() - k,
        });
    }
    let summary_words = associations[..k].iter().map(|a| a.word.clone()).collect();
    let original_words = associations[associations.len() - k..]
        .iter()
        .rev()
        .map(|a| a.word.clone())
        .collect();
    Ok(WordSetPair {
        summary_words,
        original_words,
        k,
    })
}
