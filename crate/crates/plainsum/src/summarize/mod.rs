//! The five unsupervised extractive baselines and the shared word-budget
//! rule.

mod baselines;
mod klsum;
mod textrank;

use serde::Serialize;

use crate::corpus::Corpus;
use crate::textproc::{word_count, TokenizedDocument};
use crate::{Error, Result};

pub use baselines::{derive_seed, lead1, leadk, randomk};
pub use klsum::{klsum, klsum_with_trace, kl_divergence_to_doc};
pub use textrank::{sentence_scores, sentence_similarity, textrank};

/// How the word budget was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BudgetMode {
    /// Mean reference-summary word count of the evaluation corpus, rounded.
    Auto,
    Fixed,
}

/// Target word count for system summaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub target_words: usize,
    pub mode: BudgetMode,
}

impl Budget {
    pub fn fixed(target_words: usize) -> Result<Budget> {
        if target_words == 0 {
            return Err(Error::InvalidArgument("budget must be >= 1 word".into()));
        }
        Ok(Budget {
            target_words,
            mode: BudgetMode::Fixed,
        })
    }

    /// Budget at the rounded mean word count of the corpus's designated best
    /// summaries (raw tokenization).
    pub fn auto_from_corpus(corpus: &Corpus) -> Result<Budget> {
        let counts: Vec<usize> = corpus
            .scorable_sets()
            .map(|s| word_count(&s.best().expect("scorable").text))
            .collect();
        if counts.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mean = counts.iter().sum::<usize>() as f64 / counts.len() as f64;
        Ok(Budget {
            target_words: (mean.round() as usize).max(1),
            mode: BudgetMode::Auto,
        })
    }
}

/// An extractive summary: selected sentence indices in document order, their
/// concatenated source text, and the total source word count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractiveSummary {
    pub selected: Vec<usize>,
    pub text: String,
    pub word_count: usize,
}

impl ExtractiveSummary {
    fn from_selection(mut selected: Vec<usize>, doc: &TokenizedDocument) -> ExtractiveSummary {
        selected.sort_unstable();
        let text = selected
            .iter()
            .map(|&i| doc.sentences[i].raw.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        let word_count = selected
            .iter()
            .map(|&i| doc.sentences[i].raw_word_count)
            .sum();
        ExtractiveSummary {
            selected,
            text,
            word_count,
        }
    }
}

/// Takes sentences in ranked order, accumulating source word counts. The
/// first sentence that would exceed the target is kept only if the resulting
/// length is at least as close to the target as stopping short (ties keep
/// it); either way selection stops there. At least one sentence is always
/// emitted. Output indices are re-sorted into document order.
pub fn apply_budget(
    ranked: &[usize],
    doc: &TokenizedDocument,
    budget: &Budget,
) -> ExtractiveSummary {
    let target = budget.target_words as i64;
    let mut selected = Vec::new();
    let mut accumulated: i64 = 0;

    for &idx in ranked {
        let len = doc.sentences[idx].raw_word_count as i64;
        if accumulated + len <= target {
            selected.push(idx);
            accumulated += len;
            continue;
        }
        let with = (accumulated + len - target).abs();
        let without = (accumulated - target).abs();
        if with <= without {
            selected.push(idx);
        }
        break;
    }

    if selected.is_empty() {
        if let Some(&first) = ranked.first() {
            selected.push(first);
        }
    }

    ExtractiveSummary::from_selection(selected, doc)
}

/// Summarizer identifiers, used by the CLI and the evaluation harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    Textrank,
    Klsum,
    Lead1,
    Leadk,
    Randomk,
}

impl System {
    pub const ALL: [System; 5] = [
        System::Textrank,
        System::Klsum,
        System::Lead1,
        System::Leadk,
        System::Randomk,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            System::Textrank => "textrank",
            System::Klsum => "klsum",
            System::Lead1 => "lead-1",
            System::Leadk => "lead-k",
            System::Randomk => "random-k",
        }
    }
}

impl std::str::FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_lowercase().replace('_', "-").as_str() {
            "textrank" => Ok(System::Textrank),
            "klsum" => Ok(System::Klsum),
            "lead-1" | "lead1" => Ok(System::Lead1),
            "lead-k" | "leadk" => Ok(System::Leadk),
            "random-k" | "randomk" => Ok(System::Randomk),
            other => Err(Error::InvalidArgument(format!(
                "unknown system `{other}` (expected textrank, klsum, lead-1, lead-k, random-k)"
            ))),
        }
    }
}

impl std::fmt::Display for System {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Runs one system on a document. `seed` is only consulted by Random-K.
pub fn summarize(
    system: System,
    doc: &TokenizedDocument,
    budget: &Budget,
    seed: u64,
) -> Result<ExtractiveSummary> {
    match system {
        System::Textrank => textrank(doc, budget),
        System::Klsum => klsum(doc, budget),
        System::Lead1 => lead1(doc),
        System::Leadk => leadk(doc, budget),
        System::Randomk => randomk(doc, budget, seed),
    }
}

#[cfg(test)]
pub(crate) mod testdoc {
    use crate::textproc::{preprocess, PreprocessConfig, TokenizedDocument};

    /// A document whose sentences have exactly the given word lengths,
    /// tokenized with the identity config.
    pub fn doc_with_lengths(lengths: &[usize]) -> TokenizedDocument {
        let text: Vec<String> = lengths
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                let words: Vec<String> =
                    (0..len).map(|w| format!("w{i}x{w}")).collect();
                words.join(" ") + "."
            })
            .collect();
        preprocess(&text.join(" "), PreprocessConfig::raw()).unwrap()
    }

    pub fn doc_from(text: &str, config: PreprocessConfig) -> TokenizedDocument {
        preprocess(text, config).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testdoc::*;
    use super::*;

    #[test]
    fn budget_keeps_overflow_sentence_when_closer() {
        // Lengths [10, 9], budget 17: 19 words is closer than 10.
        let doc = doc_with_lengths(&[10, 9]);
        let summary = apply_budget(&[0, 1], &doc, &Budget::fixed(17).unwrap());
        assert_eq!(summary.selected, vec![0, 1]);
        assert_eq!(summary.word_count, 19);
    }

    #[test]
    fn budget_drops_overflow_sentence_when_farther() {
        // Lengths [10, 20], budget 12: 30 is farther than 10.
        let doc = doc_with_lengths(&[10, 20]);
        let summary = apply_budget(&[0, 1], &doc, &Budget::fixed(12).unwrap());
        assert_eq!(summary.selected, vec![0]);
        assert_eq!(summary.word_count, 10);
    }

    #[test]
    fn budget_emits_minimum_one_sentence() {
        // A 40-word sentence against budget 17: the empty summary is closer,
        // but one sentence is always emitted.
        let doc = doc_with_lengths(&[40]);
        let summary = apply_budget(&[0], &doc, &Budget::fixed(17).unwrap());
        assert_eq!(summary.selected, vec![0]);
        assert_eq!(summary.word_count, 40);
    }

    #[test]
    fn budget_tie_keeps_the_sentence() {
        // Lengths [10, 4], budget 12: |14-12| == |10-12|, tie keeps.
        let doc = doc_with_lengths(&[10, 4]);
        let summary = apply_budget(&[0, 1], &doc, &Budget::fixed(12).unwrap());
        assert_eq!(summary.selected, vec![0, 1]);
    }

    #[test]
    fn budget_output_in_document_order() {
        let doc = doc_with_lengths(&[5, 5, 5]);
        let summary = apply_budget(&[2, 0, 1], &doc, &Budget::fixed(10).unwrap());
        assert_eq!(summary.selected, vec![0, 2]);
    }

    #[test]
    fn budget_covers_whole_doc_when_large() {
        let doc = doc_with_lengths(&[5, 5, 5]);
        let summary = apply_budget(&[0, 1, 2], &doc, &Budget::fixed(100).unwrap());
        assert_eq!(summary.selected, vec![0, 1, 2]);
    }

    #[test]
    fn auto_budget_is_rounded_mean_of_best_summaries() {
        use crate::corpus::testutil::scored_set;
        use crate::corpus::Corpus;
        let corpus = Corpus::new(
            "c",
            vec![
                scored_set("a", "A", "one two three four five six.", "one two three."),
                scored_set("b", "B", "one two three four five six.", "one two three four."),
            ],
        );
        // Mean of 3 and 4 words rounds to 4.
        let budget = Budget::auto_from_corpus(&corpus).unwrap();
        assert_eq!(budget.target_words, 4);
        assert_eq!(budget.mode, BudgetMode::Auto);
    }

    #[test]
    fn zero_budget_rejected() {
        assert!(Budget::fixed(0).is_err());
    }
}
