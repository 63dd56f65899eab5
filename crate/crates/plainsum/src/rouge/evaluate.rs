//! Corpus-level evaluation: run a summarizer over every scorable set and
//! macro-average ROUGE-1/2/L against the designated best summaries.

use serde::Serialize;

use crate::corpus::Corpus;
use crate::summarize::{derive_seed, summarize, Budget, System};
use crate::textproc::{preprocess, PreprocessConfig, TokenizedDocument};
use crate::{Error, Result};

use super::{rouge_l, rouge_n, RougeScore};

/// Budget selection for an evaluation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BudgetChoice {
    /// Mean reference length of the corpus under evaluation.
    Auto,
    Fixed(usize),
}

/// Evaluation settings. Defaults reproduce the standard pipeline: full
/// preprocessing, auto budget, ten seeded runs for Random-K.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalConfig {
    pub preprocess: bool,
    pub budget: BudgetChoice,
    pub seed: u64,
    pub runs: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            preprocess: true,
            budget: BudgetChoice::Auto,
            seed: 42,
            runs: 10,
        }
    }
}

/// Mean ROUGE scores for one system over a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemScores {
    pub system: System,
    pub rouge1: RougeScore,
    pub rouge2: RougeScore,
    pub rouge_l: RougeScore,
    pub sets_scored: usize,
}

/// Rows of a per-system evaluation over one corpus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationTable {
    pub corpus: String,
    pub rows: Vec<SystemScores>,
}

#[derive(Default)]
struct ScoreAccumulator {
    r1: MeanTriple,
    r2: MeanTriple,
    rl: MeanTriple,
    sets: usize,
}

#[derive(Default)]
struct MeanTriple {
    precision: f64,
    recall: f64,
    f1: f64,
}

impl MeanTriple {
    fn add(&mut self, s: &RougeScore, weight: f64) {
        self.precision += s.precision * weight;
        self.recall += s.recall * weight;
        self.f1 += s.f1 * weight;
    }

    fn mean(&self, n: usize) -> RougeScore {
        let n = n as f64;
        RougeScore {
            precision: self.precision / n,
            recall: self.recall / n,
            f1: self.f1 / n,
            undefined: false,
        }
    }
}

fn doc_terms(doc: &TokenizedDocument) -> Vec<&str> {
    doc.sentences
        .iter()
        .flat_map(|s| s.tokens.iter().map(|t| t.term.as_str()))
        .collect()
}

fn summary_terms<'a>(doc: &'a TokenizedDocument, selected: &[usize]) -> Vec<&'a str> {
    selected
        .iter()
        .flat_map(|&i| doc.sentences[i].tokens.iter().map(|t| t.term.as_str()))
        .collect()
}

/// Evaluates one system over the corpus's scorable sets: per-set ROUGE
/// scores (Random-K averaged over `runs` seeded runs per set) are
/// macro-averaged. Sets whose original or reference preprocesses to nothing
/// are skipped with a warning.
pub fn evaluate(system: System, corpus: &Corpus, config: &EvalConfig) -> Result<SystemScores> {
    let pp = if config.preprocess {
        PreprocessConfig::full()
    } else {
        PreprocessConfig::raw()
    };
    let budget = match config.budget {
        BudgetChoice::Auto => Budget::auto_from_corpus(corpus)?,
        BudgetChoice::Fixed(words) => Budget::fixed(words)?,
    };

    let mut acc = ScoreAccumulator::default();

    for set in corpus.scorable_sets() {
        let best = &set.best().expect("scorable").text;
        let (doc, reference) = match (preprocess(&set.original_text, pp), preprocess(best, pp)) {
            (Ok(d), Ok(r)) => (d, r),
            _ => {
                log::warn!("{}: degenerate text skipped in evaluation", set.uid);
                continue;
            }
        };
        let ref_terms = doc_terms(&reference);
        if ref_terms.is_empty() {
            log::warn!("{}: empty reference skipped", set.uid);
            continue;
        }

        let runs: Vec<u64> = match system {
            System::Randomk => (0..config.runs.max(1))
                .map(|run| derive_seed(config.seed, run, &set.uid))
                .collect(),
            _ => vec![0],
        };
        let weight = 1.0 / runs.len() as f64;
        for seed in runs {
            let summary = summarize(system, &doc, &budget, seed)?;
            let cand_terms = summary_terms(&doc, &summary.selected);
            acc.r1.add(&rouge_n(&cand_terms, &ref_terms, 1)?, weight);
            acc.r2.add(&rouge_n(&cand_terms, &ref_terms, 2)?, weight);
            acc.rl.add(&rouge_l(&cand_terms, &ref_terms)?, weight);
        }
        acc.sets += 1;
    }

    if acc.sets == 0 {
        return Err(Error::EmptyCorpus);
    }
    Ok(SystemScores {
        system,
        rouge1: acc.r1.mean(acc.sets),
        rouge2: acc.r2.mean(acc.sets),
        rouge_l: acc.rl.mean(acc.sets),
        sets_scored: acc.sets,
    })
}

/// Evaluates every system.
pub fn evaluate_all(corpus: &Corpus, config: &EvalConfig) -> Result<EvaluationTable> {
    let mut rows = Vec::with_capacity(System::ALL.len());
    for system in System::ALL {
        rows.push(evaluate(system, corpus, config)?);
    }
    Ok(EvaluationTable {
        corpus: corpus.name.clone(),
        rows,
    })
}
