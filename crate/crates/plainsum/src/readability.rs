//! Readability indices expressed as reading ages.
//!
//! Four US-grade-level formulas over basic text measures:
//!
//! * Flesch-Kincaid: `0.39*(words/sentences) + 11.8*(syllables/words) - 15.59`
//! * Coleman-Liau:   `0.0588*L - 0.296*S - 15.8` with L = letters and
//!   S = sentences per 100 words
//! * SMOG:           `1.0430*sqrt(polysyllables*30/sentences) + 3.1291`
//! * ARI:            `4.71*(characters/words) + 0.5*(words/sentences) - 21.43`
//!
//! Grades convert to ages by adding five years (US school entry age).

use serde::Serialize;

use crate::corpus::Corpus;
use crate::stats::WordSetPair;
use crate::textproc::{count_syllables, preprocess, PreprocessConfig, TokenizedDocument};
use crate::{Error, Result};

/// Years added to a US grade level to get the matching student age.
pub const GRADE_TO_AGE_OFFSET: f64 = 5.0;

/// Raw counts feeding the four formulas. Words with three or more syllables
/// count as polysyllables; letters are alphabetic characters, characters are
/// alphanumerics.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TextMeasures {
    pub words: usize,
    pub sentences: usize,
    pub syllables: usize,
    pub letters: usize,
    pub characters: usize,
    pub polysyllables: usize,
}

impl TextMeasures {
    /// Component-wise sum; used to pool documents with sentence boundaries
    /// preserved.
    pub fn add(&self, other: &TextMeasures) -> TextMeasures {
        TextMeasures {
            words: self.words + other.words,
            sentences: self.sentences + other.sentences,
            syllables: self.syllables + other.syllables,
            letters: self.letters + other.letters,
            characters: self.characters + other.characters,
            polysyllables: self.polysyllables + other.polysyllables,
        }
    }
}

/// US-grade-level scores of the four indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GradeIndices {
    pub fk: f64,
    pub cl: f64,
    pub smog: f64,
    pub ari: f64,
}

/// The four indices as reading ages plus their arithmetic mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReadabilityReport {
    pub fk: f64,
    pub cl: f64,
    pub smog: f64,
    pub ari: f64,
    pub average: f64,
}

impl ReadabilityReport {
    pub fn from_grades(grades: &GradeIndices) -> ReadabilityReport {
        let fk = to_age(grades.fk);
        let cl = to_age(grades.cl);
        let smog = to_age(grades.smog);
        let ari = to_age(grades.ari);
        ReadabilityReport {
            fk,
            cl,
            smog,
            ari,
            average: (fk + cl + smog + ari) / 4.0,
        }
    }
}

/// Which side of a corpus to score.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusSide {
    /// Designated best reference summaries.
    Summaries,
    /// Original contract texts.
    Originals,
}

/// Measures a tokenized document. Readability always runs on unfiltered,
/// unlemmatized tokens, so documents built with a dropping or lemmatizing
/// config are rejected.
pub fn measure(doc: &TokenizedDocument) -> Result<TextMeasures> {
    if doc.config.drop_punct || doc.config.drop_stopwords || doc.config.lemmatize {
        return Err(Error::InvalidArgument(
            "readability requires an unfiltered, unlemmatized document".into(),
        ));
    }
    let mut m = TextMeasures {
        sentences: doc.sentences.len(),
        ..TextMeasures::default()
    };
    for sentence in &doc.sentences {
        for token in sentence.tokens.iter().filter(|t| !t.is_punct) {
            m.words += 1;
            m.letters += token.surface.chars().filter(|c| c.is_alphabetic()).count();
            m.characters += token
                .surface
                .chars()
                .filter(|c| c.is_alphanumeric())
                .count();
            // Numbers and other letterless tokens count one syllable.
            let syl = count_syllables(&token.surface).unwrap_or(1);
            m.syllables += syl;
            if syl >= 3 {
                m.polysyllables += 1;
            }
        }
    }
    Ok(m)
}

/// Measures a raw text.
pub fn measure_text(text: &str) -> Result<TextMeasures> {
    let doc = preprocess(text, PreprocessConfig::raw())?;
    measure(&doc)
}

/// Evaluates the four grade-level formulas.
pub fn grade_indices(m: &TextMeasures) -> Result<GradeIndices> {
    if m.words == 0 || m.sentences == 0 {
        return Err(Error::InvalidArgument(
            "readability needs at least one word and one sentence".into(),
        ));
    }
    let words = m.words as f64;
    let sentences = m.sentences as f64;

    let fk = 0.39 * (words / sentences) + 11.8 * (m.syllables as f64 / words) - 15.59;

    let letters_per_100 = m.letters as f64 / words * 100.0;
    let sentences_per_100 = sentences / words * 100.0;
    let cl = 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8;

    let smog = 1.0430 * (m.polysyllables as f64 * 30.0 / sentences).sqrt() + 3.1291;

    let ari = 4.71 * (m.characters as f64 / words) + 0.5 * (words / sentences) - 21.43;

    Ok(GradeIndices { fk, cl, smog, ari })
}

/// Converts a US grade level to the matching reading age in years.
pub fn to_age(grade: f64) -> f64 {
    grade + GRADE_TO_AGE_OFFSET
}

/// Scores one side of a corpus as a single pooled text: per-document counts
/// are summed (document boundaries stay sentence boundaries) and the
/// formulas run once on the totals.
pub fn corpus_readability(corpus: &Corpus, side: CorpusSide) -> Result<ReadabilityReport> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut total = TextMeasures::default();
    let mut scored = 0usize;
    for set in corpus.scorable_sets() {
        let text = match side {
            CorpusSide::Originals => set.original_text.as_str(),
            CorpusSide::Summaries => &set.best().expect("scorable").text,
        };
        match measure_text(text) {
            Ok(m) => {
                total = total.add(&m);
                scored += 1;
            }
            Err(Error::EmptyInput) => {
                log::warn!("{}: empty text skipped in readability", set.uid);
            }
            Err(e) => return Err(e),
        }
    }
    if scored == 0 {
        return Err(Error::EmptyCorpus);
    }
    Ok(ReadabilityReport::from_grades(&grade_indices(&total)?))
}

/// ARI and F-K differences (original side minus summary side, in years)
/// between two word sets, treating every word as a one-word sentence. With
/// sentential terms pinned, the differences isolate lexical difficulty.
pub fn wordset_gap(pair: &WordSetPair) -> Result<(f64, f64)> {
    let side_grades = |words: &[String]| -> Result<GradeIndices> {
        if words.is_empty() {
            return Err(Error::InvalidArgument("empty word list".into()));
        }
        let mut m = TextMeasures::default();
        for word in words {
            m.words += 1;
            m.sentences += 1;
            m.letters += word.chars().filter(|c| c.is_alphabetic()).count();
            m.characters += word.chars().filter(|c| c.is_alphanumeric()).count();
            let syl = count_syllables(word)?;
            m.syllables += syl;
            if syl >= 3 {
                m.polysyllables += 1;
            }
        }
        grade_indices(&m)
    };

    let summary = side_grades(&pair.summary_words)?;
    let original = side_grades(&pair.original_words)?;
    Ok((original.ari - summary.ari, original.fk - summary.fk))
}
