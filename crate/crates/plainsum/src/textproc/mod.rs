//! Deterministic text normalization shared by every analysis stage:
//! sentence segmentation, tokenization, lemmatization, stopword removal,
//! n-gram extraction, and syllable counting.

mod lemma;
mod segment;
mod syllables;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::{Error, Result};

pub use lemma::lemmatize;
pub use segment::{segment_sentences, SentenceSpan};
pub use syllables::count_syllables;

/// Embedded stopword list, one word per line. Fixed and versioned with the
/// crate so results are reproducible bit-for-bit.
const STOPWORDS_TXT: &str = include_str!("../../data/stopwords.txt");

fn stopword_set() -> &'static std::collections::HashSet<&'static str> {
    static SET: OnceLock<std::collections::HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| {
        STOPWORDS_TXT
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect()
    })
}

/// Returns true if `word` (any case) is on the embedded stopword list.
pub fn is_stopword(word: &str) -> bool {
    stopword_set().contains(word.to_lowercase().as_str())
}

/// Number of entries on the embedded stopword list.
pub fn stopword_count() -> usize {
    stopword_set().len()
}

/// Normalization stages applied by [`preprocess`], in pipeline order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreprocessConfig {
    pub lowercase: bool,
    pub lemmatize: bool,
    pub drop_stopwords: bool,
    pub drop_punct: bool,
}

impl PreprocessConfig {
    /// Every stage enabled. This is the default pipeline configuration.
    pub const fn full() -> Self {
        PreprocessConfig {
            lowercase: true,
            lemmatize: true,
            drop_stopwords: true,
            drop_punct: true,
        }
    }

    /// No stage enabled; tokens keep their surface forms.
    pub const fn raw() -> Self {
        PreprocessConfig {
            lowercase: false,
            lemmatize: false,
            drop_stopwords: false,
            drop_punct: false,
        }
    }

    /// Lowercasing only. Useful for display-oriented normalization.
    pub const fn lowercase_only() -> Self {
        PreprocessConfig {
            lowercase: true,
            lemmatize: false,
            drop_stopwords: false,
            drop_punct: false,
        }
    }
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        Self::full()
    }
}

/// One token of a tokenized document.
///
/// `surface` is the exact source form; `term` is the post-preprocessing form
/// (lowercased and/or lemmatized per the document's config) that all
/// downstream statistics and similarity measures operate on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub term: String,
    pub is_stopword: bool,
    pub is_punct: bool,
}

/// One sentence of a [`TokenizedDocument`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    /// Tokens remaining after the configured drop stages.
    pub tokens: Vec<Token>,
    /// Trimmed source text of the sentence.
    pub raw: String,
    /// Word-token count before any stopword/punctuation dropping. Budget
    /// accounting uses this so that word budgets mean source words.
    pub raw_word_count: usize,
}

impl Sentence {
    /// Post-preprocessing term forms of the content (non-punctuation) tokens.
    pub fn content_terms(&self) -> impl Iterator<Item = &str> {
        self.tokens
            .iter()
            .filter(|t| !t.is_punct)
            .map(|t| t.term.as_str())
    }
}

/// A sentence-segmented, token-level view of a text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedDocument {
    pub sentences: Vec<Sentence>,
    pub config: PreprocessConfig,
}

impl TokenizedDocument {
    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }

    /// Total source words across sentences (pre-drop counts).
    pub fn raw_word_count(&self) -> usize {
        self.sentences.iter().map(|s| s.raw_word_count).sum()
    }

    /// All content-token term forms, flattened in document order.
    pub fn content_terms(&self) -> Vec<&str> {
        self.sentences
            .iter()
            .flat_map(|s| s.content_terms())
            .collect()
    }
}

/// Splits a chunk of text into word and punctuation tokens.
///
/// Words are maximal runs of alphanumeric characters; every other
/// non-whitespace run becomes a punctuation token. Apostrophes therefore
/// split contractions ("don't" -> "don", "'", "t") and hyphens split
/// compounds, matching the tokenization the rest of the pipeline expects.
pub fn tokenize_words(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut current_is_word = false;

    for ch in text.chars() {
        if ch.is_whitespace() {
            if !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
            continue;
        }
        let is_word = ch.is_alphanumeric();
        if !current.is_empty() && is_word != current_is_word {
            tokens.push(std::mem::take(&mut current));
        }
        current.push(ch);
        current_is_word = is_word;
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

fn is_punct_token(token: &str) -> bool {
    !token.chars().any(|c| c.is_alphanumeric())
}

/// Counts source words (non-punctuation tokens) in a raw text.
pub fn word_count(text: &str) -> usize {
    tokenize_words(text)
        .iter()
        .filter(|t| !is_punct_token(t))
        .count()
}

/// Runs the full preprocessing pipeline: segment, tokenize, lowercase,
/// lemmatize, then drop stopwords/punctuation per `config`. Sentences whose
/// tokens are all dropped are removed; if every sentence is removed the
/// document is degenerate and an error is returned.
pub fn preprocess(text: &str, config: PreprocessConfig) -> Result<TokenizedDocument> {
    let spans = segment_sentences(text)?;
    let mut sentences = Vec::with_capacity(spans.len());

    for span in &spans {
        let raw = span.text(text).to_string();
        let surfaces = tokenize_words(&raw);
        let raw_word_count = surfaces.iter().filter(|t| !is_punct_token(t)).count();

        let mut tokens = Vec::with_capacity(surfaces.len());
        for surface in surfaces {
            let punct = is_punct_token(&surface);
            let term = if punct {
                surface.clone()
            } else {
                let lowered = surface.to_lowercase();
                if config.lemmatize {
                    // Lemma lookup is case-insensitive; the lemma itself is
                    // emitted lowercase regardless of the lowercase stage.
                    lemmatize(&lowered)
                } else if config.lowercase {
                    lowered
                } else {
                    surface.clone()
                }
            };
            let stop = !punct && is_stopword(&surface);
            if config.drop_punct && punct {
                continue;
            }
            if config.drop_stopwords && stop {
                continue;
            }
            tokens.push(Token {
                surface,
                term,
                is_stopword: stop,
                is_punct: punct,
            });
        }

        if !tokens.is_empty() {
            sentences.push(Sentence {
                tokens,
                raw,
                raw_word_count,
            });
        }
    }

    if sentences.is_empty() {
        return Err(Error::DegenerateDocument);
    }
    Ok(TokenizedDocument { sentences, config })
}

/// Extracts the multiset of `n`-grams over the post-preprocessing term forms.
///
/// N-grams never cross sentence boundaries. An `n` larger than every sentence
/// yields an empty multiset.
pub fn ngrams(doc: &TokenizedDocument, n: usize) -> Result<HashMap<Vec<String>, usize>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n-gram order must be >= 1".into()));
    }
    let mut grams: HashMap<Vec<String>, usize> = HashMap::new();
    for sentence in &doc.sentences {
        let terms: Vec<&str> = sentence.tokens.iter().map(|t| t.term.as_str()).collect();
        if terms.len() < n {
            continue;
        }
        for window in terms.windows(n) {
            let key: Vec<String> = window.iter().map(|s| s.to_string()).collect();
            *grams.entry(key).or_insert(0) += 1;
        }
    }
    Ok(grams)
}

/// Total number of n-gram tokens (with multiplicity) in a multiset.
pub fn ngram_total(grams: &HashMap<Vec<String>, usize>) -> usize {
    grams.values().sum()
}
