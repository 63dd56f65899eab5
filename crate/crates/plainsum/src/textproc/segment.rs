//! Rule-based sentence segmentation tuned for contract text.

use std::sync::OnceLock;

use crate::{Error, Result};

/// Byte range of one sentence. Spans partition the input text; trailing
/// inter-sentence whitespace belongs to the preceding span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SentenceSpan {
    pub start: usize,
    pub end: usize,
}

impl SentenceSpan {
    /// Trimmed sentence text.
    pub fn text<'a>(&self, source: &'a str) -> &'a str {
        source[self.start..self.end].trim()
    }
}

/// Abbreviations that do not end a sentence, lowercase, without the final
/// period. Dotted entries ("e.g") match their internal periods as typed.
const ABBREVIATIONS: &[&str] = &[
    "mr", "mrs", "ms", "dr", "prof", "jr", "sr", "st", "no", "nos", "v", "vs", "etc", "inc",
    "ltd", "llc", "corp", "co", "dept", "div", "sec", "art", "para", "fig", "cf", "al", "approx",
    "est", "seq", "supp", "rev", "ed", "vol", "pp", "e.g", "i.e", "u.s", "u.k", "a.m", "p.m",
    "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec",
];

fn abbreviation_set() -> &'static std::collections::HashSet<&'static str> {
    static SET: OnceLock<std::collections::HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| ABBREVIATIONS.iter().copied().collect())
}

/// Splits `text` into sentence spans.
///
/// Boundaries sit at sentence-final `.`, `!`, or `?` (plus any closing quotes
/// or brackets) and at blank lines. A period is not a boundary when it
/// follows a known abbreviation or a single letter (initials, enumerators
/// like "(a)."), or when it sits inside a number ("5.50").
pub fn segment_sentences(text: &str) -> Result<Vec<SentenceSpan>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }

    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let n = chars.len();
    let mut spans = Vec::new();
    let mut sentence_start = 0usize;
    let mut i = 0usize;

    while i < n {
        let (byte_idx, ch) = chars[i];

        // Blank line: paragraph break acts as a boundary.
        if ch == '\n' {
            let mut j = i + 1;
            let mut saw_second_newline = false;
            while j < n && chars[j].1.is_whitespace() {
                if chars[j].1 == '\n' {
                    saw_second_newline = true;
                }
                j += 1;
            }
            if saw_second_newline && j < n {
                let end = chars[j].0;
                if !text[sentence_start..end].trim().is_empty() {
                    spans.push(SentenceSpan {
                        start: sentence_start,
                        end,
                    });
                }
                sentence_start = end;
                i = j;
                continue;
            }
        }

        if ch == '.' || ch == '!' || ch == '?' {
            // Consume the whole terminator run plus closing marks.
            let mut j = i + 1;
            while j < n && matches!(chars[j].1, '.' | '!' | '?') {
                j += 1;
            }
            let single_period = ch == '.' && j == i + 1;
            while j < n && matches!(chars[j].1, '"' | '\'' | '”' | '’' | ')' | ']') {
                j += 1;
            }

            let followed_by_space = j >= n || chars[j].1.is_whitespace();
            let boundary = if !followed_by_space {
                false
            } else if single_period {
                !period_is_protected(text, byte_idx)
            } else {
                true
            };

            if boundary {
                // Attach following whitespace to this span so spans partition
                // the text.
                while j < n && chars[j].1.is_whitespace() {
                    j += 1;
                }
                let end = if j < n { chars[j].0 } else { text.len() };
                spans.push(SentenceSpan {
                    start: sentence_start,
                    end,
                });
                sentence_start = end;
                i = j;
                continue;
            }
            i = j;
            continue;
        }

        i += 1;
    }

    if sentence_start < text.len() && !text[sentence_start..].trim().is_empty() {
        spans.push(SentenceSpan {
            start: sentence_start,
            end: text.len(),
        });
    }

    Ok(spans)
}

/// Decides whether the period at `period_idx` is protected (not a boundary)
/// because of the word immediately before it.
fn period_is_protected(text: &str, period_idx: usize) -> bool {
    // Walk back over the preceding word, allowing internal periods so dotted
    // abbreviations ("e.g.", "U.S.") are captured whole.
    let before = &text[..period_idx];
    let word_start = before
        .rfind(|c: char| c.is_whitespace() || matches!(c, '(' | ')' | '[' | ']' | '"' | '“' | '‘'))
        .map(|p| p + before[p..].chars().next().map_or(1, char::len_utf8))
        .unwrap_or(0);
    let word = &before[word_start..];

    if word.is_empty() {
        // Bare period with nothing before it; treat as a boundary.
        return false;
    }

    // Initials and enumerators: a single letter ("a.") or a dotted run of
    // single letters ("U.S.", "A.A.A.").
    let parts: Vec<&str> = word.split('.').filter(|p| !p.is_empty()).collect();
    if !parts.is_empty()
        && parts
            .iter()
            .all(|p| p.chars().count() == 1 && p.chars().all(char::is_alphabetic))
    {
        return true;
    }

    let lowered = word.trim_matches(|c: char| !c.is_alphanumeric() && c != '.');
    let lowered = lowered.trim_end_matches('.').to_lowercase();
    abbreviation_set().contains(lowered.as_str())
}
