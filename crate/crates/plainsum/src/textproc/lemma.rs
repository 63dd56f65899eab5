//! Rule-based suffix-stripping lemmatizer with an irregular-forms table.
//!
//! The exceptions table ships as a plain-text data file (`form lemma` per
//! line). The suffix rules handle regular plurals and -ed/-ing inflection,
//! including consonant undoubling ("stopped" -> "stop") and final-e
//! restoration ("stored" -> "store", "included" -> "include").

use std::collections::HashMap;
use std::sync::OnceLock;

const EXCEPTIONS_TXT: &str = include_str!("../../data/lemma_exceptions.txt");

fn exceptions() -> &'static HashMap<&'static str, &'static str> {
    static MAP: OnceLock<HashMap<&'static str, &'static str>> = OnceLock::new();
    MAP.get_or_init(|| {
        EXCEPTIONS_TXT
            .lines()
            .filter_map(|line| {
                let mut parts = line.split_whitespace();
                match (parts.next(), parts.next()) {
                    (Some(form), Some(lemma)) => Some((form, lemma)),
                    _ => None,
                }
            })
            .collect()
    })
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn has_vowel(s: &str) -> bool {
    s.chars().any(is_vowel)
}

fn vowel_groups(s: &str) -> usize {
    let mut groups = 0;
    let mut in_group = false;
    for c in s.chars() {
        if is_vowel(c) {
            if !in_group {
                groups += 1;
            }
            in_group = true;
        } else {
            in_group = false;
        }
    }
    groups
}

/// Lemmatizes a single lowercase word. Unknown or unsuffixed words are
/// returned unchanged; the minimum output length guards keep short function
/// words intact.
pub fn lemmatize(word: &str) -> String {
    if let Some(lemma) = exceptions().get(word) {
        return (*lemma).to_string();
    }
    let len = word.chars().count();
    if len < 3 || !word.chars().all(|c| c.is_alphabetic()) {
        return word.to_string();
    }

    // Plural nouns / 3rd-person verbs.
    if word.ends_with("ies") && len >= 5 {
        return format!("{}y", &word[..word.len() - 3]);
    }
    if word.ends_with("ies") && len == 4 {
        return word[..word.len() - 1].to_string(); // ties -> tie
    }
    if word.ends_with("sses") || word.ends_with("zzes") {
        return word[..word.len() - 2].to_string(); // classes -> class
    }
    if word.ends_with("ses") || word.ends_with("zes") {
        return word[..word.len() - 1].to_string(); // houses -> house, sizes -> size
    }
    if word.ends_with("ches") || word.ends_with("shes") || word.ends_with("xes") {
        return word[..word.len() - 2].to_string(); // watches -> watch
    }
    if word.ends_with("oes") && len >= 4 {
        return word[..word.len() - 2].to_string(); // goes -> go
    }
    if word.ends_with("ss") || word.ends_with("us") || word.ends_with("is") {
        return word.to_string();
    }
    if word.ends_with('s') && len >= 4 {
        return word[..word.len() - 1].to_string();
    }

    // Past tense.
    if word.ends_with("ied") && len >= 5 {
        return format!("{}y", &word[..word.len() - 3]); // applied -> apply
    }
    if word.ends_with("ied") && len == 4 {
        return word[..word.len() - 1].to_string(); // tied -> tie
    }
    if word.ends_with("eed") && len >= 5 {
        return word[..word.len() - 1].to_string(); // agreed -> agree
    }
    if word.ends_with("ed") && len >= 4 {
        let stem = &word[..word.len() - 2];
        if has_vowel(stem) && stem.chars().count() >= 2 {
            return fix_stem(stem);
        }
        return word.to_string();
    }

    // Gerund.
    if word.ends_with("ing") && len >= 5 {
        let stem = &word[..word.len() - 3];
        if has_vowel(stem) && stem.chars().count() >= 2 {
            return fix_stem(stem);
        }
        return word.to_string();
    }

    word.to_string()
}

/// Repairs a stem after -ed/-ing stripping: undoubles a doubled final
/// consonant, otherwise restores a dropped final "e" where the orthography
/// demands one.
fn fix_stem(stem: &str) -> String {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    let last = chars[n - 1];
    let prev = if n >= 2 { Some(chars[n - 2]) } else { None };

    // Doubled consonant from suffixation: stopped -> stop. Words in l/s/z
    // keep their doubles (call, pass, buzz) except multisyllabic -ll stems
    // (controll -> control).
    if Some(last) == prev && !is_vowel(last) {
        let undouble = match last {
            's' | 'z' => false,
            'l' => vowel_groups(stem) >= 2,
            _ => true,
        };
        if undouble {
            return stem[..stem.len() - last.len_utf8()].to_string();
        }
        return stem.to_string();
    }

    let restore = match last {
        'c' | 'u' | 'v' => true,
        's' => prev != Some('s'),
        'z' => prev != Some('z'),
        'g' => prev != Some('n'),
        'l' => prev.is_some_and(|p| !is_vowel(p) && !matches!(p, 'l' | 'r' | 'w')),
        't' => {
            // -ate/-ote/-ute verbs: locate, promote, compute. A vowel before
            // the a/o/u means no restoration (repeat, suit).
            prev.is_some_and(|p| matches!(p, 'a' | 'o' | 'u'))
                && (n < 3 || !is_vowel(chars[n - 3]))
        }
        'd' | 'm' | 'k' => {
            // Single vowel right before the consonant, preceded by a
            // consonant: provide, assume, revoke. Double vowels (need, claim,
            // look) keep their bare stem.
            prev.is_some_and(is_vowel) && (n < 3 || !is_vowel(chars[n - 3]))
        }
        _ => false,
    };
    if restore {
        return format!("{stem}e");
    }

    // Single-syllable CVC stems: store, name, like. Doubling would have
    // happened for short vowels, so a lone final consonant implies an "e".
    if vowel_groups(stem) == 1
        && prev.is_some_and(is_vowel)
        && (n < 3 || !is_vowel(chars[n - 3]))
        && !is_vowel(last)
        && !matches!(last, 'w' | 'x' | 'y' | 'h')
    {
        return format!("{stem}e");
    }

    stem.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_plurals() {
        assert_eq!(lemmatize("services"), "service");
        assert_eq!(lemmatize("terms"), "term");
        assert_eq!(lemmatize("companies"), "company");
        assert_eq!(lemmatize("policies"), "policy");
        assert_eq!(lemmatize("watches"), "watch");
        assert_eq!(lemmatize("boxes"), "box");
        assert_eq!(lemmatize("houses"), "house");
        assert_eq!(lemmatize("classes"), "class");
    }

    #[test]
    fn protected_endings() {
        assert_eq!(lemmatize("business"), "business");
        assert_eq!(lemmatize("access"), "access");
        assert_eq!(lemmatize("status"), "status");
        assert_eq!(lemmatize("basis"), "basis");
        assert_eq!(lemmatize("its"), "its");
        assert_eq!(lemmatize("this"), "this");
    }

    #[test]
    fn past_tense_families() {
        assert_eq!(lemmatize("serviced"), "service");
        assert_eq!(lemmatize("stored"), "store");
        assert_eq!(lemmatize("stopped"), "stop");
        assert_eq!(lemmatize("included"), "include");
        assert_eq!(lemmatize("agreed"), "agree");
        assert_eq!(lemmatize("applied"), "apply");
        assert_eq!(lemmatize("used"), "use");
        assert_eq!(lemmatize("located"), "locate");
        assert_eq!(lemmatize("collected"), "collect");
        assert_eq!(lemmatize("offered"), "offer");
        assert_eq!(lemmatize("limited"), "limit");
    }

    #[test]
    fn gerunds() {
        assert_eq!(lemmatize("using"), "use");
        assert_eq!(lemmatize("running"), "run");
        assert_eq!(lemmatize("agreeing"), "agree");
        assert_eq!(lemmatize("making"), "make");
        assert_eq!(lemmatize("processing"), "process");
        assert_eq!(lemmatize("enabling"), "enable");
        // No vowel left after stripping: not a gerund.
        assert_eq!(lemmatize("thing"), "thing");
        assert_eq!(lemmatize("string"), "string");
    }

    #[test]
    fn irregular_forms_from_table() {
        assert_eq!(lemmatize("was"), "be");
        assert_eq!(lemmatize("been"), "be");
        assert_eq!(lemmatize("has"), "have");
        assert_eq!(lemmatize("children"), "child");
        assert_eq!(lemmatize("made"), "make");
        assert_eq!(lemmatize("paid"), "pay");
        assert_eq!(lemmatize("cookies"), "cookie");
    }

    #[test]
    fn short_words_untouched() {
        assert_eq!(lemmatize("us"), "us");
        assert_eq!(lemmatize("as"), "as");
        assert_eq!(lemmatize("a"), "a");
    }
}
