//! Heuristic syllable counting: vowel-group counting with silent-e and
//! suffix adjustments. Always returns at least one syllable per word.

use crate::{Error, Result};

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Counts syllables in a single word.
///
/// Non-letter characters are ignored; a word with no letters is an error.
/// 'y' counts as a vowel when it follows a consonant ("indemnify", "try").
pub fn count_syllables(word: &str) -> Result<usize> {
    let letters: Vec<char> = word
        .chars()
        .filter(|c| c.is_alphabetic())
        .flat_map(|c| c.to_lowercase())
        .collect();
    if letters.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no letters in word `{word}`"
        )));
    }

    // Count vowel groups, with vocalic 'y'.
    let mut groups = 0usize;
    let mut prev_was_vowel = false;
    for (i, &c) in letters.iter().enumerate() {
        let vocalic = is_vowel(c) || (c == 'y' && i > 0 && !is_vowel(letters[i - 1]));
        if vocalic && !prev_was_vowel {
            groups += 1;
        }
        prev_was_vowel = vocalic;
    }

    let n = letters.len();
    let ends = |suffix: &str| -> bool {
        n >= suffix.len() && letters[n - suffix.len()..].iter().collect::<String>() == suffix
    };

    // Silent final e after a consonant: "use", "service" — but keep
    // consonant-le ("table") and pronounced vowel+e endings ("agree",
    // "issue").
    if ends("e") && groups > 1 && n >= 2 && !is_vowel(letters[n - 2]) && letters[n - 2] != 'y' {
        let consonant_le =
            ends("le") && n >= 3 && !is_vowel(letters[n - 3]) && letters[n - 3] != 'y';
        if consonant_le {
            // "table": the -le carries a syllable.
        } else {
            groups -= 1;
        }
    }

    // Silent e inside derived words: "careful", "likely", "statement".
    for suffix in ["ly", "ful", "ness", "ment", "less", "ship"] {
        if ends(suffix) && n >= suffix.len() + 2 {
            let e_idx = n - suffix.len() - 1;
            let before = letters[e_idx - 1];
            if letters[e_idx] == 'e' && !is_vowel(before) && before != 'y' {
                // Keep consonant-le bases ("settlement").
                let base_le =
                    before == 'l' && e_idx >= 2 && !is_vowel(letters[e_idx - 2]);
                if !base_le && groups > 1 {
                    groups -= 1;
                }
                break;
            }
        }
    }

    // Silent -ed after most consonants: "asked" (1) vs "wanted"/"needed" (2).
    if ends("ed") && groups > 1 && n >= 3 {
        let before = letters[n - 3];
        if !is_vowel(before) && before != 't' && before != 'd' {
            groups -= 1;
        }
    }

    // Silent -es after most consonants: "makes" (1) vs "services" (3),
    // "classes" (2).
    if ends("es") && groups > 1 && n >= 3 {
        let before = letters[n - 3];
        if !is_vowel(before) && !matches!(before, 's' | 'c' | 'x' | 'z' | 'g' | 'l') {
            groups -= 1;
        }
    }

    Ok(groups.max(1))
}
