//! Mechanical quality filters and templatic-summary detection.
//!
//! Three rejection rules are automated: exact quotes of the original,
//! duplicates of an earlier summary in the same set, and summaries longer
//! than their original. Opinionated and topic-only judgments are manual
//! annotations and are never assigned here.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use regex::RegexBuilder;

use super::{CandidateStatus, Corpus, RejectReason, SummarySet};
use crate::textproc::word_count;

/// Text normalization used by the duplicate and exact-quote checks:
/// lowercase, strip punctuation surrounding each token, collapse whitespace.
pub fn normalize_for_match(text: &str) -> String {
    text.to_lowercase()
        .split_whitespace()
        .map(|tok| tok.trim_matches(|c: char| !c.is_alphanumeric()))
        .filter(|tok| !tok.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Normalized candidate text with every occurrence of the set's company name
/// replaced by a placeholder token. Two candidates from different sets that
/// share a key are templatic.
///
/// Aliases are matched case-insensitively on word boundaries, longest first,
/// so multi-word names win over their fragments.
pub fn templatic_key(set: &SummarySet, candidate_index: usize) -> String {
    let text = &set.candidates[candidate_index].text;
    let mut aliases: Vec<&str> = vec![set.source.company.as_str()];
    aliases.sort_by_key(|a| std::cmp::Reverse(a.len()));

    let mut replaced = text.clone();
    for alias in aliases {
        let alias = alias.trim();
        if alias.is_empty() {
            continue;
        }
        let pattern = format!(r"\b{}\b", regex::escape(alias));
        if let Ok(re) = RegexBuilder::new(&pattern).case_insensitive(true).build() {
            replaced = re.replace_all(&replaced, "entityplaceholder").into_owned();
        }
    }
    normalize_for_match(&replaced)
}

/// One mechanically rejected candidate in the post-filter state.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FilterAssignment {
    pub uid: String,
    pub candidate: usize,
    pub reason: RejectReason,
}

/// Post-filter annotation state: counts of rejected candidates per reason
/// (manual reasons included) and the full list of mechanical rejections.
/// Running the filters again on their own output yields an identical report.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
pub struct FilterReport {
    pub reason_counts: BTreeMap<RejectReason, usize>,
    pub assignments: Vec<FilterAssignment>,
    pub accepted: usize,
    pub unreviewed: usize,
}

/// Applies the mechanical rejection rules to every unreviewed candidate.
///
/// Rules, in order: a duplicate of an earlier candidate in the same set is a
/// repetition (the later index is marked); a candidate equal to the original
/// text is an exact quote; a candidate with more words than its original is
/// longer-than-original. Equality is up to [`normalize_for_match`].
/// Previously reviewed candidates are never reassigned.
pub fn apply_quality_filters(corpus: &Corpus) -> (Corpus, FilterReport) {
    let mut updated = corpus.clone();

    for set in &mut updated.sets {
        let normalized: Vec<String> = set
            .candidates
            .iter()
            .map(|c| normalize_for_match(&c.text))
            .collect();
        let original_norm = normalize_for_match(&set.original_text);
        let original_words = word_count(&set.original_text);

        for idx in 0..set.candidates.len() {
            if set.candidates[idx].status != CandidateStatus::Unreviewed {
                continue;
            }
            let reason = if (0..idx).any(|j| normalized[j] == normalized[idx]) {
                Some(RejectReason::Repetition)
            } else if normalized[idx] == original_norm {
                Some(RejectReason::ExactQuote)
            } else if word_count(&set.candidates[idx].text) > original_words {
                Some(RejectReason::LongerThanOriginal)
            } else {
                None
            };
            if let Some(reason) = reason {
                set.candidates[idx].status = CandidateStatus::Rejected;
                set.candidates[idx].reject_reason = Some(reason);
            }
        }
    }

    let report = filter_report(&updated);
    (updated, report)
}

fn filter_report(corpus: &Corpus) -> FilterReport {
    let mut report = FilterReport::default();
    for set in &corpus.sets {
        for (idx, cand) in set.candidates.iter().enumerate() {
            match cand.status {
                CandidateStatus::Accepted => report.accepted += 1,
                CandidateStatus::Unreviewed => report.unreviewed += 1,
                CandidateStatus::Rejected => {
                    let reason = cand.reject_reason.expect("validated: reason present");
                    *report.reason_counts.entry(reason).or_insert(0) += 1;
                    if reason.is_mechanical() {
                        report.assignments.push(FilterAssignment {
                            uid: set.uid.clone(),
                            candidate: idx,
                            reason,
                        });
                    }
                }
            }
        }
    }
    report
}

/// Flags candidates whose text, with the owning set's company name replaced
/// by a placeholder, equals another set's candidate under the same
/// normalization. Returns the updated corpus and the flagged positions.
pub fn detect_templatic(corpus: &Corpus) -> (Corpus, BTreeSet<(String, usize)>) {
    let mut groups: HashMap<String, Vec<(usize, usize)>> = HashMap::new();
    for (si, set) in corpus.sets.iter().enumerate() {
        for ci in 0..set.candidates.len() {
            groups
                .entry(templatic_key(set, ci))
                .or_default()
                .push((si, ci));
        }
    }

    let mut updated = corpus.clone();
    let mut flagged = BTreeSet::new();
    for positions in groups.values() {
        let distinct_sets: BTreeSet<usize> = positions.iter().map(|(si, _)| *si).collect();
        let templatic = distinct_sets.len() >= 2;
        for &(si, ci) in positions {
            updated.sets[si].candidates[ci].templatic = templatic;
            if templatic {
                flagged.insert((updated.sets[si].uid.clone(), ci));
            }
        }
    }
    (updated, flagged)
}

/// Aggregate counts over a corpus's annotations.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct CorpusCounts {
    pub sets: usize,
    pub documents: usize,
    pub companies: usize,
    pub candidates: usize,
    pub accepted: usize,
    pub unreviewed: usize,
    pub rejected: BTreeMap<RejectReason, usize>,
    pub templatic: usize,
    /// Sets with at least one accepted candidate.
    pub sets_with_accepted: usize,
    /// Best summaries flagged templatic.
    pub templatic_best: usize,
    /// Distinct templatic keys among templatic best summaries.
    pub unique_templatic_best: usize,
}

/// Pure aggregation over the corpus annotations.
pub fn corpus_counts(corpus: &Corpus) -> CorpusCounts {
    let mut counts = CorpusCounts {
        sets: corpus.sets.len(),
        ..CorpusCounts::default()
    };

    let mut documents = BTreeSet::new();
    let mut companies = BTreeSet::new();
    let mut templatic_best_keys = BTreeSet::new();

    for set in &corpus.sets {
        companies.insert(set.source.company.to_lowercase());
        documents.insert((
            set.source.company.to_lowercase(),
            set.source.document_title.to_lowercase(),
        ));

        let mut any_accepted = false;
        for (idx, cand) in set.candidates.iter().enumerate() {
            counts.candidates += 1;
            if cand.templatic {
                counts.templatic += 1;
            }
            match cand.status {
                CandidateStatus::Accepted => {
                    counts.accepted += 1;
                    any_accepted = true;
                }
                CandidateStatus::Unreviewed => counts.unreviewed += 1,
                CandidateStatus::Rejected => {
                    if let Some(reason) = cand.reject_reason {
                        *counts.rejected.entry(reason).or_insert(0) += 1;
                    }
                }
            }
            if Some(idx) == set.best_index && cand.templatic {
                counts.templatic_best += 1;
                templatic_best_keys.insert(templatic_key(set, idx));
            }
        }
        if any_accepted {
            counts.sets_with_accepted += 1;
        }
    }

    counts.documents = documents.len();
    counts.companies = companies.len();
    counts.unique_templatic_best = templatic_best_keys.len();
    counts
}

#[cfg(test)]
mod tests {
    use super::super::testutil::*;
    use super::super::{CandidateStatus, CandidateSummary, Corpus, RejectReason};
    use super::*;

    #[test]
    fn normalization_strips_case_whitespace_and_edge_punctuation() {
        assert_eq!(
            normalize_for_match("  Third parties   may be involved, in operating the service. "),
            "third parties may be involved in operating the service"
        );
    }

    #[test]
    fn duplicate_summary_marks_later_candidate_as_repetition() {
        let set = set_with(
            "reddit_p1",
            "Reddit",
            "We may share information with vendors, consultants, and other service providers.",
            &[
                "Reddit shares data with third parties",
                "Third parties may be involved in operating the service",
                "Third parties may be involved in operating the service",
            ],
        );
        let corpus = Corpus::new("c", vec![set]);
        let (updated, report) = apply_quality_filters(&corpus);
        let cands = &updated.sets[0].candidates;
        assert_eq!(cands[1].status, CandidateStatus::Unreviewed);
        assert_eq!(cands[2].status, CandidateStatus::Rejected);
        assert_eq!(cands[2].reject_reason, Some(RejectReason::Repetition));
        assert_eq!(report.reason_counts[&RejectReason::Repetition], 1);
    }

    #[test]
    fn exact_quote_detected_up_to_normalization() {
        let set = set_with(
            "q1",
            "Apple",
            "Any feedback you provide at this site shall be deemed to be non-confidential.",
            &["Any feedback you provide at this site shall be deemed to be non-confidential."],
        );
        let (updated, report) = apply_quality_filters(&Corpus::new("c", vec![set]));
        assert_eq!(
            updated.sets[0].candidates[0].reject_reason,
            Some(RejectReason::ExactQuote)
        );
        assert_eq!(report.reason_counts[&RejectReason::ExactQuote], 1);
    }

    #[test]
    fn exact_quote_implies_equal_normalized_word_counts() {
        let original = "Don't blame google.";
        let set = set_with("q2", "Google", original, &["don't  blame GOOGLE"]);
        let (updated, _) = apply_quality_filters(&Corpus::new("c", vec![set]));
        let cand = &updated.sets[0].candidates[0];
        assert_eq!(cand.reject_reason, Some(RejectReason::ExactQuote));
        let cand_words = normalize_for_match(&cand.text).split_whitespace().count();
        let orig_words = normalize_for_match(original).split_whitespace().count();
        assert_eq!(cand_words, orig_words);
    }

    #[test]
    fn longer_than_original_uses_word_counts() {
        let original: String = vec!["word"; 20].join(" ");
        let longer: String = vec!["term"; 30].join(" ");
        let set = set_with("l1", "Acme", &original, &[longer.as_str()]);
        let (updated, _) = apply_quality_filters(&Corpus::new("c", vec![set]));
        assert_eq!(
            updated.sets[0].candidates[0].reject_reason,
            Some(RejectReason::LongerThanOriginal)
        );
    }

    #[test]
    fn reviewed_candidates_are_never_reassigned() {
        let mut set = set_with("r1", "Acme", "The original text here.", &["The original text here."]);
        set.candidates[0].status = CandidateStatus::Rejected;
        set.candidates[0].reject_reason = Some(RejectReason::Opinionated);
        let (updated, report) = apply_quality_filters(&Corpus::new("c", vec![set]));
        assert_eq!(
            updated.sets[0].candidates[0].reject_reason,
            Some(RejectReason::Opinionated)
        );
        assert_eq!(report.reason_counts[&RejectReason::Opinionated], 1);
        assert!(report.assignments.is_empty());
    }

    #[test]
    fn filtering_is_idempotent() {
        let corpus = Corpus::new(
            "c",
            vec![
                set_with(
                    "s1",
                    "Acme",
                    "We collect data. We keep it safe.",
                    &["We collect data. We keep it safe.", "Data is collected", "Data is collected"],
                ),
                set_with("s2", "Globex", "Short original.", &["A much longer candidate summary text."]),
            ],
        );
        let (once, report1) = apply_quality_filters(&corpus);
        let (twice, report2) = apply_quality_filters(&once);
        assert_eq!(once, twice);
        assert_eq!(report1, report2);
    }

    #[test]
    fn templatic_detection_substitutes_company_names() {
        let corpus = Corpus::new(
            "c",
            vec![
                set_with("a", "Acme", "Acme original text one.", &["Acme shares data with third parties"]),
                set_with("b", "Globex", "Globex original text two.", &["Globex shares data with third parties"]),
                set_with("c", "Initech", "Initech original text three.", &["A unique summary about Initech"]),
            ],
        );
        let (updated, flagged) = detect_templatic(&corpus);
        assert!(updated.sets[0].candidates[0].templatic);
        assert!(updated.sets[1].candidates[0].templatic);
        assert!(!updated.sets[2].candidates[0].templatic);
        assert_eq!(flagged.len(), 2);

        // Symmetry: both members of the pair are flagged.
        assert!(flagged.contains(&("a".to_string(), 0)));
        assert!(flagged.contains(&("b".to_string(), 0)));
    }

    #[test]
    fn templatic_needs_two_distinct_sets() {
        let corpus = Corpus::new(
            "c",
            vec![set_with("only", "Acme", "Original.", &["Acme shares data", "Acme shares data"])],
        );
        let (updated, flagged) = detect_templatic(&corpus);
        assert!(flagged.is_empty());
        assert!(!updated.sets[0].candidates[0].templatic);
    }

    #[test]
    fn counts_aggregate_annotations() {
        let mut s1 = scored_set("t1", "Acme", "Original one.", "Accepted summary");
        s1.candidates.push(CandidateSummary {
            text: "Rejected one".into(),
            status: CandidateStatus::Rejected,
            reject_reason: Some(RejectReason::TopicOnly),
            templatic: false,
        });
        let s2 = scored_set("t2", "Acme", "Original two.", "Another accepted");
        let s3 = set_with("t3", "Globex", "Original three.", &["Unreviewed summary"]);
        let counts = corpus_counts(&Corpus::new("c", vec![s1, s2, s3]));
        assert_eq!(counts.sets, 3);
        assert_eq!(counts.companies, 2);
        assert_eq!(counts.documents, 2);
        assert_eq!(counts.candidates, 4);
        assert_eq!(counts.accepted, 2);
        assert_eq!(counts.unreviewed, 1);
        assert_eq!(counts.rejected[&RejectReason::TopicOnly], 1);
        assert_eq!(counts.sets_with_accepted, 2);
    }

    #[test]
    fn empty_corpus_counts_are_zero() {
        let counts = corpus_counts(&Corpus::new("empty", vec![]));
        assert_eq!(counts, CorpusCounts::default());
    }
}
