//! Data model for summary-set corpora: one original contract snippet paired
//! with up to three candidate summaries and their quality annotations.
//!
//! The canonical on-disk form is a UTF-8 JSON array of sets; see
//! [`load_corpus`] / [`save_corpus`]. Site dumps from the two supported
//! sources are normalized into the same model by the [`adapters`].

mod adapters;
mod filters;

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use filters::{
    apply_quality_filters, corpus_counts, detect_templatic, normalize_for_match, templatic_key,
    CorpusCounts, FilterAssignment, FilterReport,
};

/// Site a summary set was collected from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Site {
    Tldrlegal,
    Tosdr,
    Other,
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Site::Tldrlegal => "tldrlegal",
            Site::Tosdr => "tosdr",
            Site::Other => "other",
        };
        f.write_str(s)
    }
}

/// Provenance of one summary set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceMeta {
    pub company: String,
    pub document_title: String,
    #[serde(default)]
    pub document_date: Option<String>,
    #[serde(default)]
    pub url: Option<String>,
    pub site: Site,
}

/// Review status of a candidate summary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateStatus {
    Accepted,
    Rejected,
    Unreviewed,
}

/// Why a candidate summary was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectReason {
    Repetition,
    ExactQuote,
    Opinionated,
    TopicOnly,
    LongerThanOriginal,
}

impl RejectReason {
    pub const ALL: [RejectReason; 5] = [
        RejectReason::Repetition,
        RejectReason::ExactQuote,
        RejectReason::Opinionated,
        RejectReason::TopicOnly,
        RejectReason::LongerThanOriginal,
    ];

    /// Reasons the mechanical filters may assign. Opinionated and topic-only
    /// judgments are always manual annotations.
    pub fn is_mechanical(self) -> bool {
        matches!(
            self,
            RejectReason::Repetition | RejectReason::ExactQuote | RejectReason::LongerThanOriginal
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::Repetition => "repetition",
            RejectReason::ExactQuote => "exact_quote",
            RejectReason::Opinionated => "opinionated",
            RejectReason::TopicOnly => "topic_only",
            RejectReason::LongerThanOriginal => "longer_than_original",
        }
    }
}

/// One human-written candidate summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSummary {
    pub text: String,
    pub status: CandidateStatus,
    #[serde(default)]
    pub reject_reason: Option<RejectReason>,
    #[serde(default)]
    pub templatic: bool,
}

impl CandidateSummary {
    pub fn unreviewed(text: impl Into<String>) -> Self {
        CandidateSummary {
            text: text.into(),
            status: CandidateStatus::Unreviewed,
            reject_reason: None,
            templatic: false,
        }
    }

    pub fn accepted(text: impl Into<String>) -> Self {
        CandidateSummary {
            text: text.into(),
            status: CandidateStatus::Accepted,
            reject_reason: None,
            templatic: false,
        }
    }
}

/// One original text plus its candidate summaries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummarySet {
    pub uid: String,
    pub source: SourceMeta,
    pub original_text: String,
    pub candidates: Vec<CandidateSummary>,
    #[serde(default)]
    pub best_index: Option<usize>,
}

impl SummarySet {
    /// The designated best summary, when present.
    pub fn best(&self) -> Option<&CandidateSummary> {
        self.best_index.and_then(|i| self.candidates.get(i))
    }
}

/// An ordered collection of summary sets with unique uids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub name: String,
    pub sets: Vec<SummarySet>,
}

impl Corpus {
    pub fn new(name: impl Into<String>, sets: Vec<SummarySet>) -> Self {
        Corpus {
            name: name.into(),
            sets,
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Sets that carry a designated best summary.
    pub fn scorable_sets(&self) -> impl Iterator<Item = &SummarySet> {
        self.sets.iter().filter(|s| s.best().is_some())
    }

    /// A sub-corpus containing only sets from `site`, preserving order.
    pub fn filter_site(&self, site: Site) -> Corpus {
        Corpus {
            name: format!("{}:{site}", self.name),
            sets: self
                .sets
                .iter()
                .filter(|s| s.source.site == site)
                .cloned()
                .collect(),
        }
    }
}

/// File formats accepted by [`load_corpus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    /// The canonical JSON array of summary sets.
    Canonical,
    /// A TLDRLegal API dump; see [`adapters`] for the field mapping.
    TldrlegalDump,
    /// A TOS;DR API dump; see [`adapters`] for the field mapping.
    TosdrDump,
}

impl std::str::FromStr for CorpusFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(CorpusFormat::Canonical),
            "tldrlegal_dump" | "tldrlegal" => Ok(CorpusFormat::TldrlegalDump),
            "tosdr_dump" | "tosdr" => Ok(CorpusFormat::TosdrDump),
            other => Err(Error::InvalidArgument(format!(
                "unknown corpus format `{other}` (expected canonical, tldrlegal_dump, or tosdr_dump)"
            ))),
        }
    }
}

impl fmt::Display for CorpusFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CorpusFormat::Canonical => "canonical",
            CorpusFormat::TldrlegalDump => "tldrlegal_dump",
            CorpusFormat::TosdrDump => "tosdr_dump",
        };
        f.write_str(s)
    }
}

/// Diagnostics from an ingest run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IngestStats {
    /// Records seen in the input file.
    pub records: usize,
    /// Records skipped for missing original text or missing summaries.
    pub skipped: usize,
}

/// Loads a corpus file, validating every invariant of the canonical schema.
pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<Corpus> {
    Ok(load_corpus_report(path, format)?.0)
}

/// Like [`load_corpus`], also returning ingest diagnostics. Adapter formats
/// skip records that lack an original text or any summary; the skip count is
/// both logged and returned.
pub fn load_corpus_report(path: &Path, format: CorpusFormat) -> Result<(Corpus, IngestStats)> {
    let raw = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "corpus".to_string());

    let (sets, stats) = match format {
        CorpusFormat::Canonical => {
            let sets = parse_canonical(&raw)?;
            let n = sets.len();
            (
                sets,
                IngestStats {
                    records: n,
                    skipped: 0,
                },
            )
        }
        CorpusFormat::TldrlegalDump => adapters::parse_tldrlegal(&raw)?,
        CorpusFormat::TosdrDump => adapters::parse_tosdr(&raw)?,
    };

    if stats.skipped > 0 {
        log::warn!(
            "{}: skipped {} of {} records (missing original text or summaries)",
            path.display(),
            stats.skipped,
            stats.records
        );
    }

    let corpus = Corpus::new(name, sets);
    validate_corpus(&corpus)?;
    Ok((corpus, stats))
}

/// Writes a corpus in canonical form. Output is deterministic; loading it
/// back yields an identical corpus.
pub fn save_corpus(path: &Path, corpus: &Corpus) -> Result<()> {
    let json = serde_json::to_string_pretty(&corpus.sets)
        .map_err(|e| Error::parse("canonical", e))?;
    fs::write(path, json + "\n").map_err(|e| Error::io(path, e))
}

fn parse_canonical(raw: &str) -> Result<Vec<SummarySet>> {
    let values: Vec<serde_json::Value> =
        serde_json::from_str(raw).map_err(|e| Error::parse("canonical", e))?;

    let mut sets = Vec::with_capacity(values.len());
    for value in values {
        let uid = value
            .get("uid")
            .and_then(|v| v.as_str())
            .unwrap_or("<missing uid>")
            .to_string();
        let set: SummarySet = serde_json::from_value(value)
            .map_err(|e| Error::schema(uid.clone(), field_of(&e), e))?;
        sets.push(set);
    }
    Ok(sets)
}

fn field_of(err: &serde_json::Error) -> String {
    // serde_json reports the offending key in its message; good enough to
    // name the field in diagnostics.
    let msg = err.to_string();
    msg.split('`')
        .nth(1)
        .map(|s| s.to_string())
        .unwrap_or_else(|| "<unknown>".to_string())
}

/// Checks every invariant of the data model, returning a schema error naming
/// the uid and field of the first violation.
pub fn validate_corpus(corpus: &Corpus) -> Result<()> {
    let mut seen: HashSet<&str> = HashSet::new();
    for set in &corpus.sets {
        if set.uid.trim().is_empty() {
            return Err(Error::schema(&set.uid, "uid", "must be non-empty"));
        }
        if !seen.insert(set.uid.as_str()) {
            return Err(Error::schema(&set.uid, "uid", "duplicate uid"));
        }
        if set.source.company.trim().is_empty() {
            return Err(Error::schema(&set.uid, "source.company", "must be non-empty"));
        }
        if set.source.document_title.trim().is_empty() {
            return Err(Error::schema(
                &set.uid,
                "source.document_title",
                "must be non-empty",
            ));
        }
        if let Some(date) = &set.source.document_date {
            if !is_iso_date(date) {
                return Err(Error::schema(
                    &set.uid,
                    "source.document_date",
                    format!("`{date}` is not an ISO-8601 date"),
                ));
            }
        }
        if set.original_text.trim().is_empty() {
            return Err(Error::schema(&set.uid, "original_text", "must be non-empty"));
        }
        if set.candidates.is_empty() || set.candidates.len() > 3 {
            return Err(Error::schema(
                &set.uid,
                "candidates",
                format!("expected 1..=3 candidates, got {}", set.candidates.len()),
            ));
        }
        for (i, cand) in set.candidates.iter().enumerate() {
            if cand.text.trim().is_empty() {
                return Err(Error::schema(
                    &set.uid,
                    format!("candidates[{i}].text"),
                    "must be non-empty",
                ));
            }
            let rejected = cand.status == CandidateStatus::Rejected;
            if rejected != cand.reject_reason.is_some() {
                return Err(Error::schema(
                    &set.uid,
                    format!("candidates[{i}].reject_reason"),
                    "present iff status is rejected",
                ));
            }
        }
        if let Some(best) = set.best_index {
            let Some(cand) = set.candidates.get(best) else {
                return Err(Error::schema(
                    &set.uid,
                    "best_index",
                    format!("{best} out of range"),
                ));
            };
            if cand.status != CandidateStatus::Accepted {
                return Err(Error::schema(
                    &set.uid,
                    "best_index",
                    "must point at an accepted candidate",
                ));
            }
        }
    }
    Ok(())
}

fn is_iso_date(s: &str) -> bool {
    let bytes = s.as_bytes();
    bytes.len() == 10
        && bytes[4] == b'-'
        && bytes[7] == b'-'
        && [0, 1, 2, 3, 5, 6, 8, 9]
            .iter()
            .all(|&i| bytes[i].is_ascii_digit())
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    pub fn meta(company: &str, site: Site) -> SourceMeta {
        SourceMeta {
            company: company.to_string(),
            document_title: format!("{company} Terms of Service"),
            document_date: None,
            url: None,
            site,
        }
    }

    pub fn set_with(uid: &str, company: &str, original: &str, summaries: &[&str]) -> SummarySet {
        SummarySet {
            uid: uid.to_string(),
            source: meta(company, Site::Tosdr),
            original_text: original.to_string(),
            candidates: summaries
                .iter()
                .map(|s| CandidateSummary::unreviewed(*s))
                .collect(),
            best_index: None,
        }
    }

    pub fn scored_set(uid: &str, company: &str, original: &str, best: &str) -> SummarySet {
        SummarySet {
            uid: uid.to_string(),
            source: meta(company, Site::Tosdr),
            original_text: original.to_string(),
            candidates: vec![CandidateSummary::accepted(best)],
            best_index: Some(0),
        }
    }
}
