//! Ingestion adapters for the two supported site-dump layouts.
//!
//! Neither site documents a stable schema, so the adapters target the JSON
//! shapes produced by each site's public API at scrape time, described below.
//! Records missing an original text or every summary are skipped and
//! counted.
//!
//! TLDRLegal dump: an array of documents, each with one summary per section:
//!
//! ```json
//! [{"company": "...", "document": "...", "url": "...", "date": "2016-07-01",
//!   "sections": [{"id": "s1", "text": "<original>", "summary": "<summary>"}]}]
//! ```
//!
//! TOS;DR dump: an array of services, each with annotated points carrying
//! one to three community summaries:
//!
//! ```json
//! [{"service": "...", "document": "...", "url": "...",
//!   "points": [{"id": "p1", "quote": "<original>", "summaries": ["...", "..."]}]}]
//! ```

use serde::Deserialize;

use super::{CandidateSummary, IngestStats, Site, SourceMeta, SummarySet};
use crate::{Error, Result};

#[derive(Deserialize)]
struct TldrlegalDocument {
    company: String,
    document: String,
    #[serde(default)]
    url: Option<String>,
    #[serde(default)]
    date: Option<String>,
    #[serde(default)]
    sections: Vec<TldrlegalSection>,
}

#[derive(Deserialize)]
struct TldrlegalSection {
    id: String,
    #[serde(default)]
    text: Option<String>,
    #[serde(default)]
    summary: Option<String>,
}

pub(super) fn parse_tldrlegal(raw: &str) -> Result<(Vec<SummarySet>, IngestStats)> {
    let documents: Vec<TldrlegalDocument> =
        serde_json::from_str(raw).map_err(|e| Error::parse("tldrlegal_dump", e))?;

    let mut sets = Vec::new();
    let mut stats = IngestStats::default();
    for doc in &documents {
        for section in &doc.sections {
            stats.records += 1;
            let (Some(text), Some(summary)) = (&section.text, &section.summary) else {
                stats.skipped += 1;
                continue;
            };
            if text.trim().is_empty() || summary.trim().is_empty() {
                stats.skipped += 1;
                continue;
            }
            sets.push(SummarySet {
                uid: format!("tldrlegal_{}", section.id),
                source: SourceMeta {
                    company: doc.company.clone(),
                    document_title: doc.document.clone(),
                    document_date: doc.date.clone(),
                    url: doc.url.clone(),
                    site: Site::Tldrlegal,
                },
                original_text: text.clone(),
                candidates: vec![CandidateSummary::unreviewed(summary.clone())],
                best_index: None,
            });
        }
    }
    Ok((sets, stats))
}

#[derive(Deserialize)]
struct TosdrService {
    service: String,
    #[serde(default)]
    document: Option<String>,
    #[serde(default)]
    url: Option<String>,
    #[serde(default)]
    points: Vec<TosdrPoint>,
}

#[derive(Deserialize)]
struct TosdrPoint {
    id: String,
    #[serde(default)]
    quote: Option<String>,
    #[serde(default)]
    summaries: Vec<String>,
}

pub(super) fn parse_tosdr(raw: &str) -> Result<(Vec<SummarySet>, IngestStats)> {
    let services: Vec<TosdrService> =
        serde_json::from_str(raw).map_err(|e| Error::parse("tosdr_dump", e))?;

    let mut sets = Vec::new();
    let mut stats = IngestStats::default();
    for service in &services {
        for point in &service.points {
            stats.records += 1;
            let Some(quote) = &point.quote else {
                stats.skipped += 1;
                continue;
            };
            let summaries: Vec<&String> =
                point.summaries.iter().filter(|s| !s.trim().is_empty()).collect();
            if quote.trim().is_empty() || summaries.is_empty() {
                stats.skipped += 1;
                continue;
            }
            sets.push(SummarySet {
                uid: format!("tosdr_{}", point.id),
                source: SourceMeta {
                    company: service.service.clone(),
                    document_title: service
                        .document
                        .clone()
                        .unwrap_or_else(|| format!("{} Terms of Service", service.service)),
                    document_date: None,
                    url: service.url.clone(),
                    site: Site::Tosdr,
                },
                original_text: quote.clone(),
                // The model caps candidates at three; keep the first three.
                candidates: summaries
                    .into_iter()
                    .take(3)
                    .map(|s| CandidateSummary::unreviewed(s.clone()))
                    .collect(),
                best_index: None,
            });
        }
    }
    Ok((sets, stats))
}

#[cfg(test)]
mod tests {
    use super::super::{load_corpus_report, CorpusFormat};
    use std::io::Write;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn tldrlegal_dump_maps_sections_to_sets() {
        let f = write_temp(
            r#"[{"company": "Niantic", "document": "Pokemon GO Terms of Service",
                "url": "https://example.com/tos", "date": "2016-07-01",
                "sections": [
                  {"id": "s1", "text": "By using our Services, you are agreeing to these Terms.",
                   "summary": "By playing this game, you agree to these terms."},
                  {"id": "s2", "summary": "Orphan summary with no original."}
                ]}]"#,
        );
        let (corpus, stats) = load_corpus_report(f.path(), CorpusFormat::TldrlegalDump).unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(stats.records, 2);
        assert_eq!(stats.skipped, 1);
        let set = &corpus.sets[0];
        assert_eq!(set.uid, "tldrlegal_s1");
        assert_eq!(set.source.company, "Niantic");
        assert_eq!(set.candidates.len(), 1);
        assert!(set.best_index.is_none());
    }

    #[test]
    fn tosdr_dump_keeps_up_to_three_summaries() {
        let f = write_temp(
            r#"[{"service": "Reddit", "document": "Privacy Policy",
                "points": [
                  {"id": "p1", "quote": "We may share information with vendors.",
                   "summaries": ["Reddit shares data with third parties",
                                  "Third parties may be involved in operating the service",
                                  "Third parties may be involved in operating the service",
                                  "A fourth summary that exceeds the cap"]},
                  {"id": "p2", "quote": "No summaries here.", "summaries": []}
                ]}]"#,
        );
        let (corpus, stats) = load_corpus_report(f.path(), CorpusFormat::TosdrDump).unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(stats.skipped, 1);
        let set = &corpus.sets[0];
        assert_eq!(set.uid, "tosdr_p1");
        assert_eq!(set.candidates.len(), 3);
    }

    #[test]
    fn empty_dump_is_empty_corpus() {
        let f = write_temp("[]");
        let (corpus, stats) = load_corpus_report(f.path(), CorpusFormat::TosdrDump).unwrap();
        assert!(corpus.is_empty());
        assert_eq!(stats.records, 0);
    }
}
