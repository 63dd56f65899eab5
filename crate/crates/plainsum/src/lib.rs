//! Corpus tools and unsupervised extractive baselines for plain-English
//! summaries of contract text.
//!
//! The library covers the whole pipeline:
//!
//! * [`corpus`] — the summary-set data model, ingestion adapters for the two
//!   supported site dumps, and mechanical quality filters.
//! * [`textproc`] — sentence segmentation, tokenization, lemmatization,
//!   stopword removal, n-gram extraction, and syllable counting.
//! * [`stats`] — novel n-gram fractions, compression/length statistics, and
//!   log-odds word associations.
//! * [`readability`] — Flesch-Kincaid, Coleman-Liau, SMOG, and ARI expressed
//!   as reading ages.
//! * [`summarize`] — TextRank, KLSum, Lead-1, Lead-K, and Random-K with a
//!   shared word-budget rule.
//! * [`rouge`] — ROUGE-1/2/L scoring and corpus-level evaluation.
//!
//! The `plainsum` binary exposes all of it as subcommands; see [`cli`].

pub mod cli;
pub mod corpus;
pub mod readability;
pub mod rouge;
pub mod stats;
pub mod summarize;
pub mod textproc;

mod error;

pub use error::{Error, Result};
