use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid {format} file: {detail}")]
    Parse { format: String, detail: String },

    /// A record in a canonical corpus file violated the schema.
    #[error("schema error in set `{uid}`, field `{field}`: {detail}")]
    Schema {
        uid: String,
        field: String,
        detail: String,
    },

    #[error("input text is empty")]
    EmptyInput,

    /// Every token of the document was removed by the configured
    /// preprocessing stages. Recoverable: callers typically skip the document.
    #[error("document is empty after preprocessing")]
    DegenerateDocument,

    #[error("corpus has no scorable sets")]
    EmptyCorpus,

    /// A statistic has no defined value on this input, e.g. an n-gram order
    /// larger than every summary.
    #[error("statistic undefined: {0}")]
    Undefined(String),

    /// Not enough vocabulary to build the requested word-set pair.
    #[error("insufficient vocabulary on the {side} side: need {needed}, have {available}")]
    InsufficientVocabulary {
        side: &'static str,
        needed: usize,
        available: usize,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(format: impl Into<String>, detail: impl ToString) -> Self {
        Error::Parse {
            format: format.into(),
            detail: detail.to_string(),
        }
    }

    pub(crate) fn schema(
        uid: impl Into<String>,
        field: impl Into<String>,
        detail: impl ToString,
    ) -> Self {
        Error::Schema {
            uid: uid.into(),
            field: field.into(),
            detail: detail.to_string(),
        }
    }
}
