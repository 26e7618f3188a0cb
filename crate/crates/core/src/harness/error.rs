use std::path::PathBuf;

use thiserror::Error;

use crate::metrics::MetricError;
use crate::pose::PoseError;
use crate::ranking::RankError;
use crate::synth::SynthError;
use crate::text::TextError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Pose {
        path: PathBuf,
        #[source]
        source: PoseError,
    },
    #[error("{}: invalid sequence: {message}", path.display())]
    InvalidSequence { path: PathBuf, message: String },
    #[error("{}: {source}", path.display())]
    TextFile {
        path: PathBuf,
        #[source]
        source: TextError,
    },
    #[error(transparent)]
    Text(#[from] TextError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Synth(#[from] SynthError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{}: line {line}: {reason}", path.display())]
    History {
        path: PathBuf,
        line: usize,
        reason: String,
    },
    #[error("translation hook failed: {0}")]
    Translate(String),
    #[error("unknown report format `{0}` (expected structured, table or csv)")]
    UnknownFormat(String),
    #[error("report serialization: {0}")]
    Serialize(String),
}

pub(crate) fn read_text(path: &std::path::Path) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}
