use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PoseError {
    #[error("header mismatch: {0}")]
    Header(String),
    #[error("frame count mismatch: header declares {expected} frames, found {found}")]
    FrameCount { expected: usize, found: usize },
    #[error("line {line}: expected {expected} values, found {found}")]
    ValueCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: {reason} token `{token}`")]
    Token {
        line: usize,
        column: usize,
        token: String,
        reason: &'static str,
    },
    #[error("sequence `{0}` has no frames")]
    EmptySequence(String),
    #[error("sequence `{id}`: frame {frame} has {found} points, expected {expected}")]
    PointCount {
        id: String,
        frame: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid layout: {0}")]
    Layout(String),
    #[error("degenerate torso frame in sequence `{0}`")]
    DegenerateTorso(String),
    #[error("sequence `{0}`: neck or shoulder keypoint is not finite in frame 0")]
    NonFiniteTorso(String),
    #[error("manifest line {line}: {reason}")]
    Manifest { line: usize, reason: String },
    #[error("duplicate id `{0}` in manifest")]
    DuplicateId(String),
}
