//! Pose-based metrics: DTW mean joint error and the Total Distance hand-travel ratio.

mod corpus;
mod dtw;
mod travel;

use thiserror::Error;

pub use corpus::{
    corpus_pose_metrics, corpus_pose_metrics_with, duration_ratio, pair_by_id, CorpusPoseScore,
    PoseScore, SequencePoseScore,
};
pub use dtw::{dtw_align, dtw_mje, frame_distance, AlignmentPath};
pub use travel::{
    hand_travel, hand_travel_with, total_distance_ratio, total_distance_ratio_with,
    MIN_REFERENCE_TRAVEL,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricError {
    #[error("keypoint count mismatch: prediction has {pred}, reference has {reference}")]
    PointCountMismatch { pred: usize, reference: usize },
    #[error("reference `{0}` has no hand motion; Total Distance is undefined")]
    ZeroReferenceTravel(String),
    #[error("prediction and reference ids differ (missing predictions: {missing:?}, unexpected predictions: {extra:?})")]
    IdMismatch { missing: Vec<String>, extra: Vec<String> },
    #[error("empty reference corpus")]
    EmptyCorpus,
}
