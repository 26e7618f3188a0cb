//! Evaluation toolkit for sign language production: skeleton pose parsing and
//! normalization, pose metrics (DTW-MJE, Total Distance), back-translation text metrics
//! (BLEU-1..4, CHRF, ROUGE-L, WER), Pareto-dominance leaderboards and an evaluation
//! harness.
//!
//! Pose and ranking code is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the scalar type for the common cases. The harness works in `f64`.

pub mod harness;
pub mod metrics;
pub mod pose;
pub mod ranking;
pub mod scalar;
pub mod synth;
pub mod text;

pub use scalar::Scalar;

pub type Point3F64 = pose::Point3<f64>;
pub type Point3F32 = pose::Point3<f32>;
pub type FrameF64 = pose::Frame<f64>;
pub type FrameF32 = pose::Frame<f32>;
pub type PoseSequenceF64 = pose::PoseSequence<f64>;
pub type PoseSequenceF32 = pose::PoseSequence<f32>;
pub type AlignmentPathF64 = metrics::AlignmentPath<f64>;
pub type PoseScoreF64 = metrics::PoseScore<f64>;
pub type ScoreVectorF64 = ranking::ScoreVector<f64>;
pub type ObjectiveVectorF64 = ranking::ObjectiveVector<f64>;
