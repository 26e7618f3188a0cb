//! Submission validation, end-to-end evaluation runs and report rendering.

mod error;
mod evaluate;
mod inputs;
mod report;
mod rules;
mod translate;
mod validate;
mod write;

pub use error::HarnessError;
pub use evaluate::{evaluate, EvaluationConfig, DEFAULT_TOP_ERRORS};
pub use inputs::{load_corpus, load_layout, load_pose, sha256_hex, LoadedManifest};
pub use report::{
    format_metric, render_report, Diagnostics, ErrorWord, InputDigest, MetricReport, PoseSection, ReportFormat,
    SentenceRow, TextSection, ToolInfo, WerSummary,
};
pub use rules::{quota_violations, Phase, PhaseRules, SubmissionLog, SubmissionRecord};
pub use translate::run_translation_hook;
pub use validate::{validate_submission, SubmissionReport, SubmissionViolation};
pub use write::{load_scores, write_corpus, write_sentence_file};
