use std::collections::HashSet;
use std::path::Path;

use chrono::{DateTime, Utc};
use serde::Serialize;

use super::error::HarnessError;
use super::inputs::{load_pose, LoadedManifest};
use super::rules::{quota_violations, PhaseRules, SubmissionLog, SubmissionRecord};
use crate::pose::KeypointLayout;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubmissionViolation {
    MissingPrediction { id: String },
    UnexpectedPrediction { id: String },
    PoseFile { id: String, message: String },
    Quota { message: String },
}

impl std::fmt::Display for SubmissionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::MissingPrediction { id } => write!(f, "missing prediction for `{id}`"),
            Self::UnexpectedPrediction { id } => write!(f, "prediction `{id}` has no reference"),
            Self::PoseFile { id, message } => write!(f, "`{id}`: {message}"),
            Self::Quota { message } => write!(f, "quota exceeded: {message}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubmissionReport {
    pub violations: Vec<SubmissionViolation>,
    /// SHA-256 of the prediction manifest, used as the history entry.
    pub digest: String,
    pub record: SubmissionRecord,
}

impl SubmissionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a submission against the references and the phase quota. Violations are
/// collected, not raised; only unreadable manifests are hard errors. `history` is not
/// modified; recording an accepted submission is up to the caller.
pub fn validate_submission(
    pred_manifest: &Path,
    ref_manifest: &Path,
    layout: &KeypointLayout,
    rules: &PhaseRules,
    history: &SubmissionLog,
    now: DateTime<Utc>,
) -> Result<SubmissionReport, HarnessError> {
    let preds = LoadedManifest::load(pred_manifest)?;
    let refs = LoadedManifest::load(ref_manifest)?;
    let mut violations = Vec::new();

    let pred_ids: HashSet<&str> = preds.manifest.ids().collect();
    let ref_ids: HashSet<&str> = refs.manifest.ids().collect();
    for id in refs.manifest.ids().filter(|id| !pred_ids.contains(id)) {
        violations.push(SubmissionViolation::MissingPrediction { id: id.to_string() });
    }
    for id in preds.manifest.ids().filter(|id| !ref_ids.contains(id)) {
        violations.push(SubmissionViolation::UnexpectedPrediction { id: id.to_string() });
    }
    for (id, path) in preds.pose_paths().into_iter().chain(refs.pose_paths()) {
        if let Err(e) = load_pose(&path, &id, layout) {
            violations.push(SubmissionViolation::PoseFile {
                id,
                message: e.to_string(),
            });
        }
    }
    violations.extend(
        quota_violations(rules, history, now)
            .into_iter()
            .map(|message| SubmissionViolation::Quota { message }),
    );

    let digest = preds.digest();
    Ok(SubmissionReport {
        violations,
        record: SubmissionRecord {
            timestamp: now,
            phase: rules.phase,
            digest: digest.clone(),
        },
        digest,
    })
}
