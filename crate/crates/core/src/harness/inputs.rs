use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::error::{read_text, HarnessError};
use crate::pose::{
    load_manifest, normalize_sequence, parse_pose_file_with_layout, validate_sequence, KeypointLayout,
    PoseSequence, SubmissionManifest,
};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load_layout(path: Option<&Path>) -> Result<KeypointLayout, HarnessError> {
    match path {
        None => Ok(KeypointLayout::default()),
        Some(p) => KeypointLayout::from_descriptor(&read_text(p)?).map_err(|source| HarnessError::Pose {
            path: p.to_path_buf(),
            source,
        }),
    }
}

/// A manifest with the directory its relative pose paths resolve against.
#[derive(Debug, Clone)]
pub struct LoadedManifest {
    pub path: PathBuf,
    pub text: String,
    pub manifest: SubmissionManifest,
}

impl LoadedManifest {
    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = read_text(path)?;
        let manifest = load_manifest(&text).map_err(|source| HarnessError::Pose {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self {
            path: path.to_path_buf(),
            text,
            manifest,
        })
    }

    pub fn base(&self) -> &Path {
        self.path.parent().unwrap_or(Path::new("."))
    }

    pub fn pose_paths(&self) -> Vec<(String, PathBuf)> {
        self.manifest
            .entries()
            .iter()
            .map(|e| (e.id.clone(), SubmissionManifest::resolve(e, self.base())))
            .collect()
    }

    pub fn digest(&self) -> String {
        sha256_hex(self.text.as_bytes())
    }
}

/// Reads, parses and validates one pose file.
pub fn load_pose(path: &Path, id: &str, layout: &KeypointLayout) -> Result<PoseSequence<f64>, HarnessError> {
    let text = read_text(path)?;
    let seq = parse_pose_file_with_layout(&text, id, layout).map_err(|source| HarnessError::Pose {
        path: path.to_path_buf(),
        source,
    })?;
    let violations = validate_sequence(&seq, layout);
    if let Some(v) = violations.first() {
        return Err(HarnessError::InvalidSequence {
            path: path.to_path_buf(),
            message: v.to_string(),
        });
    }
    Ok(seq)
}

/// Loads every sequence of a manifest in manifest order, optionally normalized.
pub fn load_corpus(
    manifest: &LoadedManifest,
    layout: &KeypointLayout,
    normalize: bool,
) -> Result<Vec<PoseSequence<f64>>, HarnessError> {
    manifest
        .pose_paths()
        .into_iter()
        .map(|(id, path)| {
            let seq = load_pose(&path, &id, layout)?;
            if normalize {
                normalize_sequence(&seq).map_err(|source| HarnessError::Pose { path, source })
            } else {
                Ok(seq)
            }
        })
        .collect()
}
