use std::collections::HashSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::error::PoseError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub pose_path: PathBuf,
    pub reference: Option<String>,
}

/// Ordered `id → pose file (+ optional reference sentence)` entries with unique ids.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SubmissionManifest {
    entries: Vec<ManifestEntry>,
}

impl SubmissionManifest {
    pub fn new(entries: Vec<ManifestEntry>) -> Result<Self, PoseError> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.id.as_str()) {
                return Err(PoseError::DuplicateId(e.id.clone()));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[ManifestEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&ManifestEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.id.as_str())
    }

    /// Pose path of `entry`, resolved against `base` when relative.
    pub fn resolve(entry: &ManifestEntry, base: &Path) -> PathBuf {
        if entry.pose_path.is_absolute() {
            entry.pose_path.clone()
        } else {
            base.join(&entry.pose_path)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out += &e.id;
            out.push('\t');
            out += &e.pose_path.to_string_lossy();
            if let Some(r) = &e.reference {
                out.push('\t');
                out += r;
            }
            out.push('\n');
        }
        out
    }
}

/// Parses `id<TAB>pose_path[<TAB>reference sentence]` lines. The sentence is the
/// verbatim remainder of the line after the second tab. Blank lines are skipped.
pub fn load_manifest(text: &str) -> Result<SubmissionManifest, PoseError> {
    let mut entries = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            continue;
        }
        let err = |reason: &str| PoseError::Manifest {
            line: n + 1,
            reason: reason.to_string(),
        };
        let mut fields = line.splitn(3, '\t');
        let id = fields.next().unwrap_or("").trim();
        if id.is_empty() {
            return Err(err("empty id"));
        }
        if id.chars().any(char::is_whitespace) {
            return Err(err("id contains whitespace"));
        }
        let path = fields.next().map(str::trim).unwrap_or("");
        if path.is_empty() {
            return Err(err(&format!("missing pose path for `{id}`")));
        }
        entries.push(ManifestEntry {
            id: id.to_string(),
            pose_path: PathBuf::from(path),
            reference: fields.next().map(str::to_string),
        });
    }
    SubmissionManifest::new(entries)
}
