use std::path::{Path, PathBuf};

use super::error::{read_text, HarnessError};
use super::report::MetricReport;
use crate::pose::{write_pose_file, ManifestEntry, PoseSequence, SubmissionManifest};
use crate::ranking::{parse_score_document, RankError, ScoreVector};
use crate::scalar::Scalar;

fn write(path: &Path, contents: &str) -> Result<(), HarnessError> {
    std::fs::write(path, contents).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `<dir>/poses/<id>.pose` for every sequence plus `<dir>/manifest.tsv` with
/// relative paths, and returns the manifest path.
pub fn write_corpus<T: Scalar>(
    dir: &Path,
    sequences: &[PoseSequence<T>],
    references: Option<&[String]>,
) -> Result<PathBuf, HarnessError> {
    let poses = dir.join("poses");
    std::fs::create_dir_all(&poses).map_err(|source| HarnessError::Io {
        path: poses.clone(),
        source,
    })?;
    let mut entries = Vec::with_capacity(sequences.len());
    for (i, seq) in sequences.iter().enumerate() {
        let rel = PathBuf::from("poses").join(format!("{}.pose", seq.id()));
        write(&dir.join(&rel), &write_pose_file(seq))?;
        entries.push(ManifestEntry {
            id: seq.id().to_string(),
            pose_path: rel,
            reference: references.and_then(|r| r.get(i).cloned()),
        });
    }
    let manifest = SubmissionManifest::new(entries).map_err(|source| HarnessError::Pose {
        path: dir.to_path_buf(),
        source,
    })?;
    let path = dir.join("manifest.tsv");
    write(&path, &manifest.to_text())?;
    Ok(path)
}

/// Writes `id<TAB>sentence` lines.
pub fn write_sentence_file(path: &Path, pairs: &[(String, String)]) -> Result<(), HarnessError> {
    let text: String = pairs.iter().map(|(id, s)| format!("{id}\t{s}\n")).collect();
    write(path, &text)
}

/// Loads score vectors from a score document, or from a structured evaluation report
/// (entrant taken from the report, else the file stem).
pub fn load_scores(path: &Path) -> Result<Vec<ScoreVector<f64>>, HarnessError> {
    let text = read_text(path)?;
    match parse_score_document(&text) {
        Ok(v) => Ok(v),
        Err(first) => {
            let report = MetricReport::from_structured(&text).map_err(|_| HarnessError::Rank(first.clone()))?;
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            report.score_vector(&stem).map(|s| vec![s]).ok_or_else(|| {
                HarnessError::Rank(RankError::ScoreFile(format!(
                    "{}: report lacks text or pose metrics needed for ranking",
                    path.display()
                )))
            })
        }
    }
}
