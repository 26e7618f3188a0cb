use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::error::{read_text, HarnessError};
use super::inputs::{load_corpus, load_layout, sha256_hex, LoadedManifest};
use super::report::{
    Diagnostics, ErrorWord, InputDigest, MetricReport, PoseSection, ReportFormat, SentenceRow, TextSection, ToolInfo,
    WerSummary,
};
use super::translate::run_translation_hook;
use crate::metrics::{corpus_pose_metrics_with, duration_ratio};
use crate::pose::HandPoints;
use crate::text::{pair_sentences, parse_sentence_file, score_text, sentence_length_correlation};

pub const DEFAULT_TOP_ERRORS: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationConfig {
    pub pred_manifest: Option<PathBuf>,
    pub ref_manifest: Option<PathBuf>,
    pub hypotheses: Option<PathBuf>,
    pub reference_text: Option<PathBuf>,
    pub layout: Option<PathBuf>,
    pub normalize: bool,
    pub hands: HandPoints,
    /// External back-translation command used when no hypothesis file is given.
    pub translate_command: Option<String>,
    pub entrant: Option<String>,
    /// Caller-supplied timestamp; the report carries no wall-clock time otherwise.
    pub generated_at: Option<String>,
    pub top_errors: usize,
    /// Where the rendered report goes; not echoed, so the report is independent of it.
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub format: ReportFormat,
}

impl Default for EvaluationConfig {
    fn default() -> Self {
        Self {
            pred_manifest: None,
            ref_manifest: None,
            hypotheses: None,
            reference_text: None,
            layout: None,
            normalize: true,
            hands: HandPoints::All,
            translate_command: None,
            entrant: None,
            generated_at: None,
            top_errors: DEFAULT_TOP_ERRORS,
            output: None,
            format: ReportFormat::Structured,
        }
    }
}

impl EvaluationConfig {
    pub fn has_pose_inputs(&self) -> bool {
        self.pred_manifest.is_some() && self.ref_manifest.is_some()
    }

    pub fn has_text_inputs(&self) -> bool {
        let hyps = self.hypotheses.is_some() || (self.translate_command.is_some() && self.pred_manifest.is_some());
        let refs = self.reference_text.is_some() || self.ref_manifest.is_some();
        hyps && refs
    }

    pub fn check(&self) -> Result<(), HarnessError> {
        if self.pred_manifest.is_some() != self.ref_manifest.is_some() && self.hypotheses.is_none() {
            return Err(HarnessError::Config(
                "pose evaluation needs both a prediction and a reference manifest".into(),
            ));
        }
        if self.hypotheses.is_some() && !self.has_text_inputs() {
            return Err(HarnessError::Config(
                "hypotheses given without reference text or a reference manifest".into(),
            ));
        }
        if !self.has_pose_inputs() && !self.has_text_inputs() {
            return Err(HarnessError::Config("no pose or text inputs given".into()));
        }
        Ok(())
    }
}

fn text_digest(role: &str, path: &std::path::Path, text: &str) -> InputDigest {
    InputDigest {
        role: role.to_string(),
        path: path.display().to_string(),
        sha256: sha256_hex(text.as_bytes()),
    }
}

/// Runs every configured metric and assembles the report. Output depends only on the
/// input files and the config.
pub fn evaluate(config: &EvaluationConfig) -> Result<MetricReport, HarnessError> {
    config.check()?;
    let layout = load_layout(config.layout.as_deref())?;
    let mut inputs = Vec::new();
    if let Some(p) = &config.layout {
        inputs.push(text_digest("layout", p, &read_text(p)?));
    }

    let pred_manifest = config.pred_manifest.as_deref().map(LoadedManifest::load).transpose()?;
    let ref_manifest = config.ref_manifest.as_deref().map(LoadedManifest::load).transpose()?;
    for (role, m) in [("pred_manifest", &pred_manifest), ("ref_manifest", &ref_manifest)] {
        if let Some(m) = m {
            inputs.push(text_digest(role, &m.path, &m.text));
        }
    }

    let mut diagnostics = Diagnostics::default();
    let pose = match (&pred_manifest, &ref_manifest) {
        (Some(pm), Some(rm)) => {
            let preds = load_corpus(pm, &layout, config.normalize)?;
            let refs = load_corpus(rm, &layout, config.normalize)?;
            let score = corpus_pose_metrics_with(&preds, &refs, config.hands)?;
            diagnostics.duration_ratio = Some(duration_ratio(&preds, &refs)?);
            diagnostics.excluded_sequences = score.excluded.clone();
            Some(PoseSection {
                dtw_mje: score.score.dtw_mje,
                total_distance: score.score.total_distance_ratio,
                sequences: score.per_sequence,
            })
        }
        _ => None,
    };

    let text = if config.has_text_inputs() {
        let hyps = match (&config.hypotheses, &config.translate_command, &pred_manifest) {
            (Some(path), _, _) => {
                let raw = read_text(path)?;
                inputs.push(text_digest("hypotheses", path, &raw));
                parse_sentence_file(&raw).map_err(|source| HarnessError::TextFile {
                    path: path.clone(),
                    source,
                })?
            }
            (None, Some(cmd), Some(pm)) => run_translation_hook(cmd, &pm.pose_paths())?,
            _ => unreachable!("checked by has_text_inputs"),
        };
        let refs = match (&config.reference_text, &ref_manifest) {
            (Some(path), _) => {
                let raw = read_text(path)?;
                inputs.push(text_digest("reference_text", path, &raw));
                parse_sentence_file(&raw).map_err(|source| HarnessError::TextFile {
                    path: path.clone(),
                    source,
                })?
            }
            (None, Some(rm)) => rm
                .manifest
                .entries()
                .iter()
                .map(|e| {
                    e.reference.clone().map(|s| (e.id.clone(), s)).ok_or_else(|| {
                        HarnessError::Config(format!(
                            "{}: entry `{}` has no reference sentence",
                            rm.path.display(),
                            e.id
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
            (None, None) => unreachable!("checked by has_text_inputs"),
        };
        let paired = pair_sentences(&hyps, &refs)?;
        let scores = score_text(&paired.hyps, &paired.refs)?;

        diagnostics.length_error_correlation = sentence_length_correlation(&scores.wer);
        diagnostics.top_error_words = crate::text::top_error_words(&scores.wer, config.top_errors)
            .into_iter()
            .map(|(token, count)| ErrorWord { token, count })
            .collect();

        Some(TextSection {
            bleu: scores.bleu,
            chrf: scores.chrf,
            rouge: scores.rouge,
            wer: WerSummary {
                substitutions: scores.wer.substitutions,
                deletions: scores.wer.deletions,
                insertions: scores.wer.insertions,
                ref_tokens: scores.wer.ref_tokens,
                rate: scores.wer.rate,
            },
            sentences: paired
                .ids
                .iter()
                .zip(&scores.wer.per_sentence)
                .map(|(id, s)| SentenceRow {
                    id: id.clone(),
                    substitutions: s.substitutions,
                    deletions: s.deletions,
                    insertions: s.insertions,
                    ref_tokens: s.ref_tokens,
                    rate: s.rate(),
                })
                .collect(),
        })
    } else {
        None
    };

    Ok(MetricReport {
        tool: ToolInfo::current(),
        entrant: config.entrant.clone(),
        generated_at: config.generated_at.clone(),
        config: config.clone(),
        inputs,
        text,
        pose,
        diagnostics,
    })
}
