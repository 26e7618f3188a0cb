use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::error::HarnessError;
use super::evaluate::EvaluationConfig;
use crate::metrics::SequencePoseScore;
use crate::ranking::{Metric, ScoreVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportFormat {
    /// Pretty-printed JSON with a fixed key order.
    #[default]
    Structured,
    Table,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "structured" | "json" => Ok(Self::Structured),
            "table" => Ok(Self::Table),
            "csv" => Ok(Self::Csv),
            other => Err(HarnessError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Structured => "structured",
            Self::Table => "table",
            Self::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        Self {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WerSummary {
    pub substitutions: usize,
    pub deletions: usize,
    pub insertions: usize,
    pub ref_tokens: usize,
    pub rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentenceRow {
    pub id: String,
    pub substitutions: usize,
    pub deletions: usize,
    pub insertions: usize,
    pub ref_tokens: usize,
    pub rate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TextSection {
    pub bleu: [f64; 4],
    pub chrf: f64,
    pub rouge: f64,
    pub wer: WerSummary,
    pub sentences: Vec<SentenceRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoseSection {
    pub dtw_mje: f64,
    pub total_distance: Option<f64>,
    pub sequences: Vec<SequencePoseScore<f64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorWord {
    pub token: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    pub duration_ratio: Option<f64>,
    pub length_error_correlation: Option<f64>,
    pub top_error_words: Vec<ErrorWord>,
    pub excluded_sequences: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub tool: ToolInfo,
    pub entrant: Option<String>,
    pub generated_at: Option<String>,
    pub config: EvaluationConfig,
    pub inputs: Vec<InputDigest>,
    pub text: Option<TextSection>,
    pub pose: Option<PoseSection>,
    pub diagnostics: Diagnostics,
}

impl MetricReport {
    pub fn metric(&self, metric: Metric) -> Option<f64> {
        let text = self.text.as_ref();
        match metric {
            Metric::Bleu1 => text.map(|t| t.bleu[0]),
            Metric::Bleu2 => text.map(|t| t.bleu[1]),
            Metric::Bleu3 => text.map(|t| t.bleu[2]),
            Metric::Bleu4 => text.map(|t| t.bleu[3]),
            Metric::Chrf => text.map(|t| t.chrf),
            Metric::Rouge => text.map(|t| t.rouge),
            Metric::Wer => text.map(|t| t.wer.rate),
            Metric::DtwMje => self.pose.as_ref().map(|p| p.dtw_mje),
            Metric::TotalDistance => self.pose.as_ref().and_then(|p| p.total_distance),
        }
    }

    /// The nine leaderboard values, if the report has all of them.
    pub fn score_vector(&self, fallback_entrant: &str) -> Option<ScoreVector<f64>> {
        let values = Metric::ALL
            .into_iter()
            .map(|m| self.metric(m).map(|v| (m, v)))
            .collect::<Option<Vec<_>>>()?;
        let entrant = self.entrant.clone().unwrap_or_else(|| fallback_entrant.to_string());
        Some(ScoreVector::new(entrant, values))
    }

    pub fn from_structured(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Serialize(e.to_string()))
    }
}

/// Fixed-precision rendering shared by the table and csv formats.
pub fn format_metric(metric: Metric, value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.*}", metric.precision()),
        None => "-".to_string(),
    }
}

fn optional(v: Option<f64>, digits: usize) -> String {
    v.map_or_else(|| "-".to_string(), |v| format!("{v:.digits$}"))
}

pub fn render_report(report: &MetricReport, format: ReportFormat) -> Result<String, HarnessError> {
    match format {
        ReportFormat::Structured => serde_json::to_string_pretty(report)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| HarnessError::Serialize(e.to_string())),
        ReportFormat::Table => Ok(render_table(report)),
        ReportFormat::Csv => render_csv(report),
    }
}

fn render_table(report: &MetricReport) -> String {
    let entrant = report.entrant.as_deref().unwrap_or("submission");
    let cells: Vec<String> = Metric::ALL.iter().map(|&m| format_metric(m, report.metric(m))).collect();
    let widths: Vec<usize> = Metric::ALL
        .iter()
        .zip(&cells)
        .map(|(m, c)| m.name().chars().count().max(c.chars().count()))
        .collect();
    let name_w = entrant.chars().count().max("System".len());

    let mut out = format!("{:<name_w$}", "System");
    for (m, w) in Metric::ALL.iter().zip(&widths) {
        out += &format!("  {:>w$}", m.name());
    }
    out += &format!("\n{entrant:<name_w$}");
    for (c, w) in cells.iter().zip(&widths) {
        out += &format!("  {c:>w$}");
    }
    out.push_str("\n\n");

    let d = &report.diagnostics;
    if let Some(t) = &report.text {
        out += &format!(
            "WER breakdown: substitutions {} deletions {} insertions {} reference words {}\n",
            t.wer.substitutions, t.wer.deletions, t.wer.insertions, t.wer.ref_tokens
        );
        out += &format!(
            "sentence length / error rate correlation: {}\n",
            optional(d.length_error_correlation, 3)
        );
        let words: Vec<String> = d.top_error_words.iter().map(|w| format!("{} ({})", w.token, w.count)).collect();
        out += &format!(
            "most frequent error words: {}\n",
            if words.is_empty() { "none".to_string() } else { words.join(", ") }
        );
    }
    if report.pose.is_some() {
        out += &format!("duration ratio: {}\n", optional(d.duration_ratio, 3));
        out += &format!(
            "excluded from Total Distance: {}\n",
            if d.excluded_sequences.is_empty() {
                "none".to_string()
            } else {
                d.excluded_sequences.join(", ")
            }
        );
    }
    out
}

fn render_csv(report: &MetricReport) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let ser = |e: csv::Error| HarnessError::Serialize(e.to_string());
    let mut header = vec!["entrant".to_string()];
    header.extend(Metric::ALL.iter().map(|m| m.name().to_string()));
    header.extend(
        ["substitutions", "deletions", "insertions", "ref_tokens", "duration_ratio"].map(String::from),
    );
    w.write_record(&header).map_err(ser)?;

    let mut row = vec![report.entrant.clone().unwrap_or_else(|| "submission".into())];
    row.extend(Metric::ALL.iter().map(|&m| format_metric(m, report.metric(m))));
    let wer = report.text.as_ref().map(|t| &t.wer);
    for v in [
        wer.map(|w| w.substitutions),
        wer.map(|w| w.deletions),
        wer.map(|w| w.insertions),
        wer.map(|w| w.ref_tokens),
    ] {
        row.push(v.map_or_else(|| "-".to_string(), |v| v.to_string()));
    }
    row.push(optional(report.diagnostics.duration_ratio, 3));
    w.write_record(&row).map_err(ser)?;
    let bytes = w.into_inner().map_err(|e| HarnessError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| HarnessError::Serialize(e.to_string()))
}
