use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::metric::Metric;
use super::pareto::{dominance_matrix, fronts_from_matrix, to_objectives, ScoreVector};
use super::RankError;

/// On-disk form of one entrant's scores: `{"entrant": .., "metrics": {"BLEU-1": .., ..}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreEntry {
    pub entrant: String,
    pub metrics: BTreeMap<Metric, f64>,
}

impl From<&ScoreVector<f64>> for ScoreEntry {
    fn from(s: &ScoreVector<f64>) -> Self {
        Self {
            entrant: s.entrant.clone(),
            metrics: s.to_map(),
        }
    }
}

impl From<ScoreEntry> for ScoreVector<f64> {
    fn from(e: ScoreEntry) -> Self {
        ScoreVector::new(e.entrant, e.metrics.into_iter().collect())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScoreDocument {
    One(ScoreEntry),
    Many(Vec<ScoreEntry>),
    Wrapped { entrants: Vec<ScoreEntry> },
}

/// Reads a score document: a single entry, a list of entries, or `{"entrants": [..]}`.
pub fn parse_score_document(text: &str) -> Result<Vec<ScoreVector<f64>>, RankError> {
    let doc: ScoreDocument =
        serde_json::from_str(text).map_err(|e| RankError::ScoreFile(e.to_string()))?;
    let entries = match doc {
        ScoreDocument::One(e) => vec![e],
        ScoreDocument::Many(v) | ScoreDocument::Wrapped { entrants: v } => v,
    };
    Ok(entries.into_iter().map(ScoreVector::from).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntrantRow {
    pub entrant: String,
    pub front: usize,
    pub metrics: BTreeMap<Metric, f64>,
    pub objectives: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingReport {
    pub metrics: Vec<Metric>,
    /// Entrant names per front, front 0 first.
    pub fronts: Vec<Vec<String>>,
    pub entrants: Vec<EntrantRow>,
    /// `dominance[i][j]`: entrant `i` dominates entrant `j` (rows follow `entrants`).
    pub dominance: Vec<Vec<bool>>,
    /// Groups of entrants with identical objective vectors.
    pub ties: Vec<Vec<String>>,
}

pub fn build_ranking_report(entries: &[ScoreVector<f64>]) -> Result<RankingReport, RankError> {
    if entries.is_empty() {
        return Err(RankError::NoEntrants);
    }
    let mut seen = std::collections::HashSet::new();
    for e in entries {
        if !seen.insert(e.entrant.as_str()) {
            return Err(RankError::DuplicateEntrant(e.entrant.clone()));
        }
    }
    let objectives = entries.iter().map(to_objectives).collect::<Result<Vec<_>, _>>()?;
    let dominance = dominance_matrix(&objectives);
    let ranking = fronts_from_matrix(&dominance);
    let rank = ranking.rank_of(entries.len());

    let mut ties: Vec<Vec<String>> = Vec::new();
    let mut grouped = vec![false; entries.len()];
    for i in 0..entries.len() {
        if grouped[i] {
            continue;
        }
        let group: Vec<usize> = (i..entries.len())
            .filter(|&j| objectives[j] == objectives[i])
            .collect();
        if group.len() > 1 {
            for &j in &group {
                grouped[j] = true;
            }
            ties.push(group.iter().map(|&j| entries[j].entrant.clone()).collect());
        }
    }

    Ok(RankingReport {
        metrics: Metric::ALL.to_vec(),
        fronts: ranking
            .fronts
            .iter()
            .map(|f| f.iter().map(|&i| entries[i].entrant.clone()).collect())
            .collect(),
        entrants: entries
            .iter()
            .zip(&objectives)
            .enumerate()
            .map(|(i, (e, o))| EntrantRow {
                entrant: e.entrant.clone(),
                front: rank[i],
                metrics: e.to_map(),
                objectives: o.objectives.clone(),
            })
            .collect(),
        dominance,
        ties,
    })
}

/// Plain-text table of fronts and per-entrant metrics.
pub fn render_ranking_table(report: &RankingReport) -> String {
    let mut out = String::new();
    let width = report
        .entrants
        .iter()
        .map(|e| e.entrant.chars().count())
        .max()
        .unwrap_or(0)
        .max("Entrant".len());
    out += &format!("{:<width$}  Front", "Entrant");
    for m in &report.metrics {
        out += &format!("  {:>8}", m.name());
    }
    out.push('\n');
    for row in &report.entrants {
        out += &format!("{:<width$}  {:>5}", row.entrant, row.front);
        for m in &report.metrics {
            out += &format!("  {:>8.*}", m.precision(), row.metrics[m]);
        }
        out.push('\n');
    }
    for (i, front) in report.fronts.iter().enumerate() {
        out += &format!("front {i}: {}\n", front.join(", "));
    }
    out
}
