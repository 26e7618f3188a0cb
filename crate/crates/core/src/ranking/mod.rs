//! Leaderboard construction by Pareto dominance over the nine leaderboard metrics.

mod metric;
mod pareto;
mod report;

use thiserror::Error;

pub use metric::{Direction, Metric};
pub use pareto::{dominance_matrix, dominates, pareto_fronts, to_objectives, ObjectiveVector, Ranking, ScoreVector};
pub use report::{
    build_ranking_report, parse_score_document, render_ranking_table, EntrantRow, RankingReport, ScoreEntry,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RankError {
    #[error("entrant `{entrant}` is missing metric {metric}")]
    MissingMetric { entrant: String, metric: Metric },
    #[error("entrant `{entrant}` lists metric {metric} more than once")]
    DuplicateMetric { entrant: String, metric: Metric },
    #[error("unknown metric `{0}`")]
    UnknownMetric(String),
    #[error("objective vectors differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("no entrants to rank")]
    NoEntrants,
    #[error("entrant `{0}` appears more than once")]
    DuplicateEntrant(String),
    #[error("invalid score document: {0}")]
    ScoreFile(String),
}
