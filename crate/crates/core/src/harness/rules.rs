use std::fmt;
use std::path::Path;
use std::str::FromStr;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};

use super::error::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Development,
    Test,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Development => "dev",
            Phase::Test => "test",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dev" | "development" => Ok(Phase::Development),
            "test" => Ok(Phase::Test),
            other => Err(format!("unknown phase `{other}` (expected dev or test)")),
        }
    }
}

/// Submission quotas for one challenge phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseRules {
    pub phase: Phase,
    pub max_per_day: Option<usize>,
    pub max_total: usize,
}

impl PhaseRules {
    pub fn for_phase(phase: Phase) -> Self {
        match phase {
            Phase::Development => Self {
                phase,
                max_per_day: Some(100),
                max_total: 3000,
            },
            Phase::Test => Self {
                phase,
                max_per_day: None,
                max_total: 3,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmissionRecord {
    pub timestamp: DateTime<Utc>,
    pub phase: Phase,
    pub digest: String,
}

impl SubmissionRecord {
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\n",
            self.timestamp.to_rfc3339_opts(SecondsFormat::Secs, true),
            self.phase,
            self.digest
        )
    }
}

/// Append-only history: one `timestamp<TAB>phase<TAB>manifest digest` line per accepted
/// submission, timestamps in RFC 3339.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SubmissionLog {
    pub records: Vec<SubmissionRecord>,
}

impl SubmissionLog {
    pub fn parse(text: &str, path: &Path) -> Result<Self, HarnessError> {
        let mut records = Vec::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let err = |reason: String| HarnessError::History {
                path: path.to_path_buf(),
                line: n + 1,
                reason,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(err(format!("expected 3 tab-separated fields, found {}", fields.len())));
            }
            let timestamp = DateTime::parse_from_rfc3339(fields[0])
                .map_err(|e| err(format!("bad timestamp `{}`: {e}", fields[0])))?
                .with_timezone(&Utc);
            let phase = fields[1].parse().map_err(err)?;
            records.push(SubmissionRecord {
                timestamp,
                phase,
                digest: fields[2].to_string(),
            });
        }
        Ok(Self { records })
    }

    /// Reads a log file; a missing file is an empty history.
    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        match std::fs::read_to_string(path) {
            Ok(text) => Self::parse(&text, path),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::default()),
            Err(source) => Err(HarnessError::Io {
                path: path.to_path_buf(),
                source,
            }),
        }
    }

    pub fn count(&self, phase: Phase) -> usize {
        self.records.iter().filter(|r| r.phase == phase).count()
    }

    /// Submissions in `phase` on the same UTC calendar day as `now`.
    pub fn count_on_day(&self, phase: Phase, now: DateTime<Utc>) -> usize {
        let day = now.date_naive();
        self.records
            .iter()
            .filter(|r| r.phase == phase && r.timestamp.date_naive() == day)
            .count()
    }
}

/// Quota problems a new submission at `now` would cause.
pub fn quota_violations(rules: &PhaseRules, history: &SubmissionLog, now: DateTime<Utc>) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(per_day) = rules.max_per_day {
        let today = history.count_on_day(rules.phase, now);
        if today >= per_day {
            out.push(format!(
                "{} phase allows {per_day} submissions per day; {today} already made on {}",
                rules.phase,
                now.date_naive()
            ));
        }
    }
    let total = history.count(rules.phase);
    if total >= rules.max_total {
        out.push(format!(
            "{} phase allows {} submissions in total; {total} already made",
            rules.phase, rules.max_total
        ));
    }
    out
}
