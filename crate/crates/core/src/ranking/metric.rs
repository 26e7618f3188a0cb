use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::RankError;

/// The nine leaderboard metrics, in table column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Metric {
    #[serde(rename = "BLEU-1")]
    Bleu1,
    #[serde(rename = "BLEU-2")]
    Bleu2,
    #[serde(rename = "BLEU-3")]
    Bleu3,
    #[serde(rename = "BLEU-4")]
    Bleu4,
    #[serde(rename = "CHRF")]
    Chrf,
    #[serde(rename = "ROUGE")]
    Rouge,
    #[serde(rename = "WER")]
    Wer,
    #[serde(rename = "DTW-MJE")]
    DtwMje,
    #[serde(rename = "Total Distance")]
    TotalDistance,
}

/// How a raw metric value becomes a minimization objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    HigherIsBetter,
    LowerIsBetter,
    /// Best at exactly this value; objective is the absolute deviation.
    Target(u8),
}

impl Metric {
    pub const ALL: [Metric; 9] = [
        Metric::Bleu1,
        Metric::Bleu2,
        Metric::Bleu3,
        Metric::Bleu4,
        Metric::Chrf,
        Metric::Rouge,
        Metric::Wer,
        Metric::DtwMje,
        Metric::TotalDistance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Bleu1 => "BLEU-1",
            Metric::Bleu2 => "BLEU-2",
            Metric::Bleu3 => "BLEU-3",
            Metric::Bleu4 => "BLEU-4",
            Metric::Chrf => "CHRF",
            Metric::Rouge => "ROUGE",
            Metric::Wer => "WER",
            Metric::DtwMje => "DTW-MJE",
            Metric::TotalDistance => "Total Distance",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Metric::Wer | Metric::DtwMje => Direction::LowerIsBetter,
            Metric::TotalDistance => Direction::Target(1),
            _ => Direction::HigherIsBetter,
        }
    }

    /// Decimal places used when rendering this metric.
    pub fn precision(self) -> usize {
        match self {
            Metric::DtwMje => 4,
            Metric::TotalDistance => 3,
            _ => 2,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = RankError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim();
        Metric::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| RankError::UnknownMetric(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for m in Metric::ALL {
            assert_eq!(m.name().parse::<Metric>().unwrap(), m);
            assert_eq!(Metric::ALL[m.index()], m);
        }
        assert_eq!("total distance".parse::<Metric>().unwrap(), Metric::TotalDistance);
        assert!("BLEU-5".parse::<Metric>().is_err());
    }

    #[test]
    fn serde_names() {
        assert_eq!(serde_json::to_string(&Metric::DtwMje).unwrap(), "\"DTW-MJE\"");
    }
}
