use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::metric::{Direction, Metric};
use super::RankError;
use crate::scalar::Scalar;

/// One entrant's raw leaderboard values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreVector<T> {
    pub entrant: String,
    pub values: Vec<(Metric, T)>,
}

impl<T: Scalar> ScoreVector<T> {
    pub fn new(entrant: impl Into<String>, values: Vec<(Metric, T)>) -> Self {
        Self {
            entrant: entrant.into(),
            values,
        }
    }

    /// Builds a vector from values given in canonical column order.
    pub fn from_row(entrant: impl Into<String>, row: [T; 9]) -> Self {
        Self::new(entrant, Metric::ALL.into_iter().zip(row).collect())
    }

    pub fn get(&self, metric: Metric) -> Option<T> {
        self.values.iter().find(|(m, _)| *m == metric).map(|(_, v)| *v)
    }

    /// Values in canonical order; errors unless every metric appears exactly once.
    pub fn canonical(&self) -> Result<[T; 9], RankError> {
        let mut slots: [Option<T>; 9] = [None; 9];
        for (m, v) in &self.values {
            if slots[m.index()].replace(*v).is_some() {
                return Err(RankError::DuplicateMetric {
                    entrant: self.entrant.clone(),
                    metric: *m,
                });
            }
        }
        let mut out = [T::zero(); 9];
        for m in Metric::ALL {
            out[m.index()] = slots[m.index()].ok_or_else(|| RankError::MissingMetric {
                entrant: self.entrant.clone(),
                metric: m,
            })?;
        }
        Ok(out)
    }

    pub fn to_map(&self) -> BTreeMap<Metric, T> {
        self.values.iter().copied().collect()
    }
}

/// Canonical-order objectives, all to be minimized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveVector<T> {
    pub objectives: Vec<T>,
}

pub fn to_objectives<T: Scalar>(scores: &ScoreVector<T>) -> Result<ObjectiveVector<T>, RankError> {
    let row = scores.canonical()?;
    let objectives = Metric::ALL
        .into_iter()
        .map(|m| {
            let v = row[m.index()];
            match m.direction() {
                Direction::HigherIsBetter => -v,
                Direction::LowerIsBetter => v,
                Direction::Target(t) => (T::from_u8(t).expect("small target") - v).abs(),
            }
        })
        .collect();
    Ok(ObjectiveVector { objectives })
}

/// `a` dominates `b`: no worse on every objective and strictly better on at least one.
pub fn dominates<T: Scalar>(a: &ObjectiveVector<T>, b: &ObjectiveVector<T>) -> Result<bool, RankError> {
    if a.objectives.len() != b.objectives.len() {
        return Err(RankError::LengthMismatch(a.objectives.len(), b.objectives.len()));
    }
    Ok(dominates_slice(&a.objectives, &b.objectives))
}

pub(crate) fn dominates_slice<T: PartialOrd>(a: &[T], b: &[T]) -> bool {
    let mut strictly = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

/// Non-dominated fronts; front 0 is the Pareto front. Entrant indices refer to the
/// input order and are listed in input order within a front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranking {
    pub fronts: Vec<Vec<usize>>,
}

impl Ranking {
    /// Front index of each input entrant.
    pub fn rank_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (rank, front) in self.fronts.iter().enumerate() {
            for &i in front {
                out[i] = rank;
            }
        }
        out
    }
}

/// Pairwise dominance: `matrix[i][j]` is true when entrant `i` dominates entrant `j`.
pub fn dominance_matrix<T: Scalar>(objectives: &[ObjectiveVector<T>]) -> Vec<Vec<bool>> {
    objectives
        .iter()
        .map(|a| {
            objectives
                .iter()
                .map(|b| dominates_slice(&a.objectives, &b.objectives))
                .collect()
        })
        .collect()
}

/// Peels non-dominated fronts, counting for each entrant how many remaining entrants
/// dominate it.
pub fn pareto_fronts<T: Scalar>(entries: &[ScoreVector<T>]) -> Result<Ranking, RankError> {
    if entries.is_empty() {
        return Err(RankError::NoEntrants);
    }
    let objectives = entries.iter().map(to_objectives).collect::<Result<Vec<_>, _>>()?;
    Ok(fronts_from_matrix(&dominance_matrix(&objectives)))
}

pub(crate) fn fronts_from_matrix(matrix: &[Vec<bool>]) -> Ranking {
    let n = matrix.len();
    let mut dominated_by: Vec<usize> = (0..n)
        .map(|j| (0..n).filter(|&i| matrix[i][j]).count())
        .collect();
    let mut assigned = vec![false; n];
    let mut fronts = Vec::new();
    let mut remaining = n;
    while remaining > 0 {
        let front: Vec<usize> = (0..n).filter(|&j| !assigned[j] && dominated_by[j] == 0).collect();
        // dominance is a strict partial order, so some remaining entrant is undominated
        assert!(!front.is_empty(), "dominance relation contains a cycle");
        for &i in &front {
            assigned[i] = true;
            for j in 0..n {
                if matrix[i][j] {
                    dominated_by[j] -= 1;
                }
            }
        }
        remaining -= front.len();
        fronts.push(front);
    }
    Ranking { fronts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(v: &[f64]) -> ObjectiveVector<f64> {
        ObjectiveVector { objectives: v.to_vec() }
    }

    #[test]
    fn perfect_scores_are_minimal() {
        let s = ScoreVector::from_row("gt", [100.0, 100.0, 100.0, 100.0, 100.0, 100.0, 0.0, 0.0, 1.0]);
        let o = to_objectives(&s).unwrap();
        assert_eq!(o.objectives, vec![-100.0, -100.0, -100.0, -100.0, -100.0, -100.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn total_distance_deviation() {
        let row = |td: f64| ScoreVector::from_row("x", [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, td]);
        let obj = |td| to_objectives(&row(td)).unwrap().objectives[8];
        assert!((obj(1.631) - 0.631).abs() < 1e-12);
        assert!((obj(0.798) - 0.202).abs() < 1e-12);
        assert!(obj(0.798) < obj(1.631));
        assert_eq!(obj(0.5), obj(1.5));
    }

    #[test]
    fn missing_and_duplicate_metrics() {
        let mut s = ScoreVector::from_row("x", [1.0; 9]);
        s.values.pop();
        assert_eq!(
            to_objectives(&s),
            Err(RankError::MissingMetric { entrant: "x".into(), metric: Metric::TotalDistance })
        );
        s.values.push((Metric::Wer, 3.0));
        assert!(matches!(to_objectives(&s), Err(RankError::DuplicateMetric { metric: Metric::Wer, .. })));
    }

    #[test]
    fn metric_order_in_input_is_irrelevant() {
        let a = ScoreVector::from_row("x", [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0]);
        let mut b = a.clone();
        b.values.reverse();
        assert_eq!(to_objectives(&a).unwrap(), to_objectives(&b).unwrap());
    }

    #[test]
    fn dominance_examples() {
        assert!(!dominates(&ov(&[1.0, 1.0]), &ov(&[1.0, 1.0])).unwrap());
        assert!(dominates(&ov(&[1.0, 1.0]), &ov(&[1.0, 2.0])).unwrap());
        assert!(!dominates(&ov(&[0.0, 2.0]), &ov(&[1.0, 1.0])).unwrap());
        assert!(!dominates(&ov(&[1.0, 1.0]), &ov(&[0.0, 2.0])).unwrap());
        assert_eq!(dominates(&ov(&[1.0]), &ov(&[1.0, 2.0])), Err(RankError::LengthMismatch(1, 2)));
    }

    #[test]
    fn single_entry_single_front() {
        let r = pareto_fronts(&[ScoreVector::from_row("only", [1.0; 9])]).unwrap();
        assert_eq!(r.fronts, vec![vec![0]]);
        assert_eq!(pareto_fronts::<f64>(&[]), Err(RankError::NoEntrants));
    }

    #[test]
    fn chain_and_ties() {
        let base = [30.0, 20.0, 10.0, 5.0, 30.0, 30.0, 90.0, 0.05, 0.9];
        let mut worse = base;
        worse[0] -= 1.0;
        let entries = vec![
            ScoreVector::from_row("worse", worse),
            ScoreVector::from_row("a", base),
            ScoreVector::from_row("a-twin", base),
        ];
        let r = pareto_fronts(&entries).unwrap();
        assert_eq!(r.fronts, vec![vec![1, 2], vec![0]]);
        assert_eq!(r.rank_of(3), vec![1, 0, 0]);
    }
}
