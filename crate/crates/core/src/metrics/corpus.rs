use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::dtw::dtw_mje;
use super::travel::total_distance_ratio_with;
use super::MetricError;
use crate::pose::{HandPoints, PoseSequence};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoseScore<T> {
    pub dtw_mje: T,
    /// Absent when every reference in the corpus is motionless.
    pub total_distance_ratio: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequencePoseScore<T> {
    pub id: String,
    pub dtw_mje: T,
    pub total_distance_ratio: Option<T>,
    pub pred_frames: usize,
    pub ref_frames: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusPoseScore<T> {
    pub score: PoseScore<T>,
    pub per_sequence: Vec<SequencePoseScore<T>>,
    /// Ids whose reference hand travel was too small to normalize by.
    pub excluded: Vec<String>,
}

/// Matches predictions to references by id, returned in reference order.
pub fn pair_by_id<'a, T>(
    preds: &'a [PoseSequence<T>],
    refs: &'a [PoseSequence<T>],
) -> Result<Vec<(&'a PoseSequence<T>, &'a PoseSequence<T>)>, MetricError>
where
    T: Scalar,
{
    let by_id: HashMap<&str, &PoseSequence<T>> = preds.iter().map(|p| (p.id(), p)).collect();
    let missing: Vec<String> = refs
        .iter()
        .filter(|r| !by_id.contains_key(r.id()))
        .map(|r| r.id().to_string())
        .collect();
    let ref_ids: std::collections::HashSet<&str> = refs.iter().map(|r| r.id()).collect();
    let extra: Vec<String> = preds
        .iter()
        .filter(|p| !ref_ids.contains(p.id()))
        .map(|p| p.id().to_string())
        .collect();
    if !missing.is_empty() || !extra.is_empty() || preds.len() != refs.len() {
        return Err(MetricError::IdMismatch { missing, extra });
    }
    Ok(refs.iter().map(|r| (by_id[r.id()], r)).collect())
}

fn mean<T: Scalar>(values: impl Iterator<Item = T>) -> Option<T> {
    let (sum, n) = values.fold((T::zero(), 0usize), |(s, n), v| (s + v, n + 1));
    (n > 0).then(|| sum / T::from_usize(n).expect("count representable"))
}

/// Corpus DTW-MJE and Total Distance: arithmetic means of the per-sequence values, with
/// motionless references left out of the Total Distance mean.
pub fn corpus_pose_metrics<T: Scalar>(
    preds: &[PoseSequence<T>],
    refs: &[PoseSequence<T>],
) -> Result<CorpusPoseScore<T>, MetricError> {
    corpus_pose_metrics_with(preds, refs, HandPoints::All)
}

pub fn corpus_pose_metrics_with<T: Scalar>(
    preds: &[PoseSequence<T>],
    refs: &[PoseSequence<T>],
    which: HandPoints,
) -> Result<CorpusPoseScore<T>, MetricError> {
    if refs.is_empty() {
        return Err(MetricError::EmptyCorpus);
    }
    let pairs = pair_by_id(preds, refs)?;
    let per_sequence = pairs
        .par_iter()
        .map(|(pred, reference)| {
            let ratio = match total_distance_ratio_with(pred, reference, which) {
                Ok(r) => Some(r),
                Err(MetricError::ZeroReferenceTravel(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(SequencePoseScore {
                id: reference.id().to_string(),
                dtw_mje: dtw_mje(pred, reference)?,
                total_distance_ratio: ratio,
                pred_frames: pred.len(),
                ref_frames: reference.len(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let dtw = mean(per_sequence.iter().map(|s| s.dtw_mje)).expect("non-empty corpus");
    let ratio = mean(per_sequence.iter().filter_map(|s| s.total_distance_ratio));
    let excluded = per_sequence
        .iter()
        .filter(|s| s.total_distance_ratio.is_none())
        .map(|s| s.id.clone())
        .collect();
    Ok(CorpusPoseScore {
        score: PoseScore {
            dtw_mje: dtw,
            total_distance_ratio: ratio,
        },
        per_sequence,
        excluded,
    })
}

/// Mean of per-sequence `pred frames / ref frames`, paired by id.
pub fn duration_ratio<T: Scalar>(preds: &[PoseSequence<T>], refs: &[PoseSequence<T>]) -> Result<f64, MetricError> {
    if refs.is_empty() {
        return Err(MetricError::EmptyCorpus);
    }
    let pairs = pair_by_id(preds, refs)?;
    let sum: f64 = pairs
        .iter()
        .map(|(p, r)| p.len() as f64 / r.len() as f64)
        .sum();
    Ok(sum / pairs.len() as f64)
}
