use serde::{Deserialize, Serialize};

use super::MetricError;
use crate::pose::{Frame, PoseSequence};
use crate::scalar::Scalar;

/// Mean Euclidean distance between corresponding keypoints of two frames.
pub fn frame_distance<T: Scalar>(a: &Frame<T>, b: &Frame<T>) -> Result<T, MetricError> {
    if a.len() != b.len() {
        return Err(MetricError::PointCountMismatch {
            pred: a.len(),
            reference: b.len(),
        });
    }
    if a.is_empty() {
        return Ok(T::zero());
    }
    Ok(mean_joint_error(a, b))
}

fn mean_joint_error<T: Scalar>(a: &Frame<T>, b: &Frame<T>) -> T {
    let sum: T = a
        .points()
        .iter()
        .zip(b.points())
        .map(|(p, q)| p.distance(*q))
        .sum();
    sum / T::from_usize(a.len()).expect("keypoint count representable")
}

/// A monotone, boundary-anchored warping path over (pred frame, ref frame) index pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlignmentPath<T> {
    pub steps: Vec<(usize, usize)>,
    pub total_cost: T,
}

impl<T: Scalar> AlignmentPath<T> {
    /// Number of aligned frame pairs.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Accumulated cost per aligned pair.
    pub fn mean_cost(&self) -> T {
        self.total_cost / T::from_usize(self.steps.len()).expect("path length representable")
    }
}

#[derive(Clone, Copy)]
enum Step {
    Start,
    Diagonal,
    PredAdvance,
    RefAdvance,
}

#[derive(Clone, Copy)]
struct Cell<T> {
    cost: T,
    len: usize,
}

impl<T: Scalar> Cell<T> {
    fn better_than(&self, other: &Self) -> bool {
        self.cost < other.cost || (self.cost == other.cost && self.len < other.len)
    }
}

/// Minimum-cost DTW alignment under the symmetric step set {(1,0), (0,1), (1,1)}.
///
/// Among paths of equal accumulated cost the shorter one wins; remaining ties prefer the
/// diagonal step, then advancing the prediction, then advancing the reference.
pub fn dtw_align<T: Scalar>(
    pred: &PoseSequence<T>,
    reference: &PoseSequence<T>,
) -> Result<AlignmentPath<T>, MetricError> {
    if pred.point_count() != reference.point_count() {
        return Err(MetricError::PointCountMismatch {
            pred: pred.point_count(),
            reference: reference.point_count(),
        });
    }
    let (p, r) = (pred.len(), reference.len());
    let mut acc: Vec<Cell<T>> = Vec::with_capacity(p * r);
    let mut back: Vec<Step> = Vec::with_capacity(p * r);
    let at = |i: usize, j: usize| i * r + j;

    for i in 0..p {
        for j in 0..r {
            let local = mean_joint_error(&pred.frames()[i], &reference.frames()[j]);
            let mut best: Option<(Cell<T>, Step)> = None;
            let candidates = [
                (i > 0 && j > 0, Step::Diagonal, (i.wrapping_sub(1), j.wrapping_sub(1))),
                (i > 0, Step::PredAdvance, (i.wrapping_sub(1), j)),
                (j > 0, Step::RefAdvance, (i, j.wrapping_sub(1))),
            ];
            for (ok, step, (pi, pj)) in candidates {
                if !ok {
                    continue;
                }
                let prev = acc[at(pi, pj)];
                if best.as_ref().is_none_or(|(b, _)| prev.better_than(b)) {
                    best = Some((prev, step));
                }
            }
            let (cell, step) = match best {
                Some((prev, step)) => (
                    Cell {
                        cost: prev.cost + local,
                        len: prev.len + 1,
                    },
                    step,
                ),
                None => (Cell { cost: local, len: 1 }, Step::Start),
            };
            acc.push(cell);
            back.push(step);
        }
    }

    let end = acc[at(p - 1, r - 1)];
    let mut steps = Vec::with_capacity(end.len);
    let (mut i, mut j) = (p - 1, r - 1);
    loop {
        steps.push((i, j));
        match back[at(i, j)] {
            Step::Start => break,
            Step::Diagonal => {
                i -= 1;
                j -= 1;
            }
            Step::PredAdvance => i -= 1,
            Step::RefAdvance => j -= 1,
        }
    }
    steps.reverse();
    Ok(AlignmentPath {
        steps,
        total_cost: end.cost,
    })
}

/// DTW mean joint error: aligned-path cost divided by the number of aligned pairs.
pub fn dtw_mje<T: Scalar>(pred: &PoseSequence<T>, reference: &PoseSequence<T>) -> Result<T, MetricError> {
    Ok(dtw_align(pred, reference)?.mean_cost())
}
