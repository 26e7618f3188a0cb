use super::MetricError;
use crate::pose::{HandPoints, PoseSequence};
use crate::scalar::Scalar;

/// Reference travel below this is treated as "no motion".
pub const MIN_REFERENCE_TRAVEL: f64 = 1e-9;

/// Cumulative 3D displacement of all hand keypoints over consecutive frames.
pub fn hand_travel<T: Scalar>(seq: &PoseSequence<T>) -> T {
    hand_travel_with(seq, HandPoints::All)
}

pub fn hand_travel_with<T: Scalar>(seq: &PoseSequence<T>, which: HandPoints) -> T {
    let hands = seq.layout().hand_indices(which);
    seq.frames()
        .windows(2)
        .map(|w| hands.iter().map(|&k| w[0][k].distance(w[1][k])).sum::<T>())
        .sum()
}

/// Predicted hand travel normalized by reference hand travel; 1 means matched expressiveness.
pub fn total_distance_ratio<T: Scalar>(
    pred: &PoseSequence<T>,
    reference: &PoseSequence<T>,
) -> Result<T, MetricError> {
    total_distance_ratio_with(pred, reference, HandPoints::All)
}

pub fn total_distance_ratio_with<T: Scalar>(
    pred: &PoseSequence<T>,
    reference: &PoseSequence<T>,
    which: HandPoints,
) -> Result<T, MetricError> {
    let denom = hand_travel_with(reference, which);
    if !(denom >= T::lit(MIN_REFERENCE_TRAVEL)) {
        return Err(MetricError::ZeroReferenceTravel(reference.id().to_string()));
    }
    Ok(hand_travel_with(pred, which) / denom)
}
