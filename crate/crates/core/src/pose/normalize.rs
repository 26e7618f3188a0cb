use super::error::PoseError;
use super::point::{Point3, Rotation3};
use super::sequence::PoseSequence;
use crate::scalar::Scalar;

/// Relative tolerance for the torso collinearity test, scaled by squared shoulder width.
const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// Rotation that puts the torso of `frame 0` into canonical orientation: the shoulder
/// line (right to left) along +x, the neck above the shoulder midpoint along +y, and the
/// torso-plane normal along +z.
pub fn torso_rotation<T: Scalar>(seq: &PoseSequence<T>) -> Result<Rotation3<T>, PoseError> {
    let layout = seq.layout();
    let first = &seq.frames()[0];
    let neck = first[layout.neck()];
    let left = first[layout.left_shoulder()];
    let right = first[layout.right_shoulder()];
    if !(neck.is_finite() && left.is_finite() && right.is_finite()) {
        return Err(PoseError::NonFiniteTorso(seq.id().to_string()));
    }

    let shoulder = left - right;
    let width = shoulder.norm();
    let normal = (left - neck).cross(right - neck);
    let tol = T::lit(DEGENERACY_TOLERANCE) * width * width;
    if width == T::zero() || !(normal.norm() >= tol) {
        return Err(PoseError::DegenerateTorso(seq.id().to_string()));
    }

    let x_axis = shoulder.scale(width.recip());
    let half = T::lit(0.5);
    let up = neck - (left + right).scale(half);
    let up = up - x_axis.scale(up.dot(x_axis));
    let y_axis = up.scale(up.norm().recip());
    let z_axis = x_axis.cross(y_axis);
    Ok(Rotation3::from_basis_rows(x_axis, y_axis, z_axis))
}

/// Translates every frame so its neck sits at the origin, then applies the single
/// torso rotation computed from frame 0 to all frames.
pub fn normalize_sequence<T: Scalar>(seq: &PoseSequence<T>) -> Result<PoseSequence<T>, PoseError> {
    let rotation = torso_rotation(seq)?;
    let neck_idx = seq.layout().neck();
    let frames = seq
        .frames()
        .iter()
        .map(|frame| {
            let neck = frame[neck_idx];
            let mut out = frame.map(|p| rotation.apply(p - neck));
            // exact zero rather than rounding residue
            out.points_mut()[neck_idx] = Point3::origin();
            out
        })
        .collect();
    Ok(PoseSequence::from_frames_unchecked(
        seq.id().to_string(),
        frames,
        seq.layout().clone(),
    ))
}
