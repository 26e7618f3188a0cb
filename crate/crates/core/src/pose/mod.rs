//! Pose sequences: data model, text format, validation and skeleton normalization.

mod error;
mod format;
mod layout;
mod manifest;
mod normalize;
mod point;
mod sequence;

pub use error::PoseError;
pub use format::{parse_pose_file, parse_pose_file_with_layout, write_pose_file};
pub use layout::{HandPoints, KeypointLayout};
pub use manifest::{load_manifest, ManifestEntry, SubmissionManifest};
pub use normalize::{normalize_sequence, torso_rotation};
pub use point::{Point3, Rotation3};
pub use sequence::{validate_sequence, Frame, PoseSequence, Violation};
