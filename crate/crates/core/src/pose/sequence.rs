use serde::Serialize;

use super::error::PoseError;
use super::layout::KeypointLayout;
use super::point::Point3;
use crate::scalar::Scalar;

/// One time step: a 3D position per keypoint, in layout index order.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame<T> {
    points: Vec<Point3<T>>,
}

impl<T: Scalar> Frame<T> {
    pub fn new(points: Vec<Point3<T>>) -> Self {
        Self { points }
    }

    /// A frame with every keypoint at the origin.
    pub fn zeros(count: usize) -> Self {
        Self::new(vec![Point3::origin(); count])
    }

    pub fn points(&self) -> &[Point3<T>] {
        &self.points
    }

    pub fn points_mut(&mut self) -> &mut [Point3<T>] {
        &mut self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn map(&self, f: impl Fn(Point3<T>) -> Point3<T>) -> Self {
        Self::new(self.points.iter().copied().map(f).collect())
    }
}

impl<T> std::ops::Index<usize> for Frame<T> {
    type Output = Point3<T>;

    fn index(&self, idx: usize) -> &Point3<T> {
        &self.points[idx]
    }
}

/// An identified, non-empty sequence of frames that all match one keypoint layout.
#[derive(Debug, Clone, PartialEq)]
pub struct PoseSequence<T> {
    id: String,
    frames: Vec<Frame<T>>,
    layout: KeypointLayout,
}

impl<T: Scalar> PoseSequence<T> {
    pub fn new(
        id: impl Into<String>,
        frames: Vec<Frame<T>>,
        layout: KeypointLayout,
    ) -> Result<Self, PoseError> {
        let id = id.into();
        if frames.is_empty() {
            return Err(PoseError::EmptySequence(id));
        }
        if let Some((frame, f)) = frames
            .iter()
            .enumerate()
            .find(|(_, f)| f.len() != layout.total())
        {
            return Err(PoseError::PointCount {
                id,
                frame,
                expected: layout.total(),
                found: f.len(),
            });
        }
        Ok(Self { id, frames, layout })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn frames(&self) -> &[Frame<T>] {
        &self.frames
    }

    pub fn layout(&self) -> &KeypointLayout {
        &self.layout
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn point_count(&self) -> usize {
        self.layout.total()
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    /// Applies `f` to every point of every frame. The layout is unchanged.
    pub fn map_points(&self, f: impl Fn(Point3<T>) -> Point3<T>) -> Self {
        Self {
            id: self.id.clone(),
            frames: self.frames.iter().map(|fr| fr.map(&f)).collect(),
            layout: self.layout.clone(),
        }
    }

    pub(crate) fn from_frames_unchecked(id: String, frames: Vec<Frame<T>>, layout: KeypointLayout) -> Self {
        debug_assert!(!frames.is_empty());
        Self { id, frames, layout }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    PointCount { frame: usize, found: usize, expected: usize },
    NonFinite { frame: usize, keypoint: usize },
    TooShort { frames: usize, minimum: usize },
    LayoutMismatch,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::PointCount { frame, found, expected } => {
                write!(f, "frame {frame}: point count {found} ≠ {expected}")
            }
            Self::NonFinite { frame, keypoint } => {
                write!(f, "frame {frame}, keypoint {keypoint}: non-finite coordinate")
            }
            Self::TooShort { frames, minimum } => {
                write!(f, "sequence has {frames} frames, minimum is {minimum}")
            }
            Self::LayoutMismatch => write!(f, "sequence layout differs from the expected layout"),
        }
    }
}

/// Lists every way `seq` fails to conform to `layout`. An empty list means valid.
pub fn validate_sequence<T: Scalar>(seq: &PoseSequence<T>, layout: &KeypointLayout) -> Vec<Violation> {
    let mut out = Vec::new();
    if seq.frames.is_empty() {
        out.push(Violation::TooShort { frames: 0, minimum: 1 });
    }
    let mut counts_ok = true;
    for (i, frame) in seq.frames.iter().enumerate() {
        if frame.len() != layout.total() {
            counts_ok = false;
            out.push(Violation::PointCount {
                frame: i,
                found: frame.len(),
                expected: layout.total(),
            });
        }
        for (k, p) in frame.points().iter().enumerate() {
            if !p.is_finite() {
                out.push(Violation::NonFinite { frame: i, keypoint: k });
            }
        }
    }
    if counts_ok && seq.layout != *layout {
        out.push(Violation::LayoutMismatch);
    }
    out
}
