//! Deterministic fixtures: synthetic pose corpora, mean-pose baselines and seeded noise.
//!
//! All randomness comes from SplitMix64 (`rand_xoshiro::SplitMix64`), whose output
//! stream is fully specified by the seed. A draw `u` in `[0, 1)` is
//! `(next_u64() >> 11) * 2^-53`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pose::{Frame, KeypointLayout, Point3, PoseSequence};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SynthError {
    #[error("invalid synth spec: {0}")]
    InvalidSpec(String),
    #[error("noise scale must be non-negative, got {0}")]
    NegativeSigma(f64),
    #[error("baseline needs at least one reference sequence")]
    NoReferences,
    #[error("reference `{0}` uses a different keypoint layout")]
    LayoutMismatch(String),
}

/// Uniform draws from a SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct FixtureRng {
    inner: SplitMix64,
}

impl FixtureRng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-scale, scale)`.
    pub fn symmetric(&mut self, scale: f64) -> f64 {
        scale * (2.0 * self.unit() - 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub frame_count: usize,
    /// Hand displacement scale in skeleton units.
    pub amplitude: f64,
    /// Oscillation cycles over the whole sequence.
    pub frequency: f64,
    pub seed: u64,
}

impl Default for SynthSpec {
    fn default() -> Self {
        Self {
            frame_count: 32,
            amplitude: 0.05,
            frequency: 1.5,
            seed: 0,
        }
    }
}

impl SynthSpec {
    pub fn validate(&self) -> Result<(), SynthError> {
        if self.frame_count == 0 {
            return Err(SynthError::InvalidSpec("frame_count must be at least 1".into()));
        }
        if !(self.amplitude >= 0.0 && self.amplitude.is_finite()) {
            return Err(SynthError::InvalidSpec(format!(
                "amplitude must be finite and non-negative, got {}",
                self.amplitude
            )));
        }
        if !self.frequency.is_finite() {
            return Err(SynthError::InvalidSpec("frequency must be finite".into()));
        }
        Ok(())
    }
}

/// Static rest pose: neck at the origin, shoulders slightly below it, face ring above,
/// hands in front of the chest.
pub fn rest_pose(layout: &KeypointLayout) -> Vec<Point3<f64>> {
    let mut pts = vec![Point3::origin(); layout.total()];
    pts[layout.neck()] = Point3::new(0.0, 0.0, 0.0);
    pts[layout.left_shoulder()] = Point3::new(0.18, -0.05, 0.0);
    pts[layout.right_shoulder()] = Point3::new(-0.18, -0.05, 0.0);
    let torso = [layout.neck(), layout.left_shoulder(), layout.right_shoulder()];
    for (q, k) in layout.body().filter(|k| !torso.contains(k)).enumerate() {
        let side = if q % 2 == 0 { 1.0 } else { -1.0 };
        let tier = (q / 2) as f64;
        pts[k] = Point3::new(side * (0.22 + 0.02 * tier), -0.3 - 0.1 * tier, 0.02);
    }
    let face = layout.face();
    let n = face.len().max(1) as f64;
    for (q, k) in face.enumerate() {
        let a = std::f64::consts::TAU * q as f64 / n;
        pts[k] = Point3::new(0.07 * a.cos(), 0.2 + 0.09 * a.sin(), 0.03 + 0.01 * (2.0 * a).cos());
    }
    for (range, side) in [(layout.left_hand(), 1.0), (layout.right_hand(), -1.0)] {
        for (q, k) in range.enumerate() {
            let finger = (q % 5) as f64 - 2.0;
            let joint = (q / 5) as f64;
            pts[k] = Point3::new(side * (0.15 + 0.01 * finger), -0.2 + 0.012 * joint, 0.12);
        }
    }
    pts
}

/// Synthetic signer: static body and face, hands on seeded sinusoidal trajectories.
///
/// Both hands oscillate as a whole with amplitude `A`, and every hand keypoint adds a
/// finger-scale wobble of `0.15 A` at twice the base frequency.
pub fn synth_sequence<T: Scalar>(spec: &SynthSpec, layout: &KeypointLayout) -> Result<PoseSequence<T>, SynthError> {
    spec.validate()?;
    let mut rng = FixtureRng::new(spec.seed);
    let tau = std::f64::consts::TAU;
    let hand_phase: Vec<[f64; 3]> = (0..2)
        .map(|_| [tau * rng.unit(), tau * rng.unit(), tau * rng.unit()])
        .collect();
    let hands: Vec<(usize, usize)> = layout
        .left_hand()
        .map(|k| (k, 0))
        .chain(layout.right_hand().map(|k| (k, 1)))
        .collect();
    let wobble_phase: Vec<f64> = hands.iter().map(|_| tau * rng.unit()).collect();

    let rest = rest_pose(layout);
    let omega = tau * spec.frequency / spec.frame_count as f64;
    let a = spec.amplitude;
    let frames = (0..spec.frame_count)
        .map(|t| {
            let phase = omega * t as f64;
            let mut pts = rest.clone();
            for (slot, &(k, hand)) in hands.iter().enumerate() {
                let [px, py, pz] = hand_phase[hand];
                let w = 2.0 * phase + wobble_phase[slot];
                let offset = Point3::new(
                    (phase + px).sin() + 0.15 * w.sin(),
                    0.8 * (phase + py).sin() + 0.15 * w.cos(),
                    0.5 * (phase + pz).sin(),
                );
                pts[k] = rest[k] + offset * a;
            }
            Frame::new(pts.into_iter().map(cast_point).collect())
        })
        .collect();
    Ok(PoseSequence::new(format!("synth-{:016x}", spec.seed), frames, layout.clone())
        .expect("generated frames match the layout"))
}

fn cast_point<T: Scalar>(p: Point3<f64>) -> Point3<T> {
    Point3::new(T::lit(p.x), T::lit(p.y), T::lit(p.z))
}

/// `count` sequences with ids `seq000`, `seq001`, ... and per-sequence seeds drawn
/// from the master seed's SplitMix64 stream.
pub fn synth_corpus<T: Scalar>(
    count: usize,
    template: &SynthSpec,
    layout: &KeypointLayout,
) -> Result<Vec<PoseSequence<T>>, SynthError> {
    let mut seeds = FixtureRng::new(template.seed);
    let width = count.saturating_sub(1).to_string().len().max(3);
    (0..count)
        .map(|i| {
            let spec = SynthSpec {
                seed: seeds.next_u64(),
                ..*template
            };
            Ok(synth_sequence::<T>(&spec, layout)?.with_id(format!("seq{i:0width$}")))
        })
        .collect()
}

const VOCABULARY: [&str; 24] = [
    "und", "regen", "süden", "norden", "morgen", "heute", "sonne", "wolken", "wind", "schnee",
    "im", "am", "es", "wird", "grad", "nacht", "tag", "kalt", "warm", "osten",
    "westen", "gewitter", "nebel", "frost",
];

/// A seeded 3..=15 word sentence over a small weather-forecast vocabulary.
pub fn synth_sentence(seed: u64) -> String {
    let mut rng = FixtureRng::new(seed);
    let len = 3 + (rng.next_u64() % 13) as usize;
    (0..len)
        .map(|_| VOCABULARY[(rng.next_u64() % VOCABULARY.len() as u64) as usize])
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaselineVariant {
    /// Every frame is the mean over all frames of all references.
    #[default]
    StaticMean,
    /// Frame `t` is the mean of frame `t` over the references that have one.
    PerFrameMean,
}

/// Regression-to-the-mean predictions: one sequence per reference, same id and length.
pub fn mean_pose_baseline<T: Scalar>(
    refs: &[PoseSequence<T>],
    variant: BaselineVariant,
) -> Result<Vec<PoseSequence<T>>, SynthError> {
    let first = refs.first().ok_or(SynthError::NoReferences)?;
    let layout = first.layout().clone();
    if let Some(bad) = refs.iter().find(|r| *r.layout() != layout) {
        return Err(SynthError::LayoutMismatch(bad.id().to_string()));
    }
    let total = layout.total();
    let mean_of = |frames: &mut dyn Iterator<Item = &Frame<T>>| {
        let mut acc = vec![Point3::<T>::origin(); total];
        let mut n = 0usize;
        for f in frames {
            for (a, p) in acc.iter_mut().zip(f.points()) {
                *a = *a + *p;
            }
            n += 1;
        }
        let inv = T::one() / T::from_usize(n).expect("frame count representable");
        Frame::new(acc.into_iter().map(|p| p.scale(inv)).collect())
    };

    match variant {
        BaselineVariant::StaticMean => {
            let mean = mean_of(&mut refs.iter().flat_map(|r| r.frames()));
            Ok(refs
                .iter()
                .map(|r| {
                    PoseSequence::new(r.id(), vec![mean.clone(); r.len()], layout.clone())
                        .expect("mean frame matches layout")
                })
                .collect())
        }
        BaselineVariant::PerFrameMean => {
            let longest = refs.iter().map(|r| r.len()).max().unwrap_or(0);
            let means: Vec<Frame<T>> = (0..longest)
                .map(|t| mean_of(&mut refs.iter().filter_map(|r| r.frames().get(t))))
                .collect();
            Ok(refs
                .iter()
                .map(|r| {
                    PoseSequence::new(r.id(), means[..r.len()].to_vec(), layout.clone())
                        .expect("mean frames match layout")
                })
                .collect())
        }
    }
}

/// Adds seeded uniform noise in `[-sigma, sigma)` to every coordinate, drawn in
/// frame, keypoint, x/y/z order.
pub fn perturb<T: Scalar>(seq: &PoseSequence<T>, sigma: f64, seed: u64) -> Result<PoseSequence<T>, SynthError> {
    if !(sigma >= 0.0) {
        return Err(SynthError::NegativeSigma(sigma));
    }
    let mut rng = FixtureRng::new(seed);
    let frames = seq
        .frames()
        .iter()
        .map(|f| {
            Frame::new(
                f.points()
                    .iter()
                    .map(|p| {
                        let dx = T::lit(rng.symmetric(sigma));
                        let dy = T::lit(rng.symmetric(sigma));
                        let dz = T::lit(rng.symmetric(sigma));
                        Point3::new(p.x + dx, p.y + dy, p.z + dz)
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(PoseSequence::new(seq.id(), frames, seq.layout().clone()).expect("same shape as input"))
}
