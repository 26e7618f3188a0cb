use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::error::PoseError;

/// Named index ranges over the keypoints of one frame.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeypointLayout {
    body: Range<usize>,
    face: Range<usize>,
    left_hand: Range<usize>,
    right_hand: Range<usize>,
    neck: usize,
    left_shoulder: usize,
    right_shoulder: usize,
    total: usize,
}

/// Which hand keypoints count towards hand travel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HandPoints {
    /// Every keypoint of both hands (42 in the default layout).
    #[default]
    All,
    /// Only the first keypoint of each hand range.
    Wrists,
}

impl Default for KeypointLayout {
    /// 8 body, 128 face, 21 left-hand and 21 right-hand keypoints, in that order.
    /// Body index 0 is the neck, 1 the left shoulder, 2 the right shoulder.
    fn default() -> Self {
        Self {
            body: 0..8,
            face: 8..136,
            left_hand: 136..157,
            right_hand: 157..178,
            neck: 0,
            left_shoulder: 1,
            right_shoulder: 2,
            total: 178,
        }
    }
}

impl KeypointLayout {
    /// Builds a layout from `(start, len)` ranges and joint indices, checking that the
    /// ranges tile `[0, total)` and that the torso joints are body keypoints.
    pub fn new(
        body: Range<usize>,
        face: Range<usize>,
        left_hand: Range<usize>,
        right_hand: Range<usize>,
        neck: usize,
        left_shoulder: usize,
        right_shoulder: usize,
    ) -> Result<Self, PoseError> {
        let mut ranges = [
            ("body", body.clone()),
            ("face", face.clone()),
            ("lhand", left_hand.clone()),
            ("rhand", right_hand.clone()),
        ];
        ranges.sort_by_key(|(_, r)| r.start);
        let mut cursor = 0;
        for (name, r) in &ranges {
            if r.start > r.end {
                return Err(PoseError::Layout(format!("{name} range is reversed")));
            }
            if r.start != cursor {
                return Err(PoseError::Layout(format!(
                    "{name} range starts at {} but the previous range ends at {cursor}",
                    r.start
                )));
            }
            cursor = r.end;
        }
        if body.is_empty() {
            return Err(PoseError::Layout("body range is empty".into()));
        }
        for (name, idx) in [
            ("neck", neck),
            ("lshoulder", left_shoulder),
            ("rshoulder", right_shoulder),
        ] {
            if !body.contains(&idx) {
                return Err(PoseError::Layout(format!(
                    "{name} index {idx} outside body range {}..{}",
                    body.start, body.end
                )));
            }
        }
        if neck == left_shoulder || neck == right_shoulder || left_shoulder == right_shoulder {
            return Err(PoseError::Layout("neck and shoulder indices must be distinct".into()));
        }
        Ok(Self {
            body,
            face,
            left_hand,
            right_hand,
            neck,
            left_shoulder,
            right_shoulder,
            total: cursor,
        })
    }

    /// Parses a layout descriptor: one `body|face|lhand|rhand <start> <len>` or
    /// `neck|lshoulder|rshoulder <idx>` directive per line. Blank lines and `#` comments
    /// are ignored.
    pub fn from_descriptor(text: &str) -> Result<Self, PoseError> {
        let mut ranges: [Option<Range<usize>>; 4] = Default::default();
        let mut joints: [Option<usize>; 3] = [None; 3];
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let number = |s: &str| {
                s.parse::<usize>().map_err(|_| {
                    PoseError::Layout(format!("line {}: `{s}` is not an index", n + 1))
                })
            };
            let range_slot = match fields[0] {
                "body" => Some(0),
                "face" => Some(1),
                "lhand" => Some(2),
                "rhand" => Some(3),
                _ => None,
            };
            let joint_slot = match fields[0] {
                "neck" => Some(0),
                "lshoulder" => Some(1),
                "rshoulder" => Some(2),
                _ => None,
            };
            match (range_slot, joint_slot) {
                (Some(slot), _) => {
                    if fields.len() != 3 {
                        return Err(PoseError::Layout(format!(
                            "line {}: expected `{} <start> <len>`",
                            n + 1,
                            fields[0]
                        )));
                    }
                    let start = number(fields[1])?;
                    let len = number(fields[2])?;
                    ranges[slot] = Some(start..start + len);
                }
                (_, Some(slot)) => {
                    if fields.len() != 2 {
                        return Err(PoseError::Layout(format!(
                            "line {}: expected `{} <idx>`",
                            n + 1,
                            fields[0]
                        )));
                    }
                    joints[slot] = Some(number(fields[1])?);
                }
                _ => {
                    return Err(PoseError::Layout(format!(
                        "line {}: unknown directive `{}`",
                        n + 1,
                        fields[0]
                    )))
                }
            }
        }
        let missing = |name: &str| PoseError::Layout(format!("missing `{name}` directive"));
        let [body, face, lhand, rhand] = ranges;
        let [neck, lsh, rsh] = joints;
        Self::new(
            body.ok_or_else(|| missing("body"))?,
            face.ok_or_else(|| missing("face"))?,
            lhand.ok_or_else(|| missing("lhand"))?,
            rhand.ok_or_else(|| missing("rhand"))?,
            neck.ok_or_else(|| missing("neck"))?,
            lsh.ok_or_else(|| missing("lshoulder"))?,
            rsh.ok_or_else(|| missing("rshoulder"))?,
        )
    }

    pub fn to_descriptor(&self) -> String {
        let range = |name: &str, r: &Range<usize>| format!("{name} {} {}\n", r.start, r.len());
        let mut out = String::new();
        out += &range("body", &self.body);
        out += &range("face", &self.face);
        out += &range("lhand", &self.left_hand);
        out += &range("rhand", &self.right_hand);
        out += &format!("neck {}\n", self.neck);
        out += &format!("lshoulder {}\n", self.left_shoulder);
        out += &format!("rshoulder {}\n", self.right_shoulder);
        out
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn body(&self) -> Range<usize> {
        self.body.clone()
    }

    pub fn face(&self) -> Range<usize> {
        self.face.clone()
    }

    pub fn left_hand(&self) -> Range<usize> {
        self.left_hand.clone()
    }

    pub fn right_hand(&self) -> Range<usize> {
        self.right_hand.clone()
    }

    pub fn neck(&self) -> usize {
        self.neck
    }

    pub fn left_shoulder(&self) -> usize {
        self.left_shoulder
    }

    pub fn right_shoulder(&self) -> usize {
        self.right_shoulder
    }

    /// Indices of the hand keypoints selected by `which`, left hand first.
    pub fn hand_indices(&self, which: HandPoints) -> Vec<usize> {
        match which {
            HandPoints::All => self.left_hand().chain(self.right_hand()).collect(),
            HandPoints::Wrists => [&self.left_hand, &self.right_hand]
                .into_iter()
                .filter(|r| !r.is_empty())
                .map(|r| r.start)
                .collect(),
        }
    }
}
