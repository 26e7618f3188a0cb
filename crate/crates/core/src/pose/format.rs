//! Text pose files.
//!
//! ```text
//! POSE v1 <num_frames> <num_keypoints> <dims>
//! k0.x k0.y k0.z k1.x ...      (one line per frame)
//! ```
//!
//! Reading accepts any decimal float syntax including scientific notation. Writing uses
//! the shortest plain decimal that parses back to the identical value.

use std::fmt::Write as _;

use super::error::PoseError;
use super::layout::KeypointLayout;
use super::point::Point3;
use super::sequence::{Frame, PoseSequence};
use crate::scalar::Scalar;

const MAGIC: &str = "POSE";
const VERSION: &str = "v1";
const DIMS: usize = 3;

/// Parses a pose file against the default 178-keypoint layout.
pub fn parse_pose_file<T: Scalar>(text: &str, id: &str) -> Result<PoseSequence<T>, PoseError> {
    parse_pose_file_with_layout(text, id, &KeypointLayout::default())
}

pub fn parse_pose_file_with_layout<T: Scalar>(
    text: &str,
    id: &str,
    layout: &KeypointLayout,
) -> Result<PoseSequence<T>, PoseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| PoseError::Header("empty file".into()))?;
    let (frames, keypoints) = parse_header(header)?;
    if keypoints != layout.total() {
        return Err(PoseError::Header(format!(
            "header declares {keypoints} keypoints, layout has {}",
            layout.total()
        )));
    }
    if frames == 0 {
        return Err(PoseError::Header("header declares 0 frames".into()));
    }

    let expected = keypoints * DIMS;
    let mut out = Vec::with_capacity(frames);
    let mut coords: Vec<T> = Vec::with_capacity(expected);
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if out.len() == frames {
            return Err(PoseError::FrameCount {
                expected: frames,
                found: out.len() + 1 + count_data_lines_after(text, idx),
            });
        }
        coords.clear();
        for token in line.split_whitespace() {
            let value = T::parse_decimal(token).ok_or_else(|| PoseError::Token {
                line: line_no,
                column: column_of(line, token),
                token: token.to_string(),
                reason: "unparseable",
            })?;
            if !value.is_finite() {
                return Err(PoseError::Token {
                    line: line_no,
                    column: column_of(line, token),
                    token: token.to_string(),
                    reason: "non-finite",
                });
            }
            coords.push(value);
        }
        if coords.len() != expected {
            return Err(PoseError::ValueCount {
                line: line_no,
                expected,
                found: coords.len(),
            });
        }
        let points = coords
            .chunks_exact(DIMS)
            .map(|c| Point3::new(c[0], c[1], c[2]))
            .collect();
        out.push(Frame::new(points));
    }
    if out.len() != frames {
        return Err(PoseError::FrameCount {
            expected: frames,
            found: out.len(),
        });
    }
    PoseSequence::new(id, out, layout.clone())
}

fn parse_header(header: &str) -> Result<(usize, usize), PoseError> {
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != MAGIC {
        return Err(PoseError::Header(format!(
            "expected `{MAGIC} {VERSION} <frames> <keypoints> <dims>`, got `{header}`"
        )));
    }
    if fields[1] != VERSION {
        return Err(PoseError::Header(format!("unsupported version `{}`", fields[1])));
    }
    let count = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| PoseError::Header(format!("{what} `{s}` is not a count")))
    };
    let frames = count(fields[2], "frame count")?;
    let keypoints = count(fields[3], "keypoint count")?;
    let dims = count(fields[4], "dimensionality")?;
    if dims != DIMS {
        return Err(PoseError::Header(format!("only 3D poses are supported, got {dims} dims")));
    }
    Ok((frames, keypoints))
}

fn count_data_lines_after(text: &str, idx: usize) -> usize {
    text.lines().skip(idx + 1).filter(|l| !l.trim().is_empty()).count()
}

/// 1-based character column of `token`, which must be a subslice of `line`.
fn column_of(line: &str, token: &str) -> usize {
    let offset = token.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

/// Serializes a sequence. `parse_pose_file_with_layout(write_pose_file(s), ..)` reproduces
/// every coordinate bit for bit.
pub fn write_pose_file<T: Scalar>(seq: &PoseSequence<T>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC} {VERSION} {} {} {DIMS}", seq.len(), seq.point_count());
    for frame in seq.frames() {
        let mut first = true;
        for p in frame.points() {
            for c in p.coords() {
                if !first {
                    out.push(' ');
                }
                first = false;
                // Display for floats never uses exponent notation and is round-trip exact.
                let _ = write!(out, "{c}");
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeros_file(frames_declared: usize, frames_written: usize) -> String {
        let mut s = format!("POSE v1 {frames_declared} 178 3\n");
        for _ in 0..frames_written {
            s += &vec!["0"; 534].join(" ");
            s.push('\n');
        }
        s
    }

    #[test]
    fn single_origin_frame() {
        let seq: PoseSequence<f64> = parse_pose_file(&zeros_file(1, 1), "z").unwrap();
        assert_eq!(seq.len(), 1);
        assert!(seq.frames()[0].points().iter().all(|p| *p == Point3::origin()));
    }

    #[test]
    fn writes_origin_as_zeros() {
        let seq = PoseSequence::<f64>::new("z", vec![Frame::zeros(178)], KeypointLayout::default()).unwrap();
        assert_eq!(write_pose_file(&seq), zeros_file(1, 1));
    }

    #[test]
    fn frame_count_mismatch() {
        let err = parse_pose_file::<f64>(&zeros_file(2, 1), "z").unwrap_err();
        assert!(err.to_string().contains("frame count mismatch"));
        let err = parse_pose_file::<f64>(&zeros_file(1, 3), "z").unwrap_err();
        assert_eq!(err, PoseError::FrameCount { expected: 1, found: 3 });
    }

    #[test]
    fn wrong_value_count() {
        let text = format!("POSE v1 1 178 3\n{}\n", vec!["0"; 533].join(" "));
        let err = parse_pose_file::<f64>(&text, "z").unwrap_err();
        assert_eq!(err, PoseError::ValueCount { line: 2, expected: 534, found: 533 });
    }

    #[test]
    fn bad_token_reports_line_and_column() {
        let mut vals = vec!["0"; 534];
        vals[1] = "nan";
        let text = format!("POSE v1 1 178 3\n{}\n", vals.join(" "));
        let err = parse_pose_file::<f64>(&text, "z").unwrap_err();
        assert_eq!(
            err,
            PoseError::Token { line: 2, column: 3, token: "nan".into(), reason: "non-finite" }
        );
        vals[1] = "1,5";
        let text = format!("POSE v1 1 178 3\n{}\n", vals.join(" "));
        let err = parse_pose_file::<f64>(&text, "z").unwrap_err();
        assert!(matches!(err, PoseError::Token { reason: "unparseable", column: 3, .. }));
    }

    #[test]
    fn scientific_notation_accepted() {
        let mut vals = vec!["0"; 534];
        vals[0] = "1.5e-3";
        vals[2] = "-2E2";
        let text = format!("POSE v1 1 178 3\n{}\n", vals.join(" "));
        let seq = parse_pose_file::<f64>(&text, "z").unwrap();
        assert_eq!(seq.frames()[0][0], Point3::new(1.5e-3, 0.0, -200.0));
        assert!(write_pose_file(&seq).contains("0.0015 0 -200 "));
    }

    #[test]
    fn header_errors() {
        assert!(matches!(parse_pose_file::<f64>("", "z"), Err(PoseError::Header(_))));
        assert!(matches!(parse_pose_file::<f64>("POSE v2 1 178 3\n", "z"), Err(PoseError::Header(_))));
        assert!(matches!(parse_pose_file::<f64>("POSE v1 1 178 2\n", "z"), Err(PoseError::Header(_))));
        assert!(matches!(parse_pose_file::<f64>("POSE v1 1 100 3\n", "z"), Err(PoseError::Header(_))));
    }

    #[test]
    fn tiny_and_huge_values_round_trip_without_exponent() {
        let mut frame = Frame::<f64>::zeros(178);
        frame.points_mut()[0] = Point3::new(1e-300, -3.25e250, 0.1 + 0.2);
        let seq = PoseSequence::new("v", vec![frame], KeypointLayout::default()).unwrap();
        let text = write_pose_file(&seq);
        assert!(!text.lines().nth(1).unwrap().contains('e'));
        assert_eq!(parse_pose_file::<f64>(&text, "v").unwrap(), seq);
    }

    #[test]
    fn f32_round_trip() {
        let mut frame = Frame::<f32>::zeros(178);
        frame.points_mut()[5] = Point3::new(0.1, -7.123_456_7, 1e-20);
        let seq = PoseSequence::new("v", vec![frame], KeypointLayout::default()).unwrap();
        assert_eq!(parse_pose_file::<f32>(&write_pose_file(&seq), "v").unwrap(), seq);
    }
}
