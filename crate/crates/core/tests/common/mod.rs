//! Brute-force oracles shared by the property tests and the acceptance suite. None of
//! them call into the code paths they check.
#![allow(dead_code)]

use slp_eval::pose::{Frame, KeypointLayout, Point3, PoseSequence};
use slp_eval::synth::FixtureRng;

/// Layout with `n >= 3` keypoints, all of them body points.
pub fn body_only_layout(n: usize) -> KeypointLayout {
    KeypointLayout::new(0..n, n..n, n..n, n..n, 0, 1, 2).unwrap()
}

pub fn random_sequence(rng: &mut FixtureRng, id: &str, frames: usize, keypoints: usize) -> PoseSequence<f64> {
    let frames = (0..frames)
        .map(|_| {
            Frame::new(
                (0..keypoints)
                    .map(|_| Point3::new(rng.symmetric(1.0), rng.symmetric(1.0), rng.symmetric(1.0)))
                    .collect(),
            )
        })
        .collect();
    PoseSequence::new(id, frames, body_only_layout(keypoints)).unwrap()
}

fn joint_error(a: &Frame<f64>, b: &Frame<f64>) -> f64 {
    let mut s = 0.0;
    for k in 0..a.len() {
        let (p, q) = (a[k], b[k]);
        s += ((p.x - q.x).powi(2) + (p.y - q.y).powi(2) + (p.z - q.z).powi(2)).sqrt();
    }
    s / a.len() as f64
}

/// Exhaustive DTW: every monotone path from (0, 0) to (P-1, R-1). Returns the mean cost
/// of the cheapest path (shortest among equally cheap ones).
pub fn dtw_mje_exhaustive(pred: &PoseSequence<f64>, reference: &PoseSequence<f64>) -> f64 {
    let (p, r) = (pred.len(), reference.len());
    let mut best = (f64::INFINITY, usize::MAX);
    fn walk(
        i: usize,
        j: usize,
        cost: f64,
        len: usize,
        p: usize,
        r: usize,
        d: &dyn Fn(usize, usize) -> f64,
        best: &mut (f64, usize),
    ) {
        let cost = cost + d(i, j);
        let len = len + 1;
        if i == p - 1 && j == r - 1 {
            if cost < best.0 || (cost == best.0 && len < best.1) {
                *best = (cost, len);
            }
            return;
        }
        if i + 1 < p && j + 1 < r {
            walk(i + 1, j + 1, cost, len, p, r, d, best);
        }
        if i + 1 < p {
            walk(i + 1, j, cost, len, p, r, d, best);
        }
        if j + 1 < r {
            walk(i, j + 1, cost, len, p, r, d, best);
        }
    }
    let d = |i: usize, j: usize| joint_error(&pred.frames()[i], &reference.frames()[j]);
    walk(0, 0, 0.0, 0, p, r, &d, &mut best);
    best.0 / best.1 as f64
}

/// Minimum unit-cost alignment cost by trying every alignment.
pub fn edit_cost_exhaustive(hyp: &[String], reference: &[String]) -> usize {
    fn go(h: &[String], r: &[String]) -> usize {
        match (h.is_empty(), r.is_empty()) {
            (true, _) => r.len(),
            (_, true) => h.len(),
            _ => {
                let diag = go(&h[1..], &r[1..]) + usize::from(h[0] != r[0]);
                let del = go(h, &r[1..]) + 1;
                let ins = go(&h[1..], r) + 1;
                diag.min(del).min(ins)
            }
        }
    }
    go(hyp, reference)
}

/// `a` is at least as good as `b` on leaderboard column `m` (raw values).
fn no_worse(m: usize, a: f64, b: f64) -> bool {
    match m {
        0..=5 => a >= b,
        6 | 7 => a <= b,
        _ => (a - 1.0).abs() <= (b - 1.0).abs(),
    }
}

fn strictly_better(m: usize, a: f64, b: f64) -> bool {
    no_worse(m, a, b) && !no_worse(m, b, a)
}

/// Raw-value Pareto dominance over the nine leaderboard columns.
pub fn dominates_raw(a: &[f64; 9], b: &[f64; 9]) -> bool {
    (0..9).all(|m| no_worse(m, a[m], b[m])) && (0..9).any(|m| strictly_better(m, a[m], b[m]))
}

/// Front peeling by repeated O(n^2) scans over the remaining entrants.
pub fn pareto_fronts_bruteforce(rows: &[[f64; 9]]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..rows.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let front: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| !remaining.iter().any(|&j| dominates_raw(&rows[j], &rows[i])))
            .collect();
        remaining.retain(|i| !front.contains(i));
        fronts.push(front);
    }
    fronts
}

/// Rotation matrix from Euler angles about z, then y, then x.
pub fn rotation_matrix(ax: f64, ay: f64, az: f64) -> [[f64; 3]; 3] {
    let (sx, cx) = ax.sin_cos();
    let (sy, cy) = ay.sin_cos();
    let (sz, cz) = az.sin_cos();
    let rx = [[1.0, 0.0, 0.0], [0.0, cx, -sx], [0.0, sx, cx]];
    let ry = [[cy, 0.0, sy], [0.0, 1.0, 0.0], [-sy, 0.0, cy]];
    let rz = [[cz, -sz, 0.0], [sz, cz, 0.0], [0.0, 0.0, 1.0]];
    let mul = |a: [[f64; 3]; 3], b: [[f64; 3]; 3]| {
        let mut c = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    mul(rx, mul(ry, rz))
}

pub fn rigid_transform(seq: &PoseSequence<f64>, rot: [[f64; 3]; 3], t: [f64; 3]) -> PoseSequence<f64> {
    seq.map_points(|p| {
        let v = [p.x, p.y, p.z];
        let r: Vec<f64> = (0..3).map(|i| (0..3).map(|k| rot[i][k] * v[k]).sum::<f64>() + t[i]).collect();
        Point3::new(r[0], r[1], r[2])
    })
}

pub fn max_coordinate_gap(a: &PoseSequence<f64>, b: &PoseSequence<f64>) -> f64 {
    a.frames()
        .iter()
        .zip(b.frames())
        .flat_map(|(fa, fb)| fa.points().iter().zip(fb.points()))
        .map(|(p, q)| (p.x - q.x).abs().max((p.y - q.y).abs()).max((p.z - q.z).abs()))
        .fold(0.0, f64::max)
}

/// Largest change of any intra-frame pairwise keypoint distance.
pub fn max_bone_length_change(a: &PoseSequence<f64>, b: &PoseSequence<f64>) -> f64 {
    let mut worst: f64 = 0.0;
    for (fa, fb) in a.frames().iter().zip(b.frames()) {
        let n = fa.len();
        for i in 0..n {
            for j in i + 1..n {
                let da = fa[i].distance(fa[j]);
                let db = fb[i].distance(fb[j]);
                worst = worst.max((da - db).abs());
            }
        }
    }
    worst
}
