mod common;

use proptest::prelude::*;

use common::*;
use slp_eval::metrics::{dtw_align, dtw_mje, hand_travel, total_distance_ratio};
use slp_eval::pose::{
    normalize_sequence, parse_pose_file_with_layout, write_pose_file, Frame, KeypointLayout, Point3, PoseSequence,
};
use slp_eval::ranking::{dominates, pareto_fronts, to_objectives, Metric, ScoreVector};
use slp_eval::synth::{synth_sequence, FixtureRng, SynthSpec};
use slp_eval::text::{
    align_sentence, bleu_corpus, chrf, rouge_l, tokenize, wer, TokenizedCorpus,
};

fn small_sequence(id: &'static str) -> impl Strategy<Value = PoseSequence<f64>> {
    (1usize..=6, 3usize..=5).prop_flat_map(move |(frames, keypoints)| {
        prop::collection::vec(prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64), keypoints), frames)
            .prop_map(move |fs| {
                let frames = fs
                    .into_iter()
                    .map(|f| Frame::new(f.into_iter().map(|(x, y, z)| Point3::new(x, y, z)).collect()))
                    .collect();
                PoseSequence::new(id, frames, body_only_layout(keypoints)).unwrap()
            })
    })
}

fn pair_same_width() -> impl Strategy<Value = (PoseSequence<f64>, PoseSequence<f64>)> {
    (1usize..=6, 1usize..=6, 3usize..=5, any::<u64>()).prop_map(|(p, r, k, seed)| {
        let mut rng = FixtureRng::new(seed);
        (random_sequence(&mut rng, "a", p, k), random_sequence(&mut rng, "b", r, k))
    })
}

fn synthetic(seed: u64, frames: usize) -> PoseSequence<f64> {
    let spec = SynthSpec {
        frame_count: frames,
        amplitude: 0.08,
        frequency: 1.0,
        seed,
    };
    synth_sequence(&spec, &KeypointLayout::default()).unwrap()
}

fn sentence(max: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(prop::sample::select(vec!["a", "b", "c"]), 0..=max)
        .prop_map(|v| v.into_iter().map(String::from).collect())
}

fn words(max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!["der", "regen", "kommt", "morgen", "im", "süden"]), 1..=max)
        .prop_map(|v| v.join(" "))
}

fn score_row() -> impl Strategy<Value = [f64; 9]> {
    prop::array::uniform9(0u8..4).prop_map(|a| a.map(|v| v as f64 * 0.5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pose_files_round_trip(seq in small_sequence("rt")) {
        let text = write_pose_file(&seq);
        let back: PoseSequence<f64> = parse_pose_file_with_layout(&text, "rt", seq.layout()).unwrap();
        prop_assert_eq!(back, seq);
    }

    #[test]
    fn dtw_matches_exhaustive_paths((a, b) in pair_same_width()) {
        let fast = dtw_mje(&a, &b).unwrap();
        let slow = dtw_mje_exhaustive(&a, &b);
        prop_assert!((fast - slow).abs() < 1e-9, "{fast} vs {slow}");
    }

    #[test]
    fn dtw_is_symmetric((a, b) in pair_same_width()) {
        let ab = dtw_align(&a, &b).unwrap();
        let ba = dtw_align(&b, &a).unwrap();
        prop_assert!((ab.mean_cost() - ba.mean_cost()).abs() < 1e-12);
        prop_assert_eq!(ab.len(), ba.len());
    }

    #[test]
    fn dtw_path_is_monotone_and_anchored((a, b) in pair_same_width()) {
        let path = dtw_align(&a, &b).unwrap();
        prop_assert_eq!(path.steps[0], (0, 0));
        prop_assert_eq!(*path.steps.last().unwrap(), (a.len() - 1, b.len() - 1));
        for w in path.steps.windows(2) {
            let (di, dj) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
            prop_assert!((di, dj) == (1, 0) || (di, dj) == (0, 1) || (di, dj) == (1, 1));
        }
    }

    #[test]
    fn dtw_of_sequence_with_itself_is_zero(a in small_sequence("s")) {
        prop_assert_eq!(dtw_mje(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn normalization_removes_rigid_motion(
        seed in any::<u64>(),
        ax in -3.1..3.1f64, ay in -1.5..1.5f64, az in -3.1..3.1f64,
        t in prop::array::uniform3(-5.0..5.0f64),
    ) {
        let seq = synthetic(seed, 6);
        let moved = rigid_transform(&seq, rotation_matrix(ax, ay, az), t);
        let a = normalize_sequence(&seq).unwrap();
        let b = normalize_sequence(&moved).unwrap();
        prop_assert!(max_coordinate_gap(&a, &b) < 1e-6);
        let again = normalize_sequence(&b).unwrap();
        prop_assert!(max_coordinate_gap(&again, &b) < 1e-9);
        prop_assert!(max_bone_length_change(&moved, &b) < 1e-9);
    }

    #[test]
    fn hand_travel_adds_over_split_sequences(seed in any::<u64>(), frames in 2usize..12, cut in 1usize..11) {
        let seq = synthetic(seed, frames);
        let cut = cut.min(frames - 1);
        let head = PoseSequence::new("h", seq.frames()[..=cut].to_vec(), seq.layout().clone()).unwrap();
        let tail = PoseSequence::new("t", seq.frames()[cut..].to_vec(), seq.layout().clone()).unwrap();
        let whole = hand_travel(&seq);
        prop_assert!((hand_travel(&head) + hand_travel(&tail) - whole).abs() < 1e-12 * whole.max(1.0));
    }

    #[test]
    fn total_distance_is_one_against_itself(seed in any::<u64>()) {
        let seq = synthetic(seed, 8);
        let r = total_distance_ratio(&seq, &seq).unwrap();
        prop_assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn wer_cost_matches_brute_force(h in sentence(5), r in sentence(5)) {
        let s = align_sentence(&h, &r);
        prop_assert_eq!(s.errors(), edit_cost_exhaustive(&h, &r));
        prop_assert_eq!(s.ref_tokens, r.len());
        prop_assert_eq!(s.substitutions + s.deletions, r.len() - s.trace.iter().filter(|o| matches!(o, slp_eval::text::EditOp::Match { .. })).count());
    }

    #[test]
    fn text_metrics_stay_in_range(pairs in prop::collection::vec((words(8), words(8)), 1..6)) {
        let (h, r): (Vec<String>, Vec<String>) = pairs.into_iter().unzip();
        let hc = TokenizedCorpus::new(&h);
        let rc = TokenizedCorpus::new(&r);
        for b in bleu_corpus(&hc, &rc, 4).unwrap().scores {
            prop_assert!((0.0..=100.0).contains(&b));
        }
        prop_assert!((0.0..=100.0).contains(&chrf(&h, &r).unwrap()));
        prop_assert!((0.0..=100.0).contains(&rouge_l(&hc, &rc).unwrap()));
        prop_assert!(wer(&hc, &rc).unwrap().rate >= 0.0);
    }

    #[test]
    fn corpus_metrics_ignore_sentence_order(pairs in prop::collection::vec((words(8), words(8)), 2..6), rot in 1usize..5) {
        let (h, r): (Vec<String>, Vec<String>) = pairs.into_iter().unzip();
        let k = rot % h.len();
        let mut h2 = h.clone();
        let mut r2 = r.clone();
        h2.rotate_left(k);
        r2.rotate_left(k);
        let score = |h: &[String], r: &[String]| {
            let (hc, rc) = (TokenizedCorpus::new(h), TokenizedCorpus::new(r));
            let b = bleu_corpus(&hc, &rc, 4).unwrap().scores;
            (b, chrf(h, r).unwrap(), rouge_l(&hc, &rc).unwrap(), wer(&hc, &rc).unwrap().rate)
        };
        let (a, b) = (score(&h, &r), score(&h2, &r2));
        for n in 0..4 {
            prop_assert!((a.0[n] - b.0[n]).abs() < 1e-9);
        }
        prop_assert!((a.1 - b.1).abs() < 1e-9);
        prop_assert!((a.2 - b.2).abs() < 1e-9);
        prop_assert!((a.3 - b.3).abs() < 1e-9);
    }

    #[test]
    fn bleu_clipped_matches_do_not_increase_with_order(pairs in prop::collection::vec((words(10), words(10)), 1..5)) {
        let (h, r): (Vec<String>, Vec<String>) = pairs.into_iter().unzip();
        let b = bleu_corpus(&TokenizedCorpus::new(&h), &TokenizedCorpus::new(&r), 4).unwrap();
        for n in 1..4 {
            prop_assert!(b.matches[n] <= b.matches[n - 1], "{:?}", b.matches);
            if b.scores[n - 1] == 0.0 {
                prop_assert_eq!(b.scores[n], 0.0);
            }
        }
    }

    #[test]
    fn identical_text_scores_perfectly(h in prop::collection::vec(words(8), 1..5)) {
        let c = TokenizedCorpus::new(&h);
        prop_assert_eq!(wer(&c, &c).unwrap().rate, 0.0);
        prop_assert!((rouge_l(&c, &c).unwrap() - 100.0).abs() < 1e-9);
        prop_assert!((chrf(&h, &h).unwrap() - 100.0).abs() < 1e-9);
        let longest = h.iter().map(|s| tokenize(s).len()).max().unwrap();
        let b = bleu_corpus(&c, &c, 4).unwrap().scores;
        for n in 0..longest.min(4) {
            prop_assert!((b[n] - 100.0).abs() < 1e-9);
        }
    }

    #[test]
    fn pareto_fronts_match_brute_force(rows in prop::collection::vec(score_row(), 1..10)) {
        let entries: Vec<ScoreVector<f64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| ScoreVector::from_row(format!("e{i}"), *r))
            .collect();
        prop_assert_eq!(pareto_fronts(&entries).unwrap().fronts, pareto_fronts_bruteforce(&rows));
    }

    #[test]
    fn dominance_is_irreflexive_and_asymmetric(a in score_row(), b in score_row()) {
        let oa = to_objectives(&ScoreVector::from_row("a", a)).unwrap();
        let ob = to_objectives(&ScoreVector::from_row("b", b)).unwrap();
        prop_assert!(!dominates(&oa, &oa).unwrap());
        prop_assert!(!(dominates(&oa, &ob).unwrap() && dominates(&ob, &oa).unwrap()));
        prop_assert_eq!(dominates(&oa, &ob).unwrap(), dominates_raw(&a, &b));
    }

    #[test]
    fn dominance_is_transitive(a in score_row(), b in score_row(), c in score_row()) {
        if dominates_raw(&a, &b) && dominates_raw(&b, &c) {
            let oa = to_objectives(&ScoreVector::from_row("a", a)).unwrap();
            let oc = to_objectives(&ScoreVector::from_row("c", c)).unwrap();
            prop_assert!(dominates(&oa, &oc).unwrap());
        }
    }
}

#[test]
fn total_distance_objective_is_distance_from_one() {
    let mut row = [0.0f64; 9];
    row[Metric::TotalDistance.index()] = 1.2;
    let over = to_objectives(&ScoreVector::from_row("over", row)).unwrap();
    row[Metric::TotalDistance.index()] = 0.8;
    let under = to_objectives(&ScoreVector::from_row("under", row)).unwrap();
    assert!((over.objectives[8] - under.objectives[8]).abs() < 1e-12);
}
