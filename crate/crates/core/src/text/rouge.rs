use super::corpus::{check_paired, TokenizedCorpus};
use super::TextError;

pub fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// ROUGE-L F1 of one sentence pair, in [0, 1]. Two empty sentences score 1.
pub fn rouge_l_sentence(hyp: &[String], reference: &[String]) -> f64 {
    if hyp.is_empty() && reference.is_empty() {
        return 1.0;
    }
    let lcs = lcs_len(hyp, reference);
    if lcs == 0 {
        return 0.0;
    }
    let p = lcs as f64 / hyp.len() as f64;
    let r = lcs as f64 / reference.len() as f64;
    2.0 * p * r / (p + r)
}

/// Sentence-averaged ROUGE-L F1 as a percentage.
pub fn rouge_l(hyps: &TokenizedCorpus, refs: &TokenizedCorpus) -> Result<f64, TextError> {
    check_paired(hyps.len(), refs.len())?;
    let sum: f64 = hyps
        .sentences()
        .iter()
        .zip(refs.sentences())
        .map(|(h, r)| rouge_l_sentence(h, r))
        .sum();
    Ok(100.0 * sum / refs.len() as f64)
}
