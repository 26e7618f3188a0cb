use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::corpus::{check_paired, TokenizedCorpus};
use super::TextError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum EditOp {
    Match { token: String },
    Substitution { reference: String, hypothesis: String },
    Deletion { reference: String },
    Insertion { hypothesis: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceWer {
    pub substitutions: usize,
    pub deletions: usize,
    pub insertions: usize,
    pub ref_tokens: usize,
    pub trace: Vec<EditOp>,
}

impl SentenceWer {
    pub fn errors(&self) -> usize {
        self.substitutions + self.deletions + self.insertions
    }

    /// Percentage error rate, absent for an empty reference.
    pub fn rate(&self) -> Option<f64> {
        (self.ref_tokens > 0).then(|| 100.0 * self.errors() as f64 / self.ref_tokens as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WerBreakdown {
    pub substitutions: usize,
    pub deletions: usize,
    pub insertions: usize,
    pub ref_tokens: usize,
    /// `100 * (S + D + I) / N`; may exceed 100.
    pub rate: f64,
    pub per_sentence: Vec<SentenceWer>,
}

impl WerBreakdown {
    pub fn errors(&self) -> usize {
        self.substitutions + self.deletions + self.insertions
    }
}

/// Unit-cost token Levenshtein alignment of `hyp` against `reference`.
///
/// When several alignments reach the minimum cost the backtrace prefers, at each cell,
/// match/substitution, then deletion, then insertion.
pub fn align_sentence(hyp: &[String], reference: &[String]) -> SentenceWer {
    let (n, m) = (reference.len(), hyp.len());
    let width = m + 1;
    let mut d = vec![0usize; (n + 1) * width];
    for j in 0..=m {
        d[j] = j;
    }
    for i in 1..=n {
        d[i * width] = i;
        for j in 1..=m {
            let sub = d[(i - 1) * width + j - 1] + usize::from(reference[i - 1] != hyp[j - 1]);
            let del = d[(i - 1) * width + j] + 1;
            let ins = d[i * width + j - 1] + 1;
            d[i * width + j] = sub.min(del).min(ins);
        }
    }

    let mut trace = Vec::with_capacity(n.max(m));
    let (mut s, mut del, mut ins) = (0, 0, 0);
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        let here = d[i * width + j];
        if i > 0 && j > 0 {
            let same = reference[i - 1] == hyp[j - 1];
            if d[(i - 1) * width + j - 1] + usize::from(!same) == here {
                trace.push(if same {
                    EditOp::Match { token: reference[i - 1].clone() }
                } else {
                    s += 1;
                    EditOp::Substitution {
                        reference: reference[i - 1].clone(),
                        hypothesis: hyp[j - 1].clone(),
                    }
                });
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && d[(i - 1) * width + j] + 1 == here {
            del += 1;
            trace.push(EditOp::Deletion { reference: reference[i - 1].clone() });
            i -= 1;
        } else {
            ins += 1;
            trace.push(EditOp::Insertion { hypothesis: hyp[j - 1].clone() });
            j -= 1;
        }
    }
    trace.reverse();
    debug_assert_eq!(s + del + ins, d[n * width + m]);
    SentenceWer {
        substitutions: s,
        deletions: del,
        insertions: ins,
        ref_tokens: n,
        trace,
    }
}

/// Corpus WER: per-sentence alignments with counts summed over the corpus.
pub fn wer(hyps: &TokenizedCorpus, refs: &TokenizedCorpus) -> Result<WerBreakdown, TextError> {
    check_paired(hyps.len(), refs.len())?;
    let per_sentence: Vec<SentenceWer> = hyps
        .sentences()
        .iter()
        .zip(refs.sentences())
        .map(|(h, r)| align_sentence(h, r))
        .collect();
    let ref_tokens: usize = per_sentence.iter().map(|s| s.ref_tokens).sum();
    if ref_tokens == 0 {
        return Err(TextError::EmptyReference);
    }
    let substitutions = per_sentence.iter().map(|s| s.substitutions).sum();
    let deletions = per_sentence.iter().map(|s| s.deletions).sum();
    let insertions = per_sentence.iter().map(|s| s.insertions).sum();
    let mut out = WerBreakdown {
        substitutions,
        deletions,
        insertions,
        ref_tokens,
        rate: 0.0,
        per_sentence,
    };
    out.rate = 100.0 * out.errors() as f64 / ref_tokens as f64;
    Ok(out)
}

/// Reference tokens most often substituted or deleted, by descending count then token.
pub fn top_error_words(breakdown: &WerBreakdown, k: usize) -> Vec<(String, usize)> {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for op in breakdown.per_sentence.iter().flat_map(|s| &s.trace) {
        match op {
            EditOp::Substitution { reference, .. } | EditOp::Deletion { reference } => {
                *counts.entry(reference.as_str()).or_insert(0) += 1;
            }
            EditOp::Match { .. } | EditOp::Insertion { .. } => {}
        }
    }
    let mut ranked: Vec<(String, usize)> = counts.into_iter().map(|(t, c)| (t.to_string(), c)).collect();
    // BTreeMap order is lexicographic, and the sort is stable
    ranked.sort_by_key(|e| std::cmp::Reverse(e.1));
    ranked.truncate(k);
    ranked
}

/// Pearson correlation between reference sentence lengths and per-sentence error rates.
///
/// Absent when fewer than two pairs are given, the slices differ in length, or either
/// variable has zero variance.
pub fn length_error_correlation(refs: &TokenizedCorpus, rates: &[f64]) -> Option<f64> {
    let lengths: Vec<f64> = refs.sentences().iter().map(|s| s.len() as f64).collect();
    pearson(&lengths, rates)
}

/// Length/error correlation over the sentences of a breakdown with non-empty references.
pub fn sentence_length_correlation(breakdown: &WerBreakdown) -> Option<f64> {
    let (lengths, rates): (Vec<f64>, Vec<f64>) = breakdown
        .per_sentence
        .iter()
        .filter_map(|s| s.rate().map(|r| (s.ref_tokens as f64, r)))
        .unzip();
    pearson(&lengths, &rates)
}

pub(crate) fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}
