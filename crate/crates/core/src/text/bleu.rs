use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::corpus::{check_paired, TokenizedCorpus};
use super::TextError;

pub const MAX_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BleuScore {
    /// BLEU-1 ..= BLEU-max_n as percentages.
    pub scores: Vec<f64>,
    /// Clipped matches and hypothesis n-gram totals per order.
    pub matches: Vec<usize>,
    pub totals: Vec<usize>,
    pub hyp_len: usize,
    pub ref_len: usize,
    pub brevity_penalty: f64,
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for gram in tokens.windows(n) {
            *counts.entry(gram).or_insert(0) += 1;
        }
    }
    counts
}

/// Corpus-level BLEU with pooled clipped n-gram counts and no smoothing: an order with
/// zero matches sends that and every higher BLEU-n to 0.
pub fn bleu_corpus(
    hyps: &TokenizedCorpus,
    refs: &TokenizedCorpus,
    max_n: usize,
) -> Result<BleuScore, TextError> {
    if !(1..=MAX_ORDER).contains(&max_n) {
        return Err(TextError::InvalidOrder(max_n));
    }
    check_paired(hyps.len(), refs.len())?;
    let ref_len = refs.token_count();
    if ref_len == 0 {
        return Err(TextError::EmptyReference);
    }
    let hyp_len = hyps.token_count();

    let mut matches = vec![0usize; max_n];
    let mut totals = vec![0usize; max_n];
    for (h, r) in hyps.sentences().iter().zip(refs.sentences()) {
        for n in 1..=max_n {
            let ref_counts = ngram_counts(r, n);
            for (gram, count) in ngram_counts(h, n) {
                let clip = ref_counts.get(gram).copied().unwrap_or(0);
                matches[n - 1] += count.min(clip);
            }
            totals[n - 1] += h.len().saturating_sub(n - 1);
        }
    }

    let brevity_penalty = if hyp_len == 0 {
        0.0
    } else if hyp_len < ref_len {
        (1.0 - ref_len as f64 / hyp_len as f64).exp()
    } else {
        1.0
    };

    let mut scores = Vec::with_capacity(max_n);
    let mut log_sum = 0.0;
    let mut zero = false;
    for n in 1..=max_n {
        if matches[n - 1] == 0 {
            zero = true;
        } else {
            log_sum += (matches[n - 1] as f64 / totals[n - 1] as f64).ln();
        }
        let score = if zero {
            0.0
        } else {
            100.0 * brevity_penalty * (log_sum / n as f64).exp()
        };
        scores.push(score);
    }
    Ok(BleuScore {
        scores,
        matches,
        totals,
        hyp_len,
        ref_len,
        brevity_penalty,
    })
}
