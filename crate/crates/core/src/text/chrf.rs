use std::collections::HashMap;

use super::corpus::check_paired;
use super::TextError;

pub const CHAR_ORDER: usize = 6;
pub const BETA: f64 = 2.0;

fn char_stream(s: &str) -> Vec<char> {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn char_ngrams(chars: &[char], n: usize) -> HashMap<&[char], usize> {
    let mut counts = HashMap::new();
    if chars.len() >= n {
        for g in chars.windows(n) {
            *counts.entry(g).or_insert(0) += 1;
        }
    }
    counts
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct OrderStats {
    matches: usize,
    hyp: usize,
    reference: usize,
}

fn f_beta(stats: OrderStats, beta: f64) -> f64 {
    if stats.matches == 0 {
        return 0.0;
    }
    let p = stats.matches as f64 / stats.hyp as f64;
    let r = stats.matches as f64 / stats.reference as f64;
    let b2 = beta * beta;
    (1.0 + b2) * p * r / (b2 * p + r)
}

/// Character n-gram F-score (orders 1..=6, beta 2, whitespace removed) as a percentage.
///
/// Precision and recall are computed from corpus-pooled counts per order. Orders where
/// neither side has any n-gram are left out of the average.
pub fn chrf<S: AsRef<str>>(hyps: &[S], refs: &[S]) -> Result<f64, TextError> {
    check_paired(hyps.len(), refs.len())?;
    let mut stats = [OrderStats::default(); CHAR_ORDER];
    for (h, r) in hyps.iter().zip(refs) {
        let h = char_stream(h.as_ref());
        let r = char_stream(r.as_ref());
        for n in 1..=CHAR_ORDER {
            let hc = char_ngrams(&h, n);
            let rc = char_ngrams(&r, n);
            let st = &mut stats[n - 1];
            st.hyp += hc.values().sum::<usize>();
            st.reference += rc.values().sum::<usize>();
            st.matches += hc
                .iter()
                .map(|(g, c)| (*c).min(rc.get(g).copied().unwrap_or(0)))
                .sum::<usize>();
        }
    }
    let effective: Vec<f64> = stats
        .iter()
        .filter(|s| s.hyp > 0 || s.reference > 0)
        .map(|s| f_beta(*s, BETA))
        .collect();
    if effective.is_empty() {
        return Err(TextError::EmptyCorpus);
    }
    Ok(100.0 * effective.iter().sum::<f64>() / effective.len() as f64)
}
