//! Back-translation text metrics: BLEU-1..4, CHRF, ROUGE-L and WER with error
//! decomposition.

mod bleu;
mod chrf;
mod corpus;
mod rouge;
mod wer;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bleu::{bleu_corpus, BleuScore, MAX_ORDER};
pub use chrf::{chrf, BETA as CHRF_BETA, CHAR_ORDER as CHRF_ORDER};
pub use corpus::{pair_sentences, parse_sentence_file, tokenize, PairedSentences, TokenizedCorpus};
pub use rouge::{lcs_len, rouge_l, rouge_l_sentence};
pub use wer::{align_sentence, length_error_correlation, sentence_length_correlation, top_error_words, wer, EditOp, SentenceWer, WerBreakdown};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TextError {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("reference corpus has no tokens")]
    EmptyReference,
    #[error("{hyps} hypotheses but {refs} references")]
    LengthMismatch { hyps: usize, refs: usize },
    #[error("BLEU order {0} outside 1..=4")]
    InvalidOrder(usize),
    #[error("sentence file line {line}: {reason}")]
    SentenceFile { line: usize, reason: String },
    #[error("duplicate sentence id `{0}`")]
    DuplicateId(String),
    #[error("hypothesis and reference ids differ (missing hypotheses: {missing:?}, unexpected hypotheses: {extra:?})")]
    IdMismatch { missing: Vec<String>, extra: Vec<String> },
}

/// All back-translation scores for one system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TextScore {
    pub bleu: [f64; 4],
    pub chrf: f64,
    pub rouge: f64,
    pub wer: WerBreakdown,
}

pub fn score_text<S: AsRef<str>>(hyps: &[S], refs: &[S]) -> Result<TextScore, TextError> {
    let h = TokenizedCorpus::new(hyps.iter().map(AsRef::as_ref));
    let r = TokenizedCorpus::new(refs.iter().map(AsRef::as_ref));
    let b = bleu_corpus(&h, &r, MAX_ORDER)?;
    Ok(TextScore {
        bleu: [b.scores[0], b.scores[1], b.scores[2], b.scores[3]],
        chrf: chrf(hyps, refs)?,
        rouge: rouge_l(&h, &r)?,
        wer: wer(&h, &r)?,
    })
}
