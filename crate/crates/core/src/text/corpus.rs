use std::collections::{HashMap, HashSet};

use super::TextError;

/// Lowercases and splits on runs of Unicode whitespace. Punctuation stays attached.
pub fn tokenize(sentence: &str) -> Vec<String> {
    sentence.split_whitespace().map(str::to_lowercase).collect()
}

/// Sentences with their tokenization, kept in corpus order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenizedCorpus {
    sentences: Vec<Vec<String>>,
    raw: Vec<String>,
}

impl TokenizedCorpus {
    pub fn new<S: AsRef<str>>(raw: impl IntoIterator<Item = S>) -> Self {
        let raw: Vec<String> = raw.into_iter().map(|s| s.as_ref().to_string()).collect();
        let sentences = raw.iter().map(|s| tokenize(s)).collect();
        Self { sentences, raw }
    }

    pub fn sentences(&self) -> &[Vec<String>] {
        &self.sentences
    }

    pub fn raw(&self) -> &[String] {
        &self.raw
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }
}

pub(crate) fn check_paired(hyps: usize, refs: usize) -> Result<(), TextError> {
    if refs == 0 {
        return Err(TextError::EmptyCorpus);
    }
    if hyps != refs {
        return Err(TextError::LengthMismatch { hyps, refs });
    }
    Ok(())
}

/// Parses `id<TAB>sentence` lines. A line with only an id is an empty sentence.
pub fn parse_sentence_file(text: &str) -> Result<Vec<(String, String)>, TextError> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            continue;
        }
        let (id, sentence) = line.split_once('\t').unwrap_or((line, ""));
        let id = id.trim();
        if id.is_empty() {
            return Err(TextError::SentenceFile {
                line: n + 1,
                reason: "empty id".into(),
            });
        }
        if !seen.insert(id.to_string()) {
            return Err(TextError::DuplicateId(id.to_string()));
        }
        out.push((id.to_string(), sentence.to_string()));
    }
    Ok(out)
}

/// Aligned hypothesis/reference sentences, in reference order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedSentences {
    pub ids: Vec<String>,
    pub hyps: Vec<String>,
    pub refs: Vec<String>,
}

/// Pairs hypotheses with references by id. Every reference needs a hypothesis and
/// vice versa.
pub fn pair_sentences(
    hyps: &[(String, String)],
    refs: &[(String, String)],
) -> Result<PairedSentences, TextError> {
    let by_id: HashMap<&str, &str> = hyps.iter().map(|(i, s)| (i.as_str(), s.as_str())).collect();
    let ref_ids: HashSet<&str> = refs.iter().map(|(i, _)| i.as_str()).collect();
    let missing: Vec<String> = refs
        .iter()
        .filter(|(i, _)| !by_id.contains_key(i.as_str()))
        .map(|(i, _)| i.clone())
        .collect();
    let extra: Vec<String> = hyps
        .iter()
        .filter(|(i, _)| !ref_ids.contains(i.as_str()))
        .map(|(i, _)| i.clone())
        .collect();
    if !missing.is_empty() || !extra.is_empty() {
        return Err(TextError::IdMismatch { missing, extra });
    }
    Ok(PairedSentences {
        ids: refs.iter().map(|(i, _)| i.clone()).collect(),
        hyps: refs.iter().map(|(i, _)| by_id[i.as_str()].to_string()).collect(),
        refs: refs.iter().map(|(_, s)| s.clone()).collect(),
    })
}
