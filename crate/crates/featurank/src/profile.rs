//! Corpus profiling: the most common non-stopword words across a
//! collection, usable as a standing query set for a specialized feed.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ingest::RawDocument;
use crate::pipeline::Pipeline;

/// Default profile size.
pub const DEFAULT_PROFILE: usize = 25;

/// The top words of a corpus with their window-level occurrence counts,
/// ordered by count descending then word ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryProfile {
    pub words: Vec<String>,
    pub counts: HashMap<String, u64>,
}

impl QueryProfile {
    pub fn count(&self, word: &str) -> u64 {
        self.counts.get(word).copied().unwrap_or(0)
    }

    /// `word<TAB>count` lines in profile order.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for word in &self.words {
            out.push_str(word);
            out.push('\t');
            out.push_str(&self.counts[word].to_string());
            out.push('\n');
        }
        out
    }
}

/// Counts token occurrences across every document's filtered window and
/// keeps the `k` most frequent words. Merging is a plain sum, so document
/// order never matters.
pub fn build_profile(docs: &[RawDocument], pipeline: &Pipeline, k: usize) -> Result<QueryProfile> {
    if docs.is_empty() {
        return Err(Error::validation("profile needs a nonempty corpus"));
    }
    if k == 0 {
        return Err(Error::validation("profile size must be at least 1"));
    }
    let mut counts: HashMap<String, u64> = HashMap::new();
    for doc in docs {
        for token in pipeline.window_tokens(doc) {
            *counts.entry(token.word).or_insert(0) += 1;
        }
    }
    let mut entries: Vec<(&String, &u64)> = counts.iter().collect();
    entries.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    let words: Vec<String> = entries
        .into_iter()
        .take(k)
        .map(|(w, _)| w.clone())
        .collect();
    let counts = words.iter().map(|w| (w.clone(), counts[w])).collect();
    Ok(QueryProfile { words, counts })
}
