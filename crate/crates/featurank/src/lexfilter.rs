//! Stopword filtering and the leading-window cut.
//!
//! Function words carry no topical signal, so they are removed before any
//! scoring happens. The window then keeps only the first N surviving tokens:
//! the opening of an article (title, authors, abstract) is where the
//! descriptive vocabulary concentrates, and cutting early also keeps later
//! technical notation out of the feature list.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ingest::ZonedToken;

/// Default number of post-filter tokens kept per document.
pub const DEFAULT_WINDOW: usize = 200;

/// English function words excluded by the filter.
const DEFAULT_STOPWORDS: &[&str] = &[
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "all",
    "also",
    "although",
    "am",
    "among",
    "an",
    "and",
    "any",
    "are",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "cannot",
    "could",
    "did",
    "do",
    "does",
    "doing",
    "down",
    "during",
    "each",
    "etc",
    "few",
    "for",
    "from",
    "further",
    "had",
    "has",
    "have",
    "having",
    "he",
    "hence",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "however",
    "i",
    "if",
    "in",
    "into",
    "is",
    "it",
    "its",
    "itself",
    "just",
    "may",
    "me",
    "might",
    "more",
    "most",
    "must",
    "my",
    "myself",
    "no",
    "nor",
    "not",
    "now",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "ought",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "per",
    "s",
    "same",
    "shall",
    "she",
    "should",
    "since",
    "so",
    "some",
    "such",
    "t",
    "than",
    "that",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "therefore",
    "these",
    "they",
    "this",
    "those",
    "though",
    "through",
    "thus",
    "to",
    "too",
    "under",
    "until",
    "up",
    "upon",
    "very",
    "via",
    "was",
    "we",
    "were",
    "what",
    "when",
    "where",
    "whether",
    "which",
    "while",
    "who",
    "whom",
    "why",
    "will",
    "with",
    "within",
    "without",
    "would",
    "yet",
    "you",
    "your",
    "yours",
    "yourself",
    "yourselves",
];

/// An immutable set of words to exclude from every token stream.
#[derive(Debug, Clone)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    /// The embedded default list of English function words.
    pub fn default_list() -> Self {
        StopwordSet {
            words: DEFAULT_STOPWORDS.iter().map(|w| w.to_string()).collect(),
        }
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        StopwordSet {
            words: words.into_iter().map(|w| w.into().to_lowercase()).collect(),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(|w| w.as_str())
    }
}

impl Default for StopwordSet {
    fn default() -> Self {
        Self::default_list()
    }
}

/// Loads a stopword list, or the embedded default when no path is given.
///
/// File format: one word per line, `#` starts a comment, blank lines are
/// ignored. A line with whitespace inside the word is rejected.
pub fn load_stopwords(path: Option<&Path>) -> Result<StopwordSet> {
    let Some(path) = path else {
        return Ok(StopwordSet::default_list());
    };
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut words = HashSet::new();
    for (idx, line) in text.lines().enumerate() {
        let entry = strip_comment(line).trim();
        if entry.is_empty() {
            continue;
        }
        if entry.chars().any(char::is_whitespace) {
            return Err(Error::format(
                path,
                idx + 1,
                format!("stopword entry \"{entry}\" contains whitespace"),
            ));
        }
        words.insert(entry.to_lowercase());
    }
    Ok(StopwordSet { words })
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Drops every token whose word is in the stopword set. Order, zones, and
/// original ordinals are preserved.
pub fn filter_stream(tokens: &[ZonedToken], stops: &StopwordSet) -> Vec<ZonedToken> {
    tokens
        .iter()
        .filter(|t| !stops.contains(&t.word))
        .cloned()
        .collect()
}

/// Keeps the first `n` tokens of an already-filtered stream. The window
/// counts post-filter tokens, so inserting stopwords into the original text
/// can never change what the window contains.
pub fn apply_window(tokens: &[ZonedToken], n: usize) -> Result<Vec<ZonedToken>> {
    if n == 0 {
        return Err(Error::validation("window size must be at least 1"));
    }
    Ok(tokens[..tokens.len().min(n)].to_vec())
}
