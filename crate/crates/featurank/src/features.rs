//! Featured-word scoring.
//!
//! A word's score in a document is the sum of the zone weights of its
//! occurrences inside the window, optionally damped by how common the word
//! is across the whole collection. The top of that list is what the
//! document is about.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ingest::{Zone, ZonedToken};
use crate::lexfilter::strip_comment;

/// Default size of a concept list.
pub const DEFAULT_CONCEPTS: usize = 15;

/// Per-zone scoring weights. Construction enforces the strict ordering
/// `title > heading > emphasis > anchor > body > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZoneWeights {
    title: f64,
    heading: f64,
    emphasis: f64,
    anchor: f64,
    body: f64,
}

impl ZoneWeights {
    pub fn new(title: f64, heading: f64, emphasis: f64, anchor: f64, body: f64) -> Result<Self> {
        let ordered = title > heading && heading > emphasis && emphasis > anchor && anchor > body;
        if !ordered || body <= 0.0 || !title.is_finite() {
            return Err(Error::validation(format!(
                "zone weights must satisfy title > heading > emphasis > anchor > body > 0, \
                 got {title}/{heading}/{emphasis}/{anchor}/{body}"
            )));
        }
        Ok(ZoneWeights {
            title,
            heading,
            emphasis,
            anchor,
            body,
        })
    }

    /// Parses a weights override file: one `zone=value` line per zone, all
    /// five zones exactly once. `#` comments and blank lines are ignored.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut values: HashMap<&str, f64> = HashMap::new();
        for (idx, line) in text.lines().enumerate() {
            let entry = strip_comment(line).trim();
            if entry.is_empty() {
                continue;
            }
            let Some((key, value)) = entry.split_once('=') else {
                return Err(Error::format(path, idx + 1, "expected zone=value"));
            };
            let key = key.trim().to_lowercase();
            let zone = Zone::ALL
                .iter()
                .find(|z| z.name() == key)
                .ok_or_else(|| Error::format(path, idx + 1, format!("unknown zone \"{key}\"")))?;
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::format(
                    path,
                    idx + 1,
                    format!("invalid weight \"{}\"", value.trim()),
                )
            })?;
            if values.insert(zone.name(), value).is_some() {
                return Err(Error::format(
                    path,
                    idx + 1,
                    format!("duplicate zone \"{key}\""),
                ));
            }
        }
        let get = |name: &str| {
            values
                .get(name)
                .copied()
                .ok_or_else(|| Error::validation(format!("weights file missing zone \"{name}\"")))
        };
        ZoneWeights::new(
            get("title")?,
            get("heading")?,
            get("emphasis")?,
            get("anchor")?,
            get("body")?,
        )
    }

    pub fn weight(&self, zone: Zone) -> f64 {
        match zone {
            Zone::Title => self.title,
            Zone::Heading => self.heading,
            Zone::Emphasis => self.emphasis,
            Zone::Anchor => self.anchor,
            Zone::Body => self.body,
        }
    }
}

impl Default for ZoneWeights {
    /// 8 / 4 / 2 / 1.5 / 1: one title occurrence outweighs several body
    /// occurrences.
    fn default() -> Self {
        ZoneWeights {
            title: 8.0,
            heading: 4.0,
            emphasis: 2.0,
            anchor: 1.5,
            body: 1.0,
        }
    }
}

/// Per-document map from word to its zone-weighted score.
#[derive(Debug, Clone, PartialEq)]
pub struct FeaturedWordList {
    pub doc_id: String,
    scores: HashMap<String, f64>,
}

impl FeaturedWordList {
    pub fn new(doc_id: impl Into<String>, scores: HashMap<String, f64>) -> Self {
        FeaturedWordList {
            doc_id: doc_id.into(),
            scores,
        }
    }

    pub fn score(&self, word: &str) -> Option<f64> {
        self.scores.get(word).copied()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.scores.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.scores.iter().map(|(w, s)| (w.as_str(), *s))
    }
}

/// Document-frequency statistics over a corpus.
#[derive(Debug, Clone, Default)]
pub struct CorpusStats {
    pub doc_count: usize,
    pub doc_freq: HashMap<String, usize>,
}

impl CorpusStats {
    /// Counts how many windows each word appears in.
    pub fn collect<'a, I>(windows: I) -> Self
    where
        I: IntoIterator<Item = &'a [ZonedToken]>,
    {
        let mut doc_count = 0;
        let mut doc_freq: HashMap<String, usize> = HashMap::new();
        for window in windows {
            doc_count += 1;
            let mut seen: Vec<&str> = window.iter().map(|t| t.word.as_str()).collect();
            seen.sort_unstable();
            seen.dedup();
            for word in seen {
                *doc_freq.entry(word.to_string()).or_insert(0) += 1;
            }
        }
        CorpusStats {
            doc_count,
            doc_freq,
        }
    }
}

/// Inverse-document-frequency damping factors.
#[derive(Debug, Clone)]
pub struct IdfWeights {
    values: HashMap<String, f64>,
    unseen: f64,
}

impl IdfWeights {
    /// The damping factor for `word`; words absent from the corpus get the
    /// maximum factor.
    pub fn value(&self, word: &str) -> f64 {
        self.values.get(word).copied().unwrap_or(self.unseen)
    }

    #[cfg(test)]
    pub(crate) fn from_values(values: HashMap<String, f64>, unseen: f64) -> Self {
        IdfWeights { values, unseen }
    }
}

/// Computes `idf(word) = ln(1 + doc_count / doc_freq(word))`; unseen words
/// (document frequency zero) get `ln(1 + doc_count)`.
pub fn compute_idf(stats: &CorpusStats) -> Result<IdfWeights> {
    if stats.doc_count == 0 {
        return Err(Error::validation(
            "corpus statistics need at least one document",
        ));
    }
    let n = stats.doc_count as f64;
    let values = stats
        .doc_freq
        .iter()
        .filter(|(_, df)| **df > 0)
        .map(|(word, df)| (word.clone(), (1.0 + n / *df as f64).ln()))
        .collect();
    Ok(IdfWeights {
        values,
        unseen: (1.0 + n).ln(),
    })
}

/// Scores every word in a filtered, truncated window:
/// `score(word) = idf(word) * sum of zone weights over its occurrences`.
pub fn extract_features(
    doc_id: &str,
    window: &[ZonedToken],
    weights: &ZoneWeights,
    idf: Option<&IdfWeights>,
) -> FeaturedWordList {
    let mut scores: HashMap<String, f64> = HashMap::new();
    for token in window {
        *scores.entry(token.word.clone()).or_insert(0.0) += weights.weight(token.zone);
    }
    if let Some(idf) = idf {
        for (word, score) in scores.iter_mut() {
            *score *= idf.value(word);
        }
    }
    FeaturedWordList {
        doc_id: doc_id.to_string(),
        scores,
    }
}

/// The top `k` featured words, score descending, ties broken
/// lexicographically. Asking for more words than exist returns them all.
pub fn concept_list(fw: &FeaturedWordList, k: usize) -> Vec<String> {
    let mut entries: Vec<(&str, f64)> = fw.iter().collect();
    entries.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    entries
        .into_iter()
        .take(k)
        .map(|(w, _)| w.to_string())
        .collect()
}
