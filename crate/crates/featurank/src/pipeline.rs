//! The document-to-features pipeline: zones, tokens, stopword filter,
//! window, scores. Everything downstream (ranking, profiling, indexing)
//! consumes windows or featured lists produced here.

use crate::error::Result;
use crate::features::{extract_features, CorpusStats, FeaturedWordList, IdfWeights, ZoneWeights};
use crate::ingest::{parse_zones, tokenize, RawDocument, ZonedToken};
use crate::lexfilter::{apply_window, filter_stream, StopwordSet, DEFAULT_WINDOW};

/// A reusable configuration for turning documents into featured lists.
#[derive(Debug, Clone)]
pub struct Pipeline {
    stopwords: StopwordSet,
    weights: ZoneWeights,
    window: usize,
}

impl Pipeline {
    pub fn new(stopwords: StopwordSet, weights: ZoneWeights, window: usize) -> Result<Self> {
        // Delegate the window >= 1 check.
        apply_window(&[], window)?;
        Ok(Pipeline {
            stopwords,
            weights,
            window,
        })
    }

    pub fn stopwords(&self) -> &StopwordSet {
        &self.stopwords
    }

    pub fn weights(&self) -> &ZoneWeights {
        &self.weights
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// The document's windowed token stream: zoned, tokenized, filtered,
    /// truncated.
    pub fn window_tokens(&self, doc: &RawDocument) -> Vec<ZonedToken> {
        let runs = parse_zones(doc);
        let tokens = tokenize(&runs);
        let filtered = filter_stream(&tokens, &self.stopwords);
        apply_window(&filtered, self.window).expect("window validated at construction")
    }

    /// Featured words for one document, optionally damped by corpus
    /// frequency.
    pub fn featured_words(&self, doc: &RawDocument, idf: Option<&IdfWeights>) -> FeaturedWordList {
        let window = self.window_tokens(doc);
        extract_features(&doc.id, &window, &self.weights, idf)
    }

    /// Document-frequency statistics over the corpus windows.
    pub fn corpus_stats(&self, docs: &[RawDocument]) -> CorpusStats {
        let windows: Vec<Vec<ZonedToken>> = docs.iter().map(|d| self.window_tokens(d)).collect();
        CorpusStats::collect(windows.iter().map(|w| w.as_slice()))
    }

    /// Featured lists for a whole corpus, in corpus order.
    pub fn index_corpus(
        &self,
        docs: &[RawDocument],
        idf: Option<&IdfWeights>,
    ) -> Vec<FeaturedWordList> {
        docs.iter().map(|d| self.featured_words(d, idf)).collect()
    }
}

impl Default for Pipeline {
    fn default() -> Self {
        Pipeline {
            stopwords: StopwordSet::default_list(),
            weights: ZoneWeights::default(),
            window: DEFAULT_WINDOW,
        }
    }
}
