//! featurank — featured-word extraction and activation-energy ranking.
//!
//! Documents are reduced to "featured words": the non-stopword tokens of
//! the leading window, scored by where they occur (title, headings,
//! emphasis, anchors, body) and optionally damped by collection frequency.
//! A query becomes a small network with one node per (expanded) term; a
//! node fires when any of its member words appears in a document's
//! featured list, firing strength follows the matched scores, and
//! connected active nodes exchange energy until equilibrium. A document's
//! rank is the total energy of its active nodes.
//!
//! The crate is organized along the pipeline:
//!
//! - [`ingest`]: loading, zone segmentation (HTML/plain), tokenization
//! - [`lexfilter`]: stopword filtering and the leading window
//! - [`features`]: zone-weighted scoring, idf damping, concept lists
//! - [`refine`]: synonym clusters and compound association
//! - [`energynet`]: the node network, equilibrium settle, ranking
//! - [`profile`]: top-k corpus word profiles
//! - [`index_store`]: the on-disk TSV feature index
//! - [`cli`]: the `featurank` command-line tool
//!
//! See the crate examples for a runnable tour of each capability.

pub mod cli;
pub mod energynet;
pub mod error;
pub mod features;
pub mod index_store;
pub mod ingest;
pub mod lexfilter;
pub mod pipeline;
pub mod profile;
pub mod refine;

pub use energynet::{rank, EnergyParams, Network, QueryNode, RankedResult};
pub use error::{Error, Result};
pub use features::{
    compute_idf, concept_list, extract_features, CorpusStats, FeaturedWordList, IdfWeights,
    ZoneWeights,
};
pub use index_store::{read_index, write_index};
pub use ingest::{
    load_corpus, load_document, parse_zones, tokenize, Format, RawDocument, Zone, ZonedToken,
};
pub use lexfilter::{apply_window, filter_stream, load_stopwords, StopwordSet, DEFAULT_WINDOW};
pub use pipeline::Pipeline;
pub use profile::{build_profile, QueryProfile};
pub use refine::{
    compound_match, expand_query, load_thesaurus, ClusterSet, ExpandedQuery, ExpandedTerm,
    SynonymCluster,
};
