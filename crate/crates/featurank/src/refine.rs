//! Query refinement: synonym clusters and compound association.
//!
//! A cluster groups related words so that any member activates the shared
//! node — a search for "disease" should also fire on "illness" or
//! "ailment". Compound association catches fused tokens: the pair
//! ("neural", "physiology") should match "neurophysiology" even though
//! neither term appears on its own.

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lexfilter::strip_comment;

/// A group of related words sharing one canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynonymCluster {
    pub canonical: String,
    pub members: BTreeSet<String>,
}

/// A thesaurus: clusters with pairwise-disjoint member sets, so every word
/// activates at most one node.
#[derive(Debug, Clone, Default)]
pub struct ClusterSet {
    clusters: Vec<SynonymCluster>,
    by_word: HashMap<String, usize>,
}

impl ClusterSet {
    pub fn empty() -> Self {
        ClusterSet::default()
    }

    /// Builds a cluster set, rejecting any word that appears in two
    /// clusters.
    pub fn new(clusters: Vec<SynonymCluster>) -> Result<Self> {
        let mut by_word = HashMap::new();
        for (idx, cluster) in clusters.iter().enumerate() {
            debug_assert!(cluster.members.contains(&cluster.canonical));
            for word in &cluster.members {
                if by_word.insert(word.clone(), idx).is_some() {
                    return Err(Error::validation(format!(
                        "word \"{word}\" belongs to more than one cluster"
                    )));
                }
            }
        }
        Ok(ClusterSet { clusters, by_word })
    }

    pub fn lookup(&self, word: &str) -> Option<&SynonymCluster> {
        self.by_word.get(word).map(|&idx| &self.clusters[idx])
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SynonymCluster> {
        self.clusters.iter()
    }
}

/// Loads a thesaurus file: one cluster per line, comma-separated, first
/// entry canonical. Entries are lowercased and trimmed; `#` starts a
/// comment. A word appearing on two lines is an error naming both lines.
pub fn load_thesaurus(path: impl AsRef<Path>) -> Result<ClusterSet> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut clusters = Vec::new();
    let mut first_line_of: HashMap<String, usize> = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let entry = strip_comment(line).trim();
        if entry.is_empty() {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut canonical = None;
        for piece in entry.split(',') {
            let word = piece.trim().to_lowercase();
            if word.is_empty() {
                return Err(Error::format(path, line_no, "empty cluster entry"));
            }
            if let Some(&prev) = first_line_of.get(&word) {
                if prev != line_no {
                    return Err(Error::format(
                        path,
                        line_no,
                        format!("word \"{word}\" already appears on line {prev}"),
                    ));
                }
            } else {
                first_line_of.insert(word.clone(), line_no);
            }
            if canonical.is_none() {
                canonical = Some(word.clone());
            }
            members.insert(word);
        }
        if let Some(canonical) = canonical {
            clusters.push(SynonymCluster { canonical, members });
        }
    }
    ClusterSet::new(clusters)
}

/// One node of an expanded query: a canonical word, the member words that
/// activate it, and any compound patterns attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedTerm {
    pub canonical: String,
    pub members: BTreeSet<String>,
    pub compounds: Vec<(String, String)>,
}

/// Query terms after cluster expansion and compound generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedQuery {
    pub nodes: Vec<ExpandedTerm>,
}

impl ExpandedQuery {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Expands raw query terms into nodes.
///
/// Terms are lowercased and deduplicated. A term belonging to a cluster
/// carries the whole cluster as members (under the cluster's canonical
/// word), and two terms of the same cluster merge into one node. With
/// `compounds` enabled, every ordered pair of distinct raw terms (A, B)
/// attaches the pattern (A, B) to A's node.
pub fn expand_query<S: AsRef<str>>(
    terms: &[S],
    clusters: &ClusterSet,
    compounds: bool,
) -> Result<ExpandedQuery> {
    let mut raw: Vec<String> = Vec::new();
    for term in terms {
        let word = term.as_ref().trim().to_lowercase();
        if !word.is_empty() && !raw.contains(&word) {
            raw.push(word);
        }
    }
    if raw.is_empty() {
        return Err(Error::validation("query needs at least one term"));
    }

    let mut nodes: Vec<ExpandedTerm> = Vec::new();
    let mut node_of_term: HashMap<String, usize> = HashMap::new();
    for term in &raw {
        let (canonical, members) = match clusters.lookup(term) {
            Some(cluster) => (cluster.canonical.clone(), cluster.members.clone()),
            None => (term.clone(), BTreeSet::from([term.clone()])),
        };
        let idx = match nodes.iter().position(|n| n.canonical == canonical) {
            Some(idx) => idx,
            None => {
                nodes.push(ExpandedTerm {
                    canonical,
                    members,
                    compounds: Vec::new(),
                });
                nodes.len() - 1
            }
        };
        node_of_term.insert(term.clone(), idx);
    }

    if compounds {
        for a in &raw {
            for b in &raw {
                if a != b {
                    nodes[node_of_term[a]]
                        .compounds
                        .push((a.clone(), b.clone()));
                }
            }
        }
    }

    Ok(ExpandedQuery { nodes })
}

/// Decides whether `token` looks like a compound of `A` followed by `B`.
///
/// The token must end with `B` (and not be `B` alone), the leading segment
/// must be no longer than `A`, and that segment must share a prefix of at
/// least `min(4, len(A))` characters with `A`. This accepts both the plain
/// concatenation "neuralphysiology" and the fused "neurophysiology" while
/// never firing on `B` by itself.
pub fn compound_match(token: &str, a: &str, b: &str) -> bool {
    if token == b || !token.ends_with(b) {
        return false;
    }
    let head: Vec<char> = token[..token.len() - b.len()].chars().collect();
    let a_chars: Vec<char> = a.chars().collect();
    if head.len() > a_chars.len() {
        return false;
    }
    let common = head
        .iter()
        .zip(&a_chars)
        .take_while(|(x, y)| x == y)
        .count();
    common >= a_chars.len().min(4)
}
