//! The activation-energy ranking core.
//!
//! Each query node starts with the same base energy. Matching a node's
//! member words against a document's featured list fires the node with a
//! strength equal to the matched feature scores, so where a word occurred
//! (title vs body) is what decides how hard the node fires. Active nodes
//! are pairwise connected and exchange energy through a linear coupling
//! until the network reaches equilibrium; the document's score is the sum
//! of all active-node energies.
//!
//! With coupling `alpha` and adjacency `C`, equilibrium is the unique
//! fixed point of `E = E0 + a + alpha * C * E` over the active nodes,
//! which the settle loop approaches geometrically as long as
//! `alpha * max_degree < 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::features::FeaturedWordList;
use crate::refine::{compound_match, ExpandedQuery};

/// Tuning knobs for the energy network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyParams {
    /// Energy every node holds before any matching. Must be positive.
    pub base_energy: f64,
    /// Strength of energy exchange between connected nodes.
    pub coupling: f64,
    /// Settle stops once no node moved more than this between sweeps.
    pub tolerance: f64,
    /// Hard cap on settle sweeps; hitting it is a configuration error.
    pub max_iterations: usize,
    /// Maximum number of query nodes; more would blunt the ranking.
    pub node_cap: usize,
}

impl Default for EnergyParams {
    fn default() -> Self {
        EnergyParams {
            base_energy: 1.0,
            coupling: 0.05,
            tolerance: 1e-9,
            max_iterations: 10_000,
            node_cap: 25,
        }
    }
}

impl EnergyParams {
    fn validate(&self) -> Result<()> {
        if !(self.base_energy > 0.0 && self.base_energy.is_finite()) {
            return Err(Error::validation("base energy must be positive"));
        }
        if !(self.coupling >= 0.0 && self.coupling.is_finite()) {
            return Err(Error::validation("coupling alpha must be nonnegative"));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::validation("tolerance must be positive"));
        }
        if self.max_iterations == 0 {
            return Err(Error::validation("max iterations must be at least 1"));
        }
        if self.node_cap == 0 {
            return Err(Error::validation("node cap must be at least 1"));
        }
        Ok(())
    }
}

/// One network node bound to an expanded query term.
#[derive(Debug, Clone)]
pub struct QueryNode {
    pub canonical: String,
    pub members: std::collections::BTreeSet<String>,
    pub compounds: Vec<(String, String)>,
    pub activation: f64,
    pub energy: f64,
}

impl QueryNode {
    pub fn active(&self) -> bool {
        self.activation > 0.0
    }
}

/// Query nodes plus the adjacency among those that fired.
#[derive(Debug, Clone)]
pub struct Network {
    nodes: Vec<QueryNode>,
    adjacency: Vec<Vec<bool>>,
    params: EnergyParams,
}

impl Network {
    /// Builds the network for one document: a node per expanded query term
    /// (held in canonical-word order so node labels never affect the
    /// arithmetic), an edge between every pair of nodes that both match
    /// the featured list, and energies at zero pending [`Network::settle`].
    pub fn build(
        query: &ExpandedQuery,
        fw: &FeaturedWordList,
        params: &EnergyParams,
    ) -> Result<Network> {
        params.validate()?;
        if query.is_empty() {
            return Err(Error::validation("query needs at least one term"));
        }
        let n = query.len();
        if n > params.node_cap {
            return Err(Error::validation(format!(
                "query expands to {n} nodes, more than the cap of {}",
                params.node_cap
            )));
        }
        if n > 1 && params.coupling * (n - 1) as f64 >= 1.0 {
            return Err(Error::validation(format!(
                "coupling alpha {} with {n} nodes breaks the contraction bound alpha*(n-1) < 1",
                params.coupling
            )));
        }

        let fw_sorted = sorted_features(fw);
        let mut nodes: Vec<QueryNode> = query
            .nodes
            .iter()
            .map(|term| QueryNode {
                canonical: term.canonical.clone(),
                members: term.members.clone(),
                compounds: term.compounds.clone(),
                activation: 0.0,
                energy: 0.0,
            })
            .collect();
        nodes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
        for node in &mut nodes {
            node.activation = activation_for(node, fw, &fw_sorted);
        }

        let mut adjacency = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                adjacency[i][j] = i != j && nodes[i].active() && nodes[j].active();
            }
        }

        Ok(Network {
            nodes,
            adjacency,
            params: *params,
        })
    }

    /// Builds a network directly from canonical words, activations, and an
    /// explicit adjacency matrix, bypassing the query/feature matching.
    ///
    /// The adjacency must be symmetric with a zero diagonal and only
    /// connect active nodes, and `coupling * max_degree < 1` must hold —
    /// the exact condition under which [`Network::settle`] contracts.
    pub fn with_adjacency(
        nodes: Vec<(String, f64)>,
        adjacency: Vec<Vec<bool>>,
        params: EnergyParams,
    ) -> Result<Network> {
        params.validate()?;
        let n = nodes.len();
        if n == 0 {
            return Err(Error::validation("network needs at least one node"));
        }
        if n > params.node_cap {
            return Err(Error::validation(format!(
                "{n} nodes, more than the cap of {}",
                params.node_cap
            )));
        }
        {
            let mut canonicals: Vec<&str> = nodes.iter().map(|(w, _)| w.as_str()).collect();
            canonicals.sort_unstable();
            canonicals.dedup();
            if canonicals.len() != n {
                return Err(Error::validation("node words must be distinct"));
            }
        }
        if adjacency.len() != n || adjacency.iter().any(|row| row.len() != n) {
            return Err(Error::validation("adjacency must be square over the nodes"));
        }
        let mut max_degree = 0usize;
        for i in 0..n {
            if adjacency[i][i] {
                return Err(Error::validation("adjacency diagonal must be zero"));
            }
            let mut degree = 0;
            for j in 0..n {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::validation("adjacency must be symmetric"));
                }
                if adjacency[i][j] {
                    degree += 1;
                    if !(nodes[i].1 > 0.0 && nodes[j].1 > 0.0) {
                        return Err(Error::validation("edges may only connect active nodes"));
                    }
                }
            }
            max_degree = max_degree.max(degree);
        }
        for (word, activation) in &nodes {
            if !(activation.is_finite() && *activation >= 0.0) {
                return Err(Error::validation(format!(
                    "activation of \"{word}\" must be finite and nonnegative"
                )));
            }
        }
        if params.coupling * max_degree as f64 >= 1.0 {
            return Err(Error::validation(format!(
                "coupling alpha {} with max degree {max_degree} breaks the contraction bound \
                 alpha*degree < 1",
                params.coupling
            )));
        }
        let nodes = nodes
            .into_iter()
            .map(|(canonical, activation)| QueryNode {
                members: std::collections::BTreeSet::from([canonical.clone()]),
                canonical,
                compounds: Vec::new(),
                activation,
                energy: 0.0,
            })
            .collect();
        Ok(Network {
            nodes,
            adjacency,
            params,
        })
    }

    /// Recomputes each node's activation against a featured list: the sum
    /// of the feature scores of its matched members. Matching is exact
    /// whole-token equality, except compound patterns which use
    /// [`compound_match`]. Feature scores already embed zone weights, so
    /// firing strength follows place of occurrence.
    pub fn activate(&mut self, fw: &FeaturedWordList) {
        let fw_sorted = sorted_features(fw);
        for node in &mut self.nodes {
            node.activation = activation_for(node, fw, &fw_sorted);
            if !node.active() {
                node.energy = 0.0;
            }
        }
    }

    /// Iterates `E_i <- E0 + a_i + alpha * sum of connected energies` over
    /// the active nodes (inactive nodes stay at zero) until no energy
    /// moves more than the tolerance. Starts from `E_i = E0 + a_i`.
    pub fn settle(&mut self) -> Result<()> {
        let n = self.nodes.len();
        let e0 = self.params.base_energy;
        let alpha = self.params.coupling;
        let mut current: Vec<f64> = self
            .nodes
            .iter()
            .map(|node| {
                if node.active() {
                    e0 + node.activation
                } else {
                    0.0
                }
            })
            .collect();
        for _ in 0..self.params.max_iterations {
            let mut next = vec![0.0; n];
            let mut delta = 0.0f64;
            for i in 0..n {
                if !self.nodes[i].active() {
                    continue;
                }
                let mut coupled = 0.0;
                for (connected, energy) in self.adjacency[i].iter().zip(&current) {
                    if *connected {
                        coupled += energy;
                    }
                }
                next[i] = e0 + self.nodes[i].activation + alpha * coupled;
                delta = delta.max((next[i] - current[i]).abs());
            }
            current = next;
            if delta < self.params.tolerance {
                for (node, energy) in self.nodes.iter_mut().zip(&current) {
                    node.energy = *energy;
                }
                return Ok(());
            }
        }
        Err(Error::NonConvergence {
            iterations: self.params.max_iterations,
        })
    }

    /// Sum of active-node energies, accumulated in node order (canonical
    /// order for built networks). Zero when nothing fired.
    pub fn score(&self) -> f64 {
        self.nodes
            .iter()
            .filter(|node| node.active())
            .map(|node| node.energy)
            .sum()
    }

    /// Per-node equilibrium energies keyed by canonical word.
    pub fn node_energies(&self) -> BTreeMap<String, f64> {
        self.nodes
            .iter()
            .map(|node| (node.canonical.clone(), node.energy))
            .collect()
    }

    pub fn nodes(&self) -> &[QueryNode] {
        &self.nodes
    }

    pub fn connected(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }
}

fn sorted_features(fw: &FeaturedWordList) -> Vec<(&str, f64)> {
    let mut entries: Vec<(&str, f64)> = fw.iter().collect();
    entries.sort_by(|a, b| a.0.cmp(b.0));
    entries
}

fn activation_for(node: &QueryNode, fw: &FeaturedWordList, fw_sorted: &[(&str, f64)]) -> f64 {
    let mut activation = 0.0;
    for member in &node.members {
        if let Some(score) = fw.score(member) {
            activation += score;
        }
    }
    for (a, b) in &node.compounds {
        for (token, score) in fw_sorted {
            if compound_match(token, a, b) {
                activation += score;
            }
        }
    }
    activation
}

/// A document's equilibrium score with its per-node breakdown.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedResult {
    pub doc_id: String,
    pub score: f64,
    pub node_energies: BTreeMap<String, f64>,
}

/// Ranks a corpus of featured lists against an expanded query: each
/// document is scored independently (build, activate, settle, sum) and
/// only documents with a positive score are returned, highest first, ties
/// by document id.
pub fn rank(
    index: &[FeaturedWordList],
    query: &ExpandedQuery,
    params: &EnergyParams,
) -> Result<Vec<RankedResult>> {
    let mut results = Vec::new();
    for fw in index {
        let mut net = Network::build(query, fw, params)?;
        net.activate(fw);
        net.settle()?;
        let score = net.score();
        if score > 0.0 {
            results.push(RankedResult {
                doc_id: fw.doc_id.clone(),
                score,
                node_energies: net.node_energies(),
            });
        }
    }
    results.sort_by(|a, b| {
        b.score
            .total_cmp(&a.score)
            .then_with(|| a.doc_id.cmp(&b.doc_id))
    });
    Ok(results)
}
