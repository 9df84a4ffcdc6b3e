//! Shared helpers for the integration suites: an independent linear-solve
//! oracle for equilibrium energies, document generators, and scoring
//! shortcuts.

#![allow(dead_code)]
// Index loops below mirror the matrix arithmetic they implement.
#![allow(clippy::needless_range_loop)]

use featurank::{EnergyParams, ExpandedQuery, FeaturedWordList, Network, Pipeline, RawDocument};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
/// Deliberately has nothing in common with the fixed-point settle loop.
pub fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut sum = b[row];
        for k in row + 1..n {
            sum -= a[row][k] * x[k];
        }
        x[row] = sum / a[row][row];
    }
    x
}

/// Equilibrium energies by direct solve of `(I - alpha C) E = E0 + a` over
/// the active nodes; inactive nodes pin to zero.
pub fn equilibrium_oracle(
    adjacency: &[Vec<bool>],
    activations: &[f64],
    base_energy: f64,
    alpha: f64,
) -> Vec<f64> {
    let active: Vec<usize> = (0..activations.len())
        .filter(|&i| activations[i] > 0.0)
        .collect();
    let m = active.len();
    let mut a = vec![vec![0.0; m]; m];
    let mut b = vec![0.0; m];
    for (r, &i) in active.iter().enumerate() {
        for (c, &j) in active.iter().enumerate() {
            a[r][c] = if r == c { 1.0 } else { 0.0 };
            if adjacency[i][j] {
                a[r][c] -= alpha;
            }
        }
        b[r] = base_energy + activations[i];
    }
    let solved = solve_linear(a, b);
    let mut energies = vec![0.0; activations.len()];
    for (r, &i) in active.iter().enumerate() {
        energies[i] = solved[r];
    }
    energies
}

/// A random all-active network instance satisfying the contraction bound
/// `alpha * max_degree < 0.9`.
pub struct RandomNetwork {
    pub words: Vec<String>,
    pub activations: Vec<f64>,
    pub adjacency: Vec<Vec<bool>>,
    pub alpha: f64,
}

pub fn random_network(rng: &mut ChaCha8Rng) -> RandomNetwork {
    let n = rng.random_range(1..=25);
    let words: Vec<String> = (0..n).map(|i| format!("w{i:02}")).collect();
    let activations: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..5.0)).collect();
    let edge_prob: f64 = rng.random_range(0.1..0.9);
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(edge_prob) {
                adjacency[i][j] = true;
                adjacency[j][i] = true;
            }
        }
    }
    let max_degree = adjacency
        .iter()
        .map(|row| row.iter().filter(|&&e| e).count())
        .max()
        .unwrap_or(0);
    let alpha = 0.9 * rng.random_range(0.05..1.0) / max_degree.max(1) as f64;
    RandomNetwork {
        words,
        activations,
        adjacency,
        alpha,
    }
}

impl RandomNetwork {
    pub fn build(&self) -> Network {
        let params = EnergyParams {
            coupling: self.alpha,
            ..EnergyParams::default()
        };
        let nodes = self
            .words
            .iter()
            .cloned()
            .zip(self.activations.iter().copied())
            .collect();
        Network::with_adjacency(nodes, self.adjacency.clone(), params)
            .expect("generated network is valid")
    }
}

/// Scores one featured list against a query via the full build, activate,
/// settle, sum sequence.
pub fn doc_score(fw: &FeaturedWordList, query: &ExpandedQuery, params: &EnergyParams) -> f64 {
    let mut net = Network::build(query, fw, params).expect("network builds");
    net.activate(fw);
    net.settle().expect("network settles");
    net.score()
}

pub const STOPWORD_POOL: &[&str] = &[
    "the",
    "of",
    "and",
    "is",
    "that",
    "so",
    "are",
    "with",
    "from",
    "this",
    "therefore",
];

/// A generated document rendered twice: verbatim, and with stopword tokens
/// deleted from the text before it ever reaches the pipeline.
pub struct DocPair {
    pub original: RawDocument,
    pub stripped: RawDocument,
}

fn mixed_tokens(rng: &mut ChaCha8Rng, content_pool: &[String], len: usize) -> Vec<String> {
    (0..len)
        .map(|_| {
            if rng.random_bool(0.4) {
                STOPWORD_POOL[rng.random_range(0..STOPWORD_POOL.len())].to_string()
            } else {
                content_pool[rng.random_range(0..content_pool.len())].clone()
            }
        })
        .collect()
}

fn strip(tokens: &[String]) -> Vec<String> {
    tokens
        .iter()
        .filter(|t| !STOPWORD_POOL.contains(&t.as_str()))
        .cloned()
        .collect()
}

/// A plain-text document whose title line always keeps at least one
/// content word, so stopword deletion never moves the title.
pub fn plain_doc_pair(rng: &mut ChaCha8Rng, id: &str, content_pool: &[String]) -> DocPair {
    let title_len = rng.random_range(0..3);
    let mut title = mixed_tokens(rng, content_pool, title_len);
    title.push(content_pool[rng.random_range(0..content_pool.len())].clone());
    let body_len = rng.random_range(20..120);
    let body = mixed_tokens(rng, content_pool, body_len);

    let original = format!("{}\n{}", title.join(" "), body.join(" "));
    let stripped = format!("{}\n{}", strip(&title).join(" "), strip(&body).join(" "));
    DocPair {
        original: RawDocument::new(id, featurank::Format::Plain, original),
        stripped: RawDocument::new(id, featurank::Format::Plain, stripped),
    }
}

/// An HTML document built from random zone spans.
pub fn html_doc_pair(rng: &mut ChaCha8Rng, id: &str, content_pool: &[String]) -> DocPair {
    const TAGS: &[Option<&str>] = &[
        Some("title"),
        Some("h2"),
        Some("b"),
        Some("a"),
        Some("u"),
        None,
    ];
    let mut original = String::new();
    let mut stripped = String::new();
    for _ in 0..rng.random_range(3..9) {
        let tag = TAGS[rng.random_range(0..TAGS.len())];
        let span_len = rng.random_range(1..25);
        let tokens = mixed_tokens(rng, content_pool, span_len);
        for (out, words) in [(&mut original, &tokens), (&mut stripped, &strip(&tokens))] {
            if let Some(tag) = tag {
                out.push_str(&format!("<{tag}>{}</{tag}>\n", words.join(" ")));
            } else {
                out.push_str(&words.join(" "));
                out.push('\n');
            }
        }
    }
    DocPair {
        original: RawDocument::new(id, featurank::Format::Html, original),
        stripped: RawDocument::new(id, featurank::Format::Html, stripped),
    }
}

/// Content-word pool for generators: short letter words that are not in
/// the default stopword list.
pub fn content_pool(rng: &mut ChaCha8Rng, size: usize) -> Vec<String> {
    let stops = featurank::StopwordSet::default_list();
    let mut pool = Vec::with_capacity(size);
    while pool.len() < size {
        let len = rng.random_range(3..9);
        let word: String = (0..len)
            .map(|_| (b'a' + rng.random_range(0..26u8)) as char)
            .collect();
        if !stops.contains(&word) && !pool.contains(&word) {
            pool.push(word);
        }
    }
    pool
}

/// Windowed featured words under the default pipeline.
pub fn featured(doc: &RawDocument) -> FeaturedWordList {
    Pipeline::default().featured_words(doc, None)
}
