//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `--nocapture` to see every line.

mod common;

use std::collections::HashMap;
use std::fmt::Write as _;

use featurank::{
    build_profile, expand_query, load_thesaurus, rank, ClusterSet, EnergyParams, Format, Network,
    Pipeline, RawDocument,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use common::{
    content_pool, doc_score, equilibrium_oracle, featured, html_doc_pair, plain_doc_pair,
    random_network,
};

/// Collects failures and prints exactly one line per criterion.
struct Criterion {
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion {
            label,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: pass", self.label);
        } else {
            println!("{}: FAIL", self.label);
            let mut report = String::new();
            for failure in &self.failures {
                let _ = writeln!(report, "  - {failure}");
            }
            panic!("{} failed:\n{report}", self.label);
        }
    }
}

fn plain(id: &str, content: &str) -> RawDocument {
    RawDocument::new(id, Format::Plain, content)
}

fn html(id: &str, content: &str) -> RawDocument {
    RawDocument::new(id, Format::Html, content)
}

fn simple_query(terms: &[&str]) -> featurank::ExpandedQuery {
    expand_query(terms, &ClusterSet::empty(), false).unwrap()
}

#[test]
fn criterion_01_whole_token_matching() {
    let mut c = Criterion::new("criterion 01 (whole-token matching)");
    let fw = featured(&plain("latin.txt", "Latin literature"));
    let params = EnergyParams::default();
    let query = simple_query(&["atin"]);

    let score = doc_score(&fw, &query, &params);
    c.check(score == 0.0, || {
        format!("query \"atin\" scored {score}, want exactly 0")
    });

    let results = rank(&[fw], &query, &params).unwrap();
    c.check(results.is_empty(), || {
        format!("rank returned {} results, want none", results.len())
    });
    c.finish();
}

#[test]
fn criterion_02_zone_ordering() {
    let mut c = Criterion::new("criterion 02 (zone ordering)");
    let corpus = vec![
        html("title.html", "<title>neural</title>"),
        html("heading.html", "<h1>neural</h1>"),
        html("emphasis.html", "<b>neural</b>"),
        html("anchor.html", "<a>neural</a>"),
        html("body.html", "neural"),
    ];
    let pipeline = Pipeline::default();
    let index = pipeline.index_corpus(&corpus, None);
    let results = rank(&index, &simple_query(&["neural"]), &EnergyParams::default()).unwrap();

    let got: Vec<&str> = results.iter().map(|r| r.doc_id.as_str()).collect();
    let want = [
        "title.html",
        "heading.html",
        "emphasis.html",
        "anchor.html",
        "body.html",
    ];
    c.check(got == want, || format!("rank order {got:?}, want {want:?}"));
    for pair in results.windows(2) {
        c.check(pair[0].score > pair[1].score, || {
            format!(
                "{} ({}) not strictly above {} ({})",
                pair[0].doc_id, pair[0].score, pair[1].doc_id, pair[1].score
            )
        });
    }
    c.finish();
}

#[test]
fn criterion_03_filter_invariance() {
    let mut c = Criterion::new("criterion 03 (filter invariance)");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pool = content_pool(&mut rng, 40);
    let params = EnergyParams::default();
    let query_terms: Vec<&str> = pool[..4].iter().map(|s| s.as_str()).collect();
    let query = simple_query(&query_terms);

    for i in 0..24 {
        let id = format!("doc{i:02}");
        let pair = if i % 2 == 0 {
            plain_doc_pair(&mut rng, &id, &pool)
        } else {
            html_doc_pair(&mut rng, &id, &pool)
        };
        let fw_original = featured(&pair.original);
        let fw_stripped = featured(&pair.stripped);

        let concepts_original = featurank::concept_list(&fw_original, 15);
        let concepts_stripped = featurank::concept_list(&fw_stripped, 15);
        c.check(concepts_original == concepts_stripped, || {
            format!("{id}: concept lists diverge: {concepts_original:?} vs {concepts_stripped:?}")
        });

        let score_original = doc_score(&fw_original, &query, &params);
        let score_stripped = doc_score(&fw_stripped, &query, &params);
        c.check(score_original == score_stripped, || {
            format!("{id}: scores diverge: {score_original} vs {score_stripped}")
        });
    }
    c.finish();
}

#[test]
fn criterion_04_equilibrium_vs_oracle() {
    let mut c = Criterion::new("criterion 04 (equilibrium vs oracle)");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..200 {
        let instance = random_network(&mut rng);
        let mut net = instance.build();
        net.settle().unwrap();
        let oracle = equilibrium_oracle(
            &instance.adjacency,
            &instance.activations,
            1.0,
            instance.alpha,
        );
        let energies = net.node_energies();
        let worst = instance
            .words
            .iter()
            .zip(&oracle)
            .map(|(word, expected)| (energies[word] - expected).abs())
            .fold(0.0f64, f64::max);
        c.check(worst <= 1e-6, || {
            format!("case {case}: max deviation from linear solve {worst:e} > 1e-6")
        });
    }

    // Hand-derived two-node case: E1 = 3 + 0.1 E2, E2 = 4 + 0.1 E1.
    let params = EnergyParams {
        coupling: 0.1,
        ..EnergyParams::default()
    };
    let fw = featurank::FeaturedWordList::new(
        "d",
        HashMap::from([("a".to_string(), 2.0), ("b".to_string(), 3.0)]),
    );
    let query = simple_query(&["a", "b"]);
    let mut net = Network::build(&query, &fw, &params).unwrap();
    net.activate(&fw);
    net.settle().unwrap();
    let energies = net.node_energies();
    c.check((energies["a"] - 340.0 / 99.0).abs() <= 1e-9, || {
        format!("E1 = {}, want 340/99", energies["a"])
    });
    c.check((energies["b"] - 430.0 / 99.0).abs() <= 1e-9, || {
        format!("E2 = {}, want 430/99", energies["b"])
    });
    c.check((net.score() - 70.0 / 9.0).abs() <= 1e-9, || {
        format!("score = {}, want 70/9", net.score())
    });
    c.finish();
}

#[test]
fn criterion_05_monotonicity() {
    let mut c = Criterion::new("criterion 05 (monotonicity)");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pool = content_pool(&mut rng, 30);
    let params = EnergyParams::default();
    let pipeline = Pipeline::default();

    for case in 0..1000 {
        let n_terms = rng.random_range(2..=5);
        let mut terms: Vec<&str> = Vec::new();
        while terms.len() < n_terms {
            let t = pool[rng.random_range(0..pool.len())].as_str();
            if !terms.contains(&t) {
                terms.push(t);
            }
        }
        let query = simple_query(&terms);

        let title: Vec<&str> = (0..rng.random_range(1..=3))
            .map(|_| pool[rng.random_range(0..pool.len())].as_str())
            .collect();
        let body: Vec<&str> = (0..rng.random_range(10..=80))
            .map(|_| pool[rng.random_range(0..pool.len())].as_str())
            .collect();
        let content = format!("{}\n{}", title.join(" "), body.join(" "));
        let doc = plain(&format!("doc{case}"), &content);
        let base = doc_score(&pipeline.featured_words(&doc, None), &query, &params);

        // Appending one occurrence of a query member never decreases the score.
        let member = terms[rng.random_range(0..terms.len())];
        let grown = plain(&doc.id, &format!("{content} {member}"));
        let grown_score = doc_score(&pipeline.featured_words(&grown, None), &query, &params);
        c.check(grown_score >= base, || {
            format!("case {case}: appending member \"{member}\" dropped {base} -> {grown_score}")
        });

        // Appending a word outside every member set changes nothing.
        let outsider = "zzznonmember";
        let padded = plain(&doc.id, &format!("{content} {outsider}"));
        let padded_score = doc_score(&pipeline.featured_words(&padded, None), &query, &params);
        c.check(padded_score == base, || {
            format!("case {case}: appending non-member moved {base} -> {padded_score}")
        });
    }
    c.finish();
}

#[test]
fn criterion_06_cluster_activation() {
    let mut c = Criterion::new("criterion 06 (cluster activation)");
    let dir = tempfile::tempdir().unwrap();
    let thesaurus = dir.path().join("thesaurus.txt");
    std::fs::write(&thesaurus, "disease, illness, ailment\n").unwrap();
    let clusters = load_thesaurus(&thesaurus).unwrap();
    let query = expand_query(&["disease"], &clusters, false).unwrap();
    let params = EnergyParams::default();

    let ailment_score = doc_score(&featured(&plain("a.txt", "ailment")), &query, &params);
    let illness_score = doc_score(&featured(&plain("i.txt", "illness")), &query, &params);
    c.check(ailment_score > 0.0, || {
        format!("\"ailment\" document scored {ailment_score}, want > 0")
    });
    c.check(ailment_score == illness_score, || {
        format!("cluster members disagree: {ailment_score} vs {illness_score}")
    });
    c.finish();
}

#[test]
fn criterion_07_compound_association() {
    let mut c = Criterion::new("criterion 07 (compound association)");
    let fw = featured(&plain("np.txt", "neurophysiology"));
    let params = EnergyParams::default();
    let terms = ["neural", "physiology"];

    let with = expand_query(&terms, &ClusterSet::empty(), true).unwrap();
    let with_score = doc_score(&fw, &with, &params);
    c.check(with_score > 0.0, || {
        format!("compounds on: scored {with_score}, want > 0")
    });

    let without = expand_query(&terms, &ClusterSet::empty(), false).unwrap();
    let without_score = doc_score(&fw, &without, &params);
    c.check(without_score == 0.0, || {
        format!("compounds off: scored {without_score}, want exactly 0")
    });
    c.finish();
}

#[test]
fn criterion_08_profile_oracle() {
    let mut c = Criterion::new("criterion 08 (profile oracle)");
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    // Plant known frequencies: word k occurs (k % 12) + 1 times, spread
    // over a 10-document corpus.
    let words: Vec<String> = (0..80).map(|k| format!("term{k:02}")).collect();
    let mut occurrences: Vec<&str> = Vec::new();
    let mut planted: HashMap<&str, u64> = HashMap::new();
    for (k, word) in words.iter().enumerate() {
        let count = (k % 12) as u64 + 1;
        planted.insert(word, count);
        for _ in 0..count {
            occurrences.push(word);
        }
    }
    occurrences.shuffle(&mut rng);
    let per_doc = occurrences.len().div_ceil(10);
    let corpus: Vec<RawDocument> = occurrences
        .chunks(per_doc)
        .enumerate()
        .map(|(i, chunk)| {
            plain(
                &format!("doc{i}.txt"),
                &format!("heading\n{}", chunk.join(" ")),
            )
        })
        .collect();

    let pipeline = Pipeline::default();

    // Brute-force counter over the same windows.
    let mut brute: HashMap<String, u64> = HashMap::new();
    for doc in &corpus {
        for token in pipeline.window_tokens(doc) {
            *brute.entry(token.word).or_insert(0) += 1;
        }
    }
    let mut expected: Vec<(&str, u64)> = brute.iter().map(|(w, c)| (w.as_str(), *c)).collect();
    expected.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));

    let profile = build_profile(&corpus, &pipeline, 25).unwrap();
    let top25: Vec<(&str, u64)> = profile
        .words
        .iter()
        .map(|w| (w.as_str(), profile.count(w)))
        .collect();
    c.check(top25 == expected[..25], || {
        format!(
            "top-25 mismatch:\n got {top25:?}\nwant {:?}",
            &expected[..25]
        )
    });

    // Window counts equal the planted frequencies ("heading" is the shared
    // title token).
    for (word, count) in &planted {
        c.check(brute.get(*word) == Some(count), || {
            format!(
                "planted count for {word} lost: {:?} vs {count}",
                brute.get(*word)
            )
        });
    }

    let full = build_profile(&corpus, &pipeline, 70).unwrap();
    c.check(full.words.len() == 70, || {
        format!("k=70 returned {} entries", full.words.len())
    });
    c.finish();
}

#[test]
fn criterion_09_persistence() {
    let mut c = Criterion::new("criterion 09 (persistence)");
    let corpus = vec![
        html(
            "a.html",
            "<title>spectral methods</title><h2>graph partitions</h2>graph spectral theory",
        ),
        html(
            "b.html",
            "<b>graph</b> theory<br>with <a>spectral</a> flavor",
        ),
        html("c.html", "plain commentary on partitions of graph spectra"),
        plain(
            "d.txt",
            "Spectral graph notes\ngraph graph spectral partitions",
        ),
        plain("e.txt", "Unrelated cooking notes\nflour water salt"),
    ];
    let pipeline = Pipeline::default();
    let stats = pipeline.corpus_stats(&corpus);
    let idf = featurank::compute_idf(&stats).unwrap();
    let index = pipeline.index_corpus(&corpus, Some(&idf));

    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("index.tsv");
    let second = dir.path().join("index2.tsv");
    featurank::write_index(&index, &first).unwrap();
    let reloaded = featurank::read_index(&first).unwrap();
    featurank::write_index(&reloaded, &second).unwrap();
    c.check(
        std::fs::read(&first).unwrap() == std::fs::read(&second).unwrap(),
        || "write-read-write changed bytes".to_string(),
    );

    let params = EnergyParams::default();
    let query = simple_query(&["graph", "spectral", "partitions"]);
    let in_memory = rank(&index, &query, &params).unwrap();
    let from_disk = rank(&reloaded, &query, &params).unwrap();
    c.check(in_memory.len() == from_disk.len(), || {
        format!(
            "result counts differ: {} vs {}",
            in_memory.len(),
            from_disk.len()
        )
    });
    for (mem, disk) in in_memory.iter().zip(&from_disk) {
        c.check(mem.doc_id == disk.doc_id, || {
            format!("order differs: {} vs {}", mem.doc_id, disk.doc_id)
        });
        c.check((mem.score - disk.score).abs() <= 1e-5, || {
            format!(
                "{}: reloaded score {} departs from {} by more than 1e-5",
                mem.doc_id, disk.score, mem.score
            )
        });
    }
    c.finish();
}

#[test]
fn criterion_10_contraction_guard() {
    let mut c = Criterion::new("criterion 10 (contraction guard)");

    // Build-time rejection surfaces as CLI validation exit code 3.
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("docs");
    std::fs::create_dir(&corpus).unwrap();
    std::fs::write(corpus.join("a.txt"), "alpha beta\nalpha beta gamma").unwrap();
    std::fs::write(corpus.join("b.txt"), "beta gamma\nmore beta text").unwrap();
    let index = dir.path().join("index.tsv");
    let index_arg = index.to_str().unwrap();

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = featurank::cli::run_with(
        [
            "featurank",
            "index",
            corpus.to_str().unwrap(),
            "-o",
            index_arg,
        ],
        &mut out,
        &mut err,
    );
    c.check(code == 0, || format!("index failed with code {code}"));

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = featurank::cli::run_with(
        [
            "featurank",
            "rank",
            "--index",
            index_arg,
            "--query",
            "alpha beta",
            "--alpha",
            "1.0",
        ],
        &mut out,
        &mut err,
    );
    c.check(code == 3, || {
        format!("alpha*(n-1) >= 1 exited {code}, want validation code 3")
    });
    c.check(out.is_empty(), || {
        "validation failure wrote to stdout".to_string()
    });

    // Every guard-passing configuration from the criterion-4 ensemble
    // settles inside the iteration budget.
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..200 {
        let instance = random_network(&mut rng);
        let mut net = instance.build();
        let settled = net.settle();
        c.check(settled.is_ok(), || {
            format!("case {case}: settle failed: {:?}", settled.err())
        });
    }
    c.finish();
}
