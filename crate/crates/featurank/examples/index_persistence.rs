//! Persist a feature index to TSV and rank from the reloaded copy: the
//! file workflow behind `featurank index` and `featurank rank`.
//!
//!     cargo run --example index_persistence

use featurank::{
    compute_idf, expand_query, rank, read_index, write_index, ClusterSet, EnergyParams, Format,
    Pipeline, RawDocument,
};

fn main() -> featurank::Result<()> {
    let corpus = vec![
        RawDocument::new(
            "kalman.html",
            Format::Html,
            "<title>Kalman filtering</title>state estimation with noisy \
             measurements; the filter fuses prediction and measurement",
        ),
        RawDocument::new(
            "particle.html",
            Format::Html,
            "<title>Particle filters</title>sequential estimation when the \
             state model is nonlinear",
        ),
    ];

    let pipeline = Pipeline::default();
    let idf = compute_idf(&pipeline.corpus_stats(&corpus))?;
    let features = pipeline.index_corpus(&corpus, Some(&idf));

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("index.tsv");
    write_index(&features, &path)?;

    let text = std::fs::read_to_string(&path).expect("index readable");
    println!("index file ({} lines):", text.lines().count());
    for line in text.lines().take(6) {
        println!("  {line}");
    }
    println!("  ...");

    let reloaded = read_index(&path)?;
    let query = expand_query(&["estimation", "filter"], &ClusterSet::empty(), false)?;
    println!("\nranking from the reloaded index:");
    for result in rank(&reloaded, &query, &EnergyParams::default())? {
        println!("  {:7.4}  {}", result.score, result.doc_id);
    }
    Ok(())
}
