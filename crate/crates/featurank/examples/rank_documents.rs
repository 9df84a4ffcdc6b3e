//! Rank a small in-memory corpus against a query and show the per-node
//! energy breakdown behind each score.
//!
//!     cargo run --example rank_documents

use featurank::{expand_query, rank, ClusterSet, EnergyParams, Format, Pipeline, RawDocument};

fn main() -> featurank::Result<()> {
    let corpus = vec![
        RawDocument::new(
            "turbulence.html",
            Format::Html,
            "<title>Turbulence models for channel flow</title>\
             Reynolds stresses dominate the turbulence budget in channel flow.",
        ),
        RawDocument::new(
            "laminar.html",
            Format::Html,
            "<title>Laminar boundary layers</title>\
             The flow stays smooth; turbulence appears only past transition.",
        ),
        RawDocument::new(
            "cooking.txt",
            Format::Plain,
            "Slow cooking basics\nLow heat, long time, tender results.",
        ),
    ];

    let pipeline = Pipeline::default();
    let index = pipeline.index_corpus(&corpus, None);

    let query = expand_query(&["turbulence", "flow"], &ClusterSet::empty(), false)?;
    let params = EnergyParams::default();
    let results = rank(&index, &query, &params)?;

    println!("query: turbulence flow\n");
    for result in &results {
        println!("{:8.4}  {}", result.score, result.doc_id);
        for (word, energy) in &result.node_energies {
            println!("          {word:12} E = {energy:.4}");
        }
    }
    println!("\n(the cooking note matched nothing and is absent)");
    Ok(())
}
