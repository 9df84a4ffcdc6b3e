//! Query refinement: synonym clusters firing on any member, and compound
//! patterns matching fused tokens.
//!
//!     cargo run --example query_expansion

use featurank::{
    compound_match, expand_query, ClusterSet, EnergyParams, Format, Pipeline, RawDocument,
    SynonymCluster,
};

fn main() -> featurank::Result<()> {
    // Usually loaded from a thesaurus file; see `load_thesaurus`.
    let clusters = ClusterSet::new(vec![SynonymCluster {
        canonical: "disease".to_string(),
        members: ["disease", "illness", "ailment"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    }])?;

    let query = expand_query(&["disease", "neural", "physiology"], &clusters, true)?;
    println!("expanded query:");
    for node in &query.nodes {
        let members: Vec<&str> = node.members.iter().map(|m| m.as_str()).collect();
        println!("  {}: members {{{}}}", node.canonical, members.join(", "));
        for (a, b) in &node.compounds {
            println!("      compound pattern {a}+{b}");
        }
    }

    println!("\ncompound matching:");
    for token in [
        "neurophysiology",
        "neuralphysiology",
        "physiology",
        "biophysiology",
    ] {
        println!(
            "  neural+physiology vs {token:18} -> {}",
            compound_match(token, "neural", "physiology")
        );
    }

    // A document mentioning only "ailment" still scores for "disease",
    // and "neurophysiology" fires through the compound pattern.
    let pipeline = Pipeline::default();
    let doc = RawDocument::new(
        "clinic.txt",
        Format::Plain,
        "Ailment screening\nneurophysiology panels during the visit",
    );
    let features = pipeline.featured_words(&doc, None);
    let results = featurank::rank(&[features], &query, &EnergyParams::default())?;
    println!("\nscore for {}: {:.4}", results[0].doc_id, results[0].score);
    for (word, energy) in &results[0].node_energies {
        println!("  {word:12} E = {energy:.4}");
    }
    Ok(())
}
