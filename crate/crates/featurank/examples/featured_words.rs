//! Extract featured words from one HTML document and print its concept
//! list: parse zones, tokenize, filter stopwords, window, score.
//!
//!     cargo run --example featured_words

use featurank::{concept_list, parse_zones, Format, Pipeline, RawDocument};

const ARTICLE: &str = "\
<title>Adaptive Mesh Refinement for Shock Capturing</title>
<h2>Refinement criteria</h2>
<p>A mesh is refined where the shock indicator exceeds a threshold.
The indicator couples <b>pressure</b> jumps with entropy residuals,
and refinement stops once the mesh resolves the shock front.</p>
<h3>Results</h3>
<p>Adaptive refinement reduces cell counts by an order of magnitude
compared to a uniform mesh. See the <a>shock tube benchmark</a>.</p>";

fn main() {
    let doc = RawDocument::new("shock-capturing.html", Format::Html, ARTICLE);

    println!("zones:");
    for (run, zone) in parse_zones(&doc) {
        let preview: String = run.split_whitespace().collect::<Vec<_>>().join(" ");
        println!("  [{zone:>8}] {preview}");
    }

    let pipeline = Pipeline::default();
    let window = pipeline.window_tokens(&doc);
    println!("\nwindow: {} tokens after filtering", window.len());
    let first: Vec<&str> = window.iter().take(8).map(|t| t.word.as_str()).collect();
    println!("  starts with: {}", first.join(" "));

    let features = pipeline.featured_words(&doc, None);
    println!("\nfeatured words (word, zone-weighted score):");
    for word in concept_list(&features, 10) {
        println!("  {:20} {:>6.1}", word, features.score(&word).unwrap());
    }
}
