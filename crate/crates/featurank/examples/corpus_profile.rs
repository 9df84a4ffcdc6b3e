//! Build a query profile — the most common non-stopword words of a corpus
//! — usable as a standing query for a specialized feed.
//!
//!     cargo run --example corpus_profile

use featurank::{build_profile, Format, Pipeline, RawDocument};

fn main() -> featurank::Result<()> {
    let issues = vec![
        RawDocument::new(
            "issue-01.txt",
            Format::Plain,
            "Complexity briefs\nnetworks of agents show emergent behavior; \
             emergent dynamics in networks remain hard to predict",
        ),
        RawDocument::new(
            "issue-02.txt",
            Format::Plain,
            "Weekly digest\nscaling laws in complex networks and the behavior \
             of cascades across networks",
        ),
        RawDocument::new(
            "issue-03.txt",
            Format::Plain,
            "Notes on emergence\nagents adapt, cascades propagate, and \
             behavior at scale stays emergent",
        ),
    ];

    let profile = build_profile(&issues, &Pipeline::default(), 10)?;
    println!("top words across {} issues:", issues.len());
    print!("{}", profile.to_lines());
    println!("\nfeed these to `rank --query-file` as a standing query.");
    Ok(())
}
