//! Command-line entry points. Every subcommand is a thin wrapper over the
//! library: data goes to stdout, diagnostics to stderr, and the exit code
//! distinguishes usage (1), io (2), and validation (3) failures.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::energynet::{self, EnergyParams};
use crate::error::{Error, Result};
use crate::features::{compute_idf, concept_list, ZoneWeights, DEFAULT_CONCEPTS};
use crate::index_store::{read_index, write_index};
use crate::ingest::{load_corpus, load_document};
use crate::lexfilter::{load_stopwords, DEFAULT_WINDOW};
use crate::pipeline::Pipeline;
use crate::profile::{build_profile, DEFAULT_PROFILE};
use crate::refine::{expand_query, load_thesaurus, ClusterSet, ExpandedQuery};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "featurank",
    about = "Featured-word extraction and activation-energy document ranking",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a feature index from a directory of text/HTML documents.
    Index {
        /// Corpus directory.
        dir: PathBuf,
        /// Index file to write.
        #[arg(short, long)]
        output: PathBuf,
        /// Post-filter tokens kept per document.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
        /// Stopword file (one word per line) replacing the built-in list.
        #[arg(long)]
        stopwords: Option<PathBuf>,
        /// Zone weight overrides (five zone=value lines).
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Damp scores by collection frequency (adds a first pass).
        #[arg(long)]
        idf: bool,
    },
    /// Print the concept list of a single document.
    Features {
        /// Document to analyze.
        file: PathBuf,
        /// Number of concepts to print.
        #[arg(long, default_value_t = DEFAULT_CONCEPTS)]
        top: usize,
    },
    /// Rank indexed documents against a query.
    Rank {
        /// Feature index built by `index`.
        #[arg(long)]
        index: PathBuf,
        /// Whitespace-separated query terms.
        #[arg(long)]
        query: Option<String>,
        /// Read query terms from a profile file instead.
        #[arg(long)]
        query_file: Option<PathBuf>,
        /// Synonym clusters, one comma-separated cluster per line.
        #[arg(long)]
        thesaurus: Option<PathBuf>,
        /// Match fused compounds of query term pairs.
        #[arg(long)]
        compounds: bool,
        /// Coupling strength between connected nodes.
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Base energy of every node.
        #[arg(long, default_value_t = 1.0)]
        e0: f64,
        /// Results to print; 0 means all.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Print the most frequent non-stopword words of a corpus.
    Profile {
        /// Corpus directory.
        dir: PathBuf,
        /// Number of words to keep.
        #[arg(long, default_value_t = DEFAULT_PROFILE)]
        top: usize,
    },
    /// Show how a query expands through clusters and compounds.
    Expand {
        /// Synonym clusters, one comma-separated cluster per line.
        #[arg(long)]
        thesaurus: PathBuf,
        /// Whitespace-separated query terms.
        #[arg(long)]
        query: String,
        /// Attach compound patterns for every term pair.
        #[arg(long)]
        compounds: bool,
    },
}

/// Runs the CLI against process stdout/stderr and returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Runs the CLI against arbitrary output streams. Identical arguments over
/// identical files produce byte-identical streams.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io { .. } => EXIT_IO,
                Error::Format { .. } | Error::Validation(_) | Error::NonConvergence { .. } => {
                    EXIT_VALIDATION
                }
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Index {
            dir,
            output,
            window,
            stopwords,
            weights,
            idf,
        } => {
            let stopwords = load_stopwords(stopwords.as_deref())?;
            let weights = match weights {
                Some(path) => ZoneWeights::from_file(path)?,
                None => ZoneWeights::default(),
            };
            let pipeline = Pipeline::new(stopwords, weights, window)?;
            let docs = load_corpus(&dir)?;
            let idf = if idf {
                Some(compute_idf(&pipeline.corpus_stats(&docs))?)
            } else {
                None
            };
            let features = pipeline.index_corpus(&docs, idf.as_ref());
            write_index(&features, &output)?;
            Ok(EXIT_OK)
        }
        Command::Features { file, top } => {
            let doc = load_document(&file)?;
            let fw = Pipeline::default().featured_words(&doc, None);
            for word in concept_list(&fw, top) {
                writeln!(out, "{word}").map_err(|e| Error::io(&file, e))?;
            }
            Ok(EXIT_OK)
        }
        Command::Rank {
            index,
            query,
            query_file,
            thesaurus,
            compounds,
            alpha,
            e0,
            top,
        } => {
            let terms = match (query, query_file) {
                (Some(query), None) => split_terms(&query),
                (None, Some(path)) => read_query_file(&path)?,
                _ => {
                    let _ = writeln!(
                        err,
                        "error: rank needs exactly one of --query and --query-file"
                    );
                    return Ok(EXIT_USAGE);
                }
            };
            let clusters = match thesaurus {
                Some(path) => load_thesaurus(path)?,
                None => ClusterSet::empty(),
            };
            let expanded = expand_query(&terms, &clusters, compounds)?;
            let params = EnergyParams {
                base_energy: e0,
                coupling: alpha,
                ..EnergyParams::default()
            };
            let features = read_index(&index)?;
            let results = energynet::rank(&features, &expanded, &params)?;
            let shown = if top == 0 { results.len() } else { top };
            for result in results.iter().take(shown) {
                writeln!(out, "{:.4}\t{}", result.score, result.doc_id)
                    .map_err(|e| Error::io(&index, e))?;
            }
            Ok(EXIT_OK)
        }
        Command::Profile { dir, top } => {
            let docs = load_corpus(&dir)?;
            let profile = build_profile(&docs, &Pipeline::default(), top)?;
            out.write_all(profile.to_lines().as_bytes())
                .map_err(|e| Error::io(&dir, e))?;
            Ok(EXIT_OK)
        }
        Command::Expand {
            thesaurus,
            query,
            compounds,
        } => {
            let clusters = load_thesaurus(&thesaurus)?;
            let expanded = expand_query(&split_terms(&query), &clusters, compounds)?;
            out.write_all(format_expansion(&expanded).as_bytes())
                .map_err(|e| Error::io(&thesaurus, e))?;
            Ok(EXIT_OK)
        }
    }
}

fn split_terms(query: &str) -> Vec<String> {
    query.split_whitespace().map(|t| t.to_lowercase()).collect()
}

/// Reads query terms from a profile-style file: the first tab-separated
/// field of every non-blank line.
fn read_query_file(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .filter_map(|line| line.split('\t').next())
        .map(|w| w.trim().to_lowercase())
        .filter(|w| !w.is_empty())
        .collect())
}

fn format_expansion(expanded: &ExpandedQuery) -> String {
    let mut text = String::new();
    for node in &expanded.nodes {
        text.push_str(&node.canonical);
        text.push(':');
        for member in &node.members {
            text.push(' ');
            text.push_str(member);
        }
        for (a, b) in &node.compounds {
            text.push(' ');
            text.push_str(a);
            text.push('+');
            text.push_str(b);
        }
        text.push('\n');
    }
    text
}
