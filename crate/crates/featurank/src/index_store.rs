//! Persistent feature index.
//!
//! Plain TSV, one header line then one `doc_id<TAB>word<TAB>score` record
//! per featured word. Records are canonically ordered (documents
//! ascending, then score descending, then word ascending) and scores carry
//! exactly six fractional digits, so identical input always serializes to
//! identical bytes. Files are written to a temporary sibling and renamed
//! into place.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::features::FeaturedWordList;

const HEADER: &str = "featured-index\t1";

/// Serializes featured lists to `path` in canonical order.
pub fn write_index(features: &[FeaturedWordList], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut docs: Vec<&FeaturedWordList> = features.iter().collect();
    docs.sort_by(|a, b| a.doc_id.cmp(&b.doc_id));
    for pair in docs.windows(2) {
        if pair[0].doc_id == pair[1].doc_id {
            return Err(Error::validation(format!(
                "duplicate document id \"{}\"",
                pair[0].doc_id
            )));
        }
    }

    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for fw in docs {
        if fw.doc_id.contains(['\t', '\n']) {
            return Err(Error::validation(format!(
                "document id {:?} contains tab or newline",
                fw.doc_id
            )));
        }
        let mut entries: Vec<(&str, f64)> = fw.iter().collect();
        entries.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        for (word, score) in entries {
            out.push_str(&format!("{}\t{}\t{:.6}\n", fw.doc_id, word, score));
        }
    }

    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    tmp.write_all(out.as_bytes())
        .map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// Reads an index back into featured lists, documents in file order.
pub fn read_index(path: impl AsRef<Path>) -> Result<Vec<FeaturedWordList>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first == HEADER => {}
        _ => {
            return Err(Error::format(
                path,
                1,
                format!("expected header \"{}\"", HEADER.replace('\t', "\\t")),
            ))
        }
    }

    let mut order: Vec<String> = Vec::new();
    let mut scores: HashMap<String, HashMap<String, f64>> = HashMap::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let mut fields = line.split('\t');
        let (Some(doc_id), Some(word), Some(score), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(Error::format(
                path,
                line_no,
                "expected doc_id\\tword\\tscore",
            ));
        };
        let score: f64 = score
            .parse()
            .map_err(|_| Error::format(path, line_no, format!("invalid score \"{score}\"")))?;
        if !score.is_finite() || score < 0.0 {
            return Err(Error::format(
                path,
                line_no,
                format!("score {score} out of range"),
            ));
        }
        if !scores.contains_key(doc_id) {
            order.push(doc_id.to_string());
        }
        scores
            .entry(doc_id.to_string())
            .or_default()
            .insert(word.to_string(), score);
    }

    Ok(order
        .into_iter()
        .map(|doc_id| {
            let words = scores.remove(&doc_id).unwrap_or_default();
            FeaturedWordList::new(doc_id, words)
        })
        .collect())
}
