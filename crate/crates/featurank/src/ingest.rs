//! Document loading and zone segmentation.
//!
//! Documents arrive as plain text or HTML. Both are reduced to an ordered
//! stream of lowercase tokens, each annotated with the structural zone it
//! occurred in (title, heading, emphasis, anchor, or body). Zones drive the
//! weighting downstream: a word in the title counts for more than the same
//! word in running text.

use std::fmt;
use std::fs;
use std::path::Path;

use walkdir::WalkDir;

use crate::error::{Error, Result};

/// Structural location of a text run, ordered from least to most prominent.
///
/// The derived `Ord` follows the weight order: `Body < Anchor < Emphasis <
/// Heading < Title`. Nested markup resolves to the maximum zone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Zone {
    Body,
    Anchor,
    Emphasis,
    Heading,
    Title,
}

impl Zone {
    pub const ALL: [Zone; 5] = [
        Zone::Title,
        Zone::Heading,
        Zone::Emphasis,
        Zone::Anchor,
        Zone::Body,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Zone::Title => "title",
            Zone::Heading => "heading",
            Zone::Emphasis => "emphasis",
            Zone::Anchor => "anchor",
            Zone::Body => "body",
        }
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Input format, decided by file extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Html,
}

/// A document as loaded from disk, before any segmentation.
#[derive(Debug, Clone)]
pub struct RawDocument {
    pub id: String,
    pub format: Format,
    pub content: String,
}

impl RawDocument {
    pub fn new(id: impl Into<String>, format: Format, content: impl Into<String>) -> Self {
        RawDocument {
            id: id.into(),
            format,
            content: content.into(),
        }
    }
}

/// One lowercase word together with its zone and position in the stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZonedToken {
    pub word: String,
    pub zone: Zone,
    pub ordinal: usize,
}

/// Reads a document from disk. The id is the path as given; `.html`/`.htm`
/// extensions (case-insensitive) select HTML parsing, everything else is
/// plain text. Invalid UTF-8 bytes are replaced.
pub fn load_document(path: impl AsRef<Path>) -> Result<RawDocument> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let content = String::from_utf8_lossy(&bytes).into_owned();
    Ok(RawDocument {
        id: path.display().to_string(),
        format: format_for(path),
        content,
    })
}

/// Loads every regular file under `dir` as a document. Ids are paths
/// relative to `dir`, and the result is sorted by id so corpus order never
/// depends on directory iteration order.
pub fn load_corpus(dir: impl AsRef<Path>) -> Result<Vec<RawDocument>> {
    let dir = dir.as_ref();
    let mut docs = Vec::new();
    for entry in WalkDir::new(dir) {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(dir).to_path_buf();
            match e.into_io_error() {
                Some(io) => Error::io(path, io),
                None => Error::validation(format!("cannot walk {}", path.display())),
            }
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.path();
        let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
        let id = path
            .strip_prefix(dir)
            .unwrap_or(path)
            .to_string_lossy()
            .replace('\\', "/");
        docs.push(RawDocument {
            id,
            format: format_for(path),
            content: String::from_utf8_lossy(&bytes).into_owned(),
        });
    }
    docs.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(docs)
}

fn format_for(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("html") || ext.eq_ignore_ascii_case("htm") => {
            Format::Html
        }
        _ => Format::Plain,
    }
}

/// Segments a document into text runs annotated with zones.
///
/// HTML: `title`, `h1`/`h2`/`h3`, `b`/`i`/`blink`, and `a`/`u` open their
/// zones; all other markup is stripped and its text stays in the enclosing
/// zone (body at top level). Nested zones resolve to the heaviest one, and
/// a recognized tag left unclosed extends to the end of the document.
/// Malformed markup never fails, it just degrades to body text.
///
/// Plain text: the first non-empty line is the title, the rest is body.
pub fn parse_zones(doc: &RawDocument) -> Vec<(String, Zone)> {
    match doc.format {
        Format::Html => parse_html(&doc.content),
        Format::Plain => parse_plain(&doc.content),
    }
}

fn parse_plain(content: &str) -> Vec<(String, Zone)> {
    let mut runs = Vec::new();
    let mut rest = content;
    while let Some(newline) = rest.find('\n') {
        let (line, tail) = rest.split_at(newline);
        if !line.trim().is_empty() {
            runs.push((line.to_string(), Zone::Title));
            let body = &tail[1..];
            if !body.trim().is_empty() {
                runs.push((body.to_string(), Zone::Body));
            }
            return runs;
        }
        rest = &tail[1..];
    }
    // No newline left: the remainder is the title line, if any.
    if !rest.trim().is_empty() {
        runs.push((rest.to_string(), Zone::Title));
    }
    runs
}

fn zone_for_tag(name: &str) -> Option<Zone> {
    match name {
        "title" => Some(Zone::Title),
        "h1" | "h2" | "h3" => Some(Zone::Heading),
        "b" | "i" | "blink" => Some(Zone::Emphasis),
        "a" | "u" => Some(Zone::Anchor),
        _ => None,
    }
}

fn parse_html(content: &str) -> Vec<(String, Zone)> {
    let mut runs: Vec<(String, Zone)> = Vec::new();
    // Open recognized tags, innermost last. The effective zone of a run is
    // the maximum over the stack.
    let mut stack: Vec<(String, Zone)> = Vec::new();
    let mut text = String::new();
    let bytes = content.as_bytes();
    let mut i = 0;

    let mut flush = |text: &mut String, stack: &[(String, Zone)]| {
        if !text.trim().is_empty() {
            let zone = stack.iter().map(|(_, z)| *z).max().unwrap_or(Zone::Body);
            runs.push((std::mem::take(text), zone));
        } else {
            text.clear();
        }
    };

    while i < bytes.len() {
        if bytes[i] != b'<' {
            let start = i;
            while i < bytes.len() && bytes[i] != b'<' {
                i += 1;
            }
            decode_entities(&content[start..i], &mut text);
            continue;
        }
        // Any markup ends the current text run; stripped tags still
        // separate the words around them.
        flush(&mut text, &stack);
        // Comments may contain '>', skip them as a unit.
        if content[i..].starts_with("<!--") {
            match content[i + 4..].find("-->") {
                Some(end) => i += 4 + end + 3,
                None => i = bytes.len(),
            }
            continue;
        }
        let Some(close) = find_tag_end(content, i + 1) else {
            // '<' that never closes: degrade the rest to text.
            decode_entities(&content[i + 1..], &mut text);
            break;
        };
        let tag = &content[i + 1..close];
        i = close + 1;
        let (closing, name) = tag_name(tag);
        if let Some(zone) = zone_for_tag(&name) {
            if closing {
                if let Some(pos) = stack.iter().rposition(|(n, _)| *n == name) {
                    stack.remove(pos);
                }
            } else if !tag.trim_end().ends_with('/') {
                stack.push((name, zone));
            }
        }
        // Unrecognized tags are stripped without touching the zone stack.
    }
    flush(&mut text, &stack);
    runs
}

/// Finds the '>' that terminates a tag opened just before `from`, skipping
/// quoted attribute values.
fn find_tag_end(content: &str, from: usize) -> Option<usize> {
    let bytes = content.as_bytes();
    let mut quote: Option<u8> = None;
    let mut i = from;
    while i < bytes.len() {
        match (quote, bytes[i]) {
            (None, b'>') => return Some(i),
            (None, b'"') | (None, b'\'') => quote = Some(bytes[i]),
            (Some(q), c) if c == q => quote = None,
            _ => {}
        }
        i += 1;
    }
    None
}

fn tag_name(tag: &str) -> (bool, String) {
    let trimmed = tag.trim_start();
    let (closing, rest) = match trimmed.strip_prefix('/') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, trimmed),
    };
    let name: String = rest
        .chars()
        .take_while(|c| c.is_ascii_alphanumeric())
        .collect();
    (closing, name.to_ascii_lowercase())
}

/// Decodes the four entities the tokenizer cares about; every other `&`
/// sequence passes through literally.
fn decode_entities(text: &str, out: &mut String) {
    let mut rest = text;
    while let Some(amp) = rest.find('&') {
        out.push_str(&rest[..amp]);
        rest = &rest[amp..];
        let mut decoded = false;
        for (entity, ch) in [
            ("&amp;", '&'),
            ("&lt;", '<'),
            ("&gt;", '>'),
            ("&quot;", '"'),
        ] {
            if rest.starts_with(entity) {
                out.push(ch);
                rest = &rest[entity.len()..];
                decoded = true;
                break;
            }
        }
        if !decoded {
            out.push('&');
            rest = &rest[1..];
        }
    }
    out.push_str(rest);
}

/// Splits zone runs into lowercase tokens. Separators are every
/// non-alphanumeric character; tokens without a single letter (bare
/// numbers, reference markers) are dropped. Ordinals count surviving
/// tokens in reading order.
pub fn tokenize(runs: &[(String, Zone)]) -> Vec<ZonedToken> {
    let mut tokens = Vec::new();
    let mut ordinal = 0;
    for (text, zone) in runs {
        for piece in text.split(|c: char| !c.is_alphanumeric()) {
            if piece.is_empty() || !piece.chars().any(|c| c.is_alphabetic()) {
                continue;
            }
            tokens.push(ZonedToken {
                word: piece.to_lowercase(),
                zone: *zone,
                ordinal,
            });
            ordinal += 1;
        }
    }
    tokens
}
