//! The facet file format.
//!
//! ```text
//! # hollow tetrahedron with a spare vertex
//! vertices: a b c d e
//! a b c
//! a b d
//! a c d
//! b c d
//! ```
//!
//! `#` starts a comment. An optional `vertices:` header, before any facet,
//! fixes the vertex set and its order; without it vertices are numbered in
//! order of first appearance. Every other nonblank line is one facet.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use chorded_core::{Complex, Face, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// A parsed facet file and where it came from.
#[derive(Debug, Clone)]
pub struct FacetFile {
    pub path: PathBuf,
    pub complex: Complex,
}

impl FacetFile {
    pub fn read(path: &Path) -> Result<(Self, Vec<u8>), crate::CliError> {
        let bytes = std::fs::read(path).map_err(|e| crate::CliError::Io(path.to_path_buf(), e))?;
        let text = std::str::from_utf8(&bytes)
            .map_err(|_| crate::CliError::Input(format!("{}: not valid UTF-8", path.display())))?;
        let complex = parse_facet_file(text).map_err(|e| crate::CliError::Parse(path.to_path_buf(), e))?;
        Ok((
            FacetFile {
                path: path.to_path_buf(),
                complex,
            },
            bytes,
        ))
    }
}

pub fn parse_facet_file(text: &str) -> Result<Complex, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut declared = false;
    let mut facets: Vec<Face> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("vertices:") {
            if declared {
                return Err(err(line, "second vertices header"));
            }
            if !facets.is_empty() {
                return Err(err(line, "vertices header after the first facet"));
            }
            for l in rest.split_whitespace() {
                if labels.iter().any(|x| x == l) {
                    return Err(err(line, format!("duplicate label {l:?} in header")));
                }
                labels.push(l.to_owned());
            }
            if labels.len() > MAX_VERTICES {
                return Err(err(line, format!("more than {MAX_VERTICES} vertices")));
            }
            declared = true;
            continue;
        }
        let mut facet = Face::EMPTY;
        for l in body.split_whitespace() {
            let id = match labels.iter().position(|x| x == l) {
                Some(id) => id,
                None if declared => return Err(err(line, format!("label {l:?} is not declared in the header"))),
                None => {
                    if labels.len() == MAX_VERTICES {
                        return Err(err(line, format!("more than {MAX_VERTICES} vertices")));
                    }
                    labels.push(l.to_owned());
                    labels.len() - 1
                }
            };
            if facet.contains(id) {
                return Err(err(line, format!("duplicate label {l:?} in facet")));
            }
            facet = facet.with(id);
        }
        if facet.is_empty() {
            return Err(err(line, "empty facet"));
        }
        facets.push(facet);
    }
    Complex::new(labels, facets).map_err(|e| err(0, e.to_string()))
}

/// Renders a complex so that [`parse_facet_file`] reads it back unchanged.
pub fn to_facet_text(c: &Complex, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(comment) = comment {
        for l in comment.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    let _ = writeln!(out, "vertices: {}", c.labels().join(" "));
    for f in c.facet_labels() {
        let _ = writeln!(out, "{}", f.join(" "));
    }
    out
}
